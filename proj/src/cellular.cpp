#include "diagcell/cellular.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace diagcell {

namespace {

std::string idx_str(const CellIndex& c) {
  return "(lambda=" + std::to_string(c.lambda) + ",s=" + std::to_string(c.s) +
         ",t=" + std::to_string(c.t) + ")";
}

PolyMatrix to_poly(const QMatrix& q) {
  PolyMatrix p(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) p(i, j) = DeltaPoly(q(i, j));
  }
  return p;
}

// Inverse of a square matrix over Q[delta] with unit determinant, via the
// adjugate.
PolyMatrix unit_inverse(const PolyMatrix& b, const DeltaPoly& d) {
  const std::size_t n = b.rows();
  PolyMatrix inv(n, n);
  Rational scale = Rational(1) / d.leading();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = b(r, c);
        }
        ++rr;
      }
      DeltaPoly cof = det(minor) * scale;
      inv(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return inv;
}

}  // namespace

CellDatum::CellDatum(std::shared_ptr<const TwistedAlgebra> algebra, std::vector<LambdaInfo> lambdas,
                     std::vector<std::pair<std::size_t, std::size_t>> strict_order, Basis basis)
    : algebra_(std::move(algebra)), lambdas_(std::move(lambdas)), basis_(std::move(basis)) {
  const std::size_t k = lambdas_.size();
  if (basis_.size() != k) throw Error(ErrorCode::SizeMismatch, "basis/lambda count mismatch");
  less_.assign(k, std::vector<bool>(k, false));
  for (auto [a, b] : strict_order) {
    if (a >= k || b >= k) throw Error(ErrorCode::UnknownLambda, "order pair out of range");
    less_[a][b] = true;
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (less_[a][a]) throw Error(ErrorCode::ValidationFailed, "poset order is reflexive");
    for (std::size_t b = 0; b < k; ++b) {
      if (!less_[a][b]) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (less_[b][c] && !less_[a][c]) {
          throw Error(ErrorCode::ValidationFailed, "poset order is not transitive");
        }
      }
    }
  }
  offsets_.resize(k);
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t m = lambdas_[l].index_size;
    if (basis_[l].size() != m) throw Error(ErrorCode::SizeMismatch, "index set size mismatch");
    offsets_[l] = flat_.size();
    for (std::size_t s = 0; s < m; ++s) {
      if (basis_[l][s].size() != m) throw Error(ErrorCode::SizeMismatch, "index set size mismatch");
      for (std::size_t t = 0; t < m; ++t) flat_.push_back({l, s, t});
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> CellDatum::strict_order() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < less_.size(); ++a) {
    for (std::size_t b = 0; b < less_.size(); ++b) {
      if (less_[a][b]) out.emplace_back(a, b);
    }
  }
  return out;
}

const CoordinateSolver& CellDatum::solver() const {
  std::call_once(cache_->once,
                 [this] { cache_->solver = std::make_shared<const CoordinateSolver>(*this); });
  return *cache_->solver;
}

CoordinateSolver::CoordinateSolver(const CellDatum& datum) : det_(1) {
  const std::size_t dim = datum.algebra().dimension();
  const std::size_t nb = datum.basis_size();
  // Union-find over basis vectors [0, nb) and elements [nb, nb + dim).
  std::vector<std::size_t> parent(nb + dim);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t f = 0; f < nb; ++f) {
    const auto& c = datum.cell_index(f);
    for (Element x : datum.C(c.lambda, c.s, c.t).support()) {
      std::size_t a = find(f), b = find(nb + x);
      if (a != b) parent[a] = b;
    }
  }
  std::map<std::size_t, std::size_t> block_id;
  for (std::size_t v = 0; v < nb + dim; ++v) {
    std::size_t r = find(v);
    auto [it, inserted] = block_id.emplace(r, blocks_.size());
    if (inserted) blocks_.emplace_back();
    if (v < nb) blocks_[it->second].basis.push_back(v);
    else blocks_[it->second].elements.push_back(static_cast<Element>(v - nb));
  }
  block_of_element_.assign(dim, 0);
  pos_in_block_.assign(dim, 0);
  if (nb != dim) {
    problem_ = "basis has " + std::to_string(nb) + " elements, algebra dimension " +
               std::to_string(dim);
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    Block& blk = blocks_[k];
    for (std::size_t p = 0; p < blk.elements.size(); ++p) {
      block_of_element_[blk.elements[p]] = k;
      pos_in_block_[blk.elements[p]] = p;
    }
    if (blk.basis.size() != blk.elements.size()) {
      if (problem_.empty()) {
        problem_ = "block with " + std::to_string(blk.basis.size()) + " basis vectors spans " +
                   std::to_string(blk.elements.size()) + " semigroup elements";
      }
      det_ = DeltaPoly();
      continue;
    }
    const std::size_t m = blk.basis.size();
    PolyMatrix b(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& c = datum.cell_index(blk.basis[j]);
      for (const auto& [x, coeff] : datum.C(c.lambda, c.s, c.t).terms()) {
        b(pos_in_block_[x], j) = coeff;
      }
    }
    DeltaPoly d;
    if (b.is_constant()) {
      QMatrix q = b.eval(0);
      Rational dq = diagcell::det(q);
      d = DeltaPoly(dq);
      if (dq != 0) blk.inverse = to_poly(q.inverse());
    } else {
      d = diagcell::det(b);
      if (is_unit(d)) blk.inverse = unit_inverse(b, d);
    }
    det_ *= d;
    if (!is_unit(d) && problem_.empty()) {
      problem_ = "block determinant " + d.to_string() + " is not a unit";
    }
  }
}

std::map<std::size_t, DeltaPoly> CoordinateSolver::express(const AlgebraElement& v) const {
  if (!valid()) throw Error(ErrorCode::ValidationFailed, "not a basis: " + problem_);
  std::map<std::size_t, DeltaPoly> out;
  for (const auto& [x, coeff] : v.terms()) {
    const Block& blk = blocks_[block_of_element_[x]];
    const std::size_t p = pos_in_block_[x];
    for (std::size_t i = 0; i < blk.basis.size(); ++i) {
      const DeltaPoly& w = blk.inverse(i, p);
      if (w.is_zero()) continue;
      DeltaPoly& slot = out[blk.basis[i]];
      slot += w * coeff;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

std::vector<AlgebraElement> lower_span_basis(const CellDatum& datum, std::size_t lambda) {
  if (lambda >= datum.lambda_count()) {
    throw Error(ErrorCode::UnknownLambda, std::to_string(lambda));
  }
  std::vector<AlgebraElement> out;
  for (std::size_t mu = 0; mu < datum.lambda_count(); ++mu) {
    if (!datum.less(mu, lambda)) continue;
    const std::size_t m = datum.index_size(mu);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < m; ++t) out.push_back(datum.C(mu, s, t));
    }
  }
  return out;
}

CheckReport check_C1(const CellDatum& datum, std::size_t ambient_dimension) {
  if (datum.basis_size() != ambient_dimension) {
    return CheckReport::fail("C1", "basis has " + std::to_string(datum.basis_size()) +
                                       " elements, dimension is " +
                                       std::to_string(ambient_dimension));
  }
  const auto& solver = datum.solver();
  if (!solver.valid()) return CheckReport::fail("C1", solver.problem());
  return CheckReport::pass("C1");
}

CheckReport check_C2(const CellDatum& datum) {
  const auto& alg = datum.algebra();
  for (std::size_t l = 0; l < datum.lambda_count(); ++l) {
    const std::size_t m = datum.index_size(l);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < m; ++t) {
        if (alg.involution(datum.C(l, s, t)) != datum.C(l, t, s)) {
          return CheckReport::fail("C2", idx_str({l, s, t}));
        }
      }
    }
  }
  return CheckReport::pass("C2");
}

namespace {

// r_a for one lambda; on failure returns the witness.
std::optional<std::string> structure_matrix(const CellDatum& datum, std::size_t lambda,
                                            const AlgebraElement& a, PolyMatrix& out) {
  const std::size_t m = datum.index_size(lambda);
  const auto& solver = datum.solver();
  const auto& alg = datum.algebra();
  out = PolyMatrix(m, m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      auto coords = solver.express(alg.mul(a, datum.C(lambda, s, t)));
      std::vector<DeltaPoly> column(m);
      for (const auto& [f, c] : coords) {
        const CellIndex& ci = datum.cell_index(f);
        if (ci.lambda == lambda) {
          if (ci.t != t) return idx_str({lambda, s, t}) + " has a term off column t";
          column[ci.s] = c;
        } else if (!datum.less(ci.lambda, lambda)) {
          return idx_str({lambda, s, t}) + " has a term in an incomparable or higher cell";
        }
      }
      for (std::size_t sp = 0; sp < m; ++sp) {
        if (t == 0) {
          out(sp, s) = column[sp];
        } else if (out(sp, s) != column[sp]) {
          return idx_str({lambda, s, t}) + " coefficients depend on t";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

StructureCoefficients check_C3(const CellDatum& datum,
                               const std::vector<AlgebraElement>& generators) {
  StructureCoefficients result;
  result.report = CheckReport::pass("C3");
  if (!datum.solver().valid()) {
    result.report = CheckReport::fail("C3", "C1 failed: " + datum.solver().problem());
    return result;
  }
  result.r.resize(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    result.r[g].resize(datum.lambda_count());
    for (std::size_t l = 0; l < datum.lambda_count(); ++l) {
      auto bad = structure_matrix(datum, l, generators[g], result.r[g][l]);
      if (bad) {
        result.report = CheckReport::fail("C3", "generator " + std::to_string(g) + ": " + *bad);
        return result;
      }
    }
  }
  return result;
}

std::vector<AlgebraElement> semigroup_basis(const TwistedAlgebra& algebra) {
  std::vector<AlgebraElement> out;
  out.reserve(algebra.dimension());
  for (Element x = 0; x < algebra.dimension(); ++x) out.push_back(AlgebraElement::basis(x));
  return out;
}

PolyMatrix cell_rho(const CellDatum& datum, std::size_t lambda, const AlgebraElement& a) {
  if (lambda >= datum.lambda_count()) throw Error(ErrorCode::UnknownLambda, std::to_string(lambda));
  PolyMatrix out;
  auto bad = structure_matrix(datum, lambda, a, out);
  if (bad) throw Error(ErrorCode::C3Violation, *bad);
  return out;
}

PolyMatrix phi_a(const CellDatum& datum, std::size_t lambda,
                 const std::optional<AlgebraElement>& a, std::size_t exhaustive_limit) {
  if (lambda >= datum.lambda_count()) throw Error(ErrorCode::UnknownLambda, std::to_string(lambda));
  const std::size_t m = datum.index_size(lambda);
  const auto& alg = datum.algebra();
  const auto& solver = datum.solver();

  // Value of phi_a(C_s, C_t) read off from C_{s's} a C_{tt'}.
  auto value = [&](std::size_t s, std::size_t t, std::size_t sp, std::size_t tp) {
    AlgebraElement left = a ? alg.mul(datum.C(lambda, sp, s), *a) : datum.C(lambda, sp, s);
    auto coords = solver.express(alg.mul(left, datum.C(lambda, t, tp)));
    DeltaPoly v;
    for (const auto& [f, c] : coords) {
      const CellIndex& ci = datum.cell_index(f);
      if (ci.lambda == lambda && ci.s == sp && ci.t == tp) {
        v = c;
      } else if (!datum.less(ci.lambda, lambda)) {
        throw Error(ErrorCode::InconsistentForm,
                    "C_{s's} a C_{tt'} leaves the span at " + idx_str({lambda, s, t}));
      }
    }
    return v;
  };

  PolyMatrix phi(m, m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) phi(s, t) = value(s, t, s, t);
  }
  std::vector<std::pair<std::size_t, std::size_t>> probes;
  if (m <= exhaustive_limit) {
    for (std::size_t sp = 0; sp < m; ++sp) {
      for (std::size_t tp = 0; tp < m; ++tp) probes.emplace_back(sp, tp);
    }
  } else {
    probes = {{0, 0}, {m - 1, m - 1}, {0, m - 1}};
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      for (auto [sp, tp] : probes) {
        if (value(s, t, sp, tp) != phi(s, t)) {
          throw Error(ErrorCode::InconsistentForm,
                      "value depends on (s', t') at " + idx_str({lambda, s, t}));
        }
      }
    }
  }
  return phi;
}

namespace {

bool identity_is_algebra_unit(const TwistedAlgebra& alg) {
  auto id = alg.identity();
  if (!id) return false;
  for (Element x = 0; x < alg.dimension(); ++x) {
    if (alg.alpha(*id, x) != DeltaPoly(1) || alg.alpha(x, *id) != DeltaPoly(1)) return false;
  }
  return true;
}

}  // namespace

PolyMatrix gram_matrix(const CellDatum& datum, std::size_t lambda, std::size_t exhaustive_limit) {
  const auto& alg = datum.algebra();
  if (identity_is_algebra_unit(alg)) {
    return phi_a(datum, lambda, AlgebraElement::basis(*alg.identity()), exhaustive_limit);
  }
  return phi_a(datum, lambda, std::nullopt, exhaustive_limit);
}

GramVerdict semisimple_by_gram(const CellDatum& datum, const Rational& delta) {
  GramVerdict v;
  for (std::size_t l = 0; l < datum.lambda_count(); ++l) {
    Rational d = det(gram_matrix(datum, l).eval(delta));
    if (d == 0) v.semisimple = false;
    v.determinants.push_back(d);
  }
  return v;
}

OracleVerdict radical_oracle(const FiniteSemigroup& s, const TwistingMap& alpha) {
  const std::size_t n = s.size();
  auto value = [&](Element x, Element y) -> Rational {
    const DeltaPoly& p = alpha(x, y);
    if (!p.is_constant()) {
      throw Error(ErrorCode::BadParameter, "radical oracle needs a specialized twisting");
    }
    return p.constant_term();
  };
  // L_x maps basis y to alpha(x, y) xy, so
  // tr(L_x L_y) = sum_z [x(yz) = z] alpha(x, yz) alpha(y, z).
  QMatrix form(n, n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Rational tr = 0;
      for (Element z = 0; z < n; ++z) {
        Element yz = s.mul(y, z);
        if (s.mul(x, yz) == z) tr += value(x, yz) * value(y, z);
      }
      form(x, y) = tr;
    }
  }
  OracleVerdict v;
  v.dimension = n;
  v.rank = form.rank();
  v.semisimple = v.rank == n;
  return v;
}

}  // namespace diagcell
