#include "diagcell/group_cell_data.hpp"

#include <functional>
#include <memory>
#include <numeric>

namespace diagcell {

std::vector<IntegerPartition> integer_partitions(std::size_t n) {
  std::vector<IntegerPartition> out;
  IntegerPartition cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<StandardTableau> standard_tableaux(const IntegerPartition& lambda) {
  const std::size_t n = std::accumulate(lambda.begin(), lambda.end(), std::size_t{0});
  std::vector<StandardTableau> out;
  StandardTableau cur;
  cur.rows.assign(lambda.size(), {});
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      const std::size_t len = cur.rows[r].size();
      if (len >= lambda[r]) continue;
      if (r > 0 && cur.rows[r - 1].size() <= len) continue;
      cur.rows[r].push_back(v);
      rec(v + 1);
      cur.rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

bool is_standard(const StandardTableau& t) {
  std::vector<bool> seen;
  std::size_t n = 0;
  for (const auto& row : t.rows) n += row.size();
  seen.assign(n + 1, false);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n || seen[row[c]]) return false;
      seen[row[c]] = true;
      if (c > 0 && row[c] <= row[c - 1]) return false;
      if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
    }
  }
  return true;
}

bool dominance_less(const IntegerPartition& a, const IntegerPartition& b) {
  const std::size_t na = std::accumulate(a.begin(), a.end(), std::size_t{0});
  const std::size_t nb = std::accumulate(b.begin(), b.end(), std::size_t{0});
  if (na != nb) throw Error(ErrorCode::SizeMismatch, to_string(a) + " vs " + to_string(b));
  if (a == b) return false;
  std::size_t sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

Permutation tableau_permutation(const StandardTableau& t) {
  std::size_t n = 0;
  for (const auto& row : t.rows) n += row.size();
  Permutation p(n);
  std::size_t reading = 0;
  for (const auto& row : t.rows) {
    for (std::size_t v : row) p[reading++] = v - 1;
  }
  return p;
}

std::string to_string(const IntegerPartition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string to_string(const StandardTableau& t) {
  std::string s = "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      s += (c ? "," : "") + std::to_string(t.rows[r][c]);
    }
    s += "]";
  }
  return s + "]";
}

namespace {

std::shared_ptr<const TwistedAlgebra> group_algebra(std::size_t n) {
  SymmetricGroup g = symmetric_group(n);
  auto alg = std::make_shared<TwistedAlgebra>();
  alg->semigroup = std::make_shared<const FiniteSemigroup>(std::move(g.table));
  alg->alpha = TwistingMap::trivial(alg->semigroup->size());
  alg->star = std::move(g.inversion);
  return alg;
}

AlgebraElement perm_element(const Permutation& p) {
  return AlgebraElement::basis(static_cast<Element>(permutation_rank(p)));
}

bool passes(const CellDatum& d) {
  return check_C1(d, d.algebra().dimension()).ok && check_C2(d).ok &&
         check_C3(d, semigroup_basis(d.algebra())).report.ok;
}

}  // namespace

CellDatum trivial_datum() {
  auto alg = group_algebra(1);
  CellDatum::Basis basis{{{AlgebraElement::basis(0)}}};
  CellDatum d(alg, {LambdaInfo{"(1)", 1, {"[[1]]"}}}, {}, std::move(basis));
  d.metadata()["group"] = "trivial";
  return d;
}

CellDatum murphy_datum(std::size_t n, std::size_t guard) {
  if (n > guard) {
    throw Error(ErrorCode::RankTooLarge, "symmetric group degree " + std::to_string(n) +
                                             " exceeds guard " + std::to_string(guard));
  }
  auto alg = group_algebra(n);
  const auto shapes = integer_partitions(n);
  std::vector<LambdaInfo> lambdas;
  std::vector<std::vector<Permutation>> words;
  std::vector<AlgebraElement> row_sums;
  for (const auto& shape : shapes) {
    LambdaInfo info;
    info.label = to_string(shape);
    std::vector<Permutation> ds;
    for (const auto& t : standard_tableaux(shape)) {
      info.index_labels.push_back(to_string(t));
      ds.push_back(tableau_permutation(t));
    }
    info.index_size = ds.size();
    lambdas.push_back(std::move(info));
    words.push_back(std::move(ds));

    // Row stabilizer of the row-reading tableau: permutations preserving each
    // block of consecutive values.
    std::vector<std::size_t> row_of(n);
    std::size_t v = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
      for (std::size_t c = 0; c < shape[r]; ++c) row_of[v++] = r;
    }
    AlgebraElement x;
    for (const auto& p : all_permutations(n)) {
      bool keeps = true;
      for (std::size_t i = 0; i < n && keeps; ++i) keeps = row_of[p[i]] == row_of[i];
      if (keeps) x += perm_element(p);
    }
    row_sums.push_back(std::move(x));
  }

  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t a = 0; a < shapes.size(); ++a) {
    for (std::size_t b = 0; b < shapes.size(); ++b) {
      if (dominance_less(shapes[b], shapes[a])) order.emplace_back(a, b);
    }
  }

  // Both placements of the tableau words; the first that satisfies the
  // axioms is kept.
  for (bool inverse_left : {false, true}) {
    CellDatum::Basis basis(shapes.size());
    for (std::size_t l = 0; l < shapes.size(); ++l) {
      const auto& ds = words[l];
      basis[l].assign(ds.size(), std::vector<AlgebraElement>(ds.size()));
      for (std::size_t s = 0; s < ds.size(); ++s) {
        for (std::size_t t = 0; t < ds.size(); ++t) {
          Permutation left = inverse_left ? inverse(ds[s]) : ds[s];
          Permutation right = inverse_left ? ds[t] : inverse(ds[t]);
          AlgebraElement c =
              alg->mul(alg->mul(perm_element(left), row_sums[l]), perm_element(right));
          basis[l][s][t] = std::move(c);
        }
      }
    }
    CellDatum d(alg, lambdas, order, std::move(basis));
    if (passes(d)) {
      d.metadata()["group"] = "S" + std::to_string(n);
      d.metadata()["convention"] = inverse_left ? "d(s)^-1 x d(t)" : "d(s) x d(t)^-1";
      d.metadata()["order"] = "more dominant shapes lower";
      return d;
    }
  }
  throw Error(ErrorCode::ValidationFailed,
              "Murphy basis of S" + std::to_string(n) + " fails the cell axioms");
}

}  // namespace diagcell
