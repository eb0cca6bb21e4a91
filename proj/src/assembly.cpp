#include "diagcell/assembly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace diagcell {

namespace {

std::string elem_str(Element x) { return std::to_string(x); }

DeltaPoly unit_inverse(const DeltaPoly& p, const std::string& what) {
  if (!is_unit(p)) throw Error(ErrorCode::ModePreconditionFailed, what + " is not a unit: " + p.to_string());
  return DeltaPoly(Rational(1) / p.constant_term());
}

PolyMatrix scaled(const PolyMatrix& m, const DeltaPoly& c) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = c * m(i, j);
  }
  return out;
}

std::vector<Element> sorted_class(const std::vector<Element>& cls) {
  std::vector<Element> v = cls;
  std::sort(v.begin(), v.end());
  return v;
}

const std::vector<Element>& lclass_of(const GreenData& g, Element x) {
  return g.l_classes[g.l_of[x]];
}
const std::vector<Element>& rclass_of(const GreenData& g, Element x) {
  return g.r_classes[g.r_of[x]];
}

std::shared_ptr<const TwistedAlgebra> algebra_of(const SemigroupContext& ctx) {
  auto alg = std::make_shared<TwistedAlgebra>();
  alg->semigroup = ctx.semigroup;
  alg->alpha = ctx.alpha;
  alg->star = ctx.star;
  return alg;
}

std::shared_ptr<const CellDatum> cached_murphy(std::size_t degree) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const CellDatum>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  auto d = std::make_shared<const CellDatum>(degree <= 1 ? trivial_datum()
                                                         : murphy_datum(degree));
  cache.emplace(degree, d);
  return d;
}

// theta through a set of star-fixed Coxeter generators of G; empty if none.
std::vector<Element> coxeter_theta(const FiniteSemigroup& s, const Permutation& star,
                                   const GroupTable& g, std::size_t degree) {
  const Element e = g.identity;
  auto order_divides = [&](Element x, int k) {
    Element p = x;
    for (int i = 1; i < k; ++i) p = s.mul(p, x);
    return p == e;
  };
  std::vector<Element> involutions;
  for (Element x : g.elements) {
    if (x != e && s.mul(x, x) == e && star[x] == x) involutions.push_back(x);
  }
  const auto perms = all_permutations(degree);
  std::vector<Element> gens;
  std::vector<Element> result;
  auto try_build = [&]() -> bool {
    std::vector<Element> theta(perms.size());
    std::vector<bool> hit(s.size(), false);
    for (std::size_t i = 0; i < perms.size(); ++i) {
      Element x = e;
      for (std::size_t w : reduced_word(perms[i])) x = s.mul(x, gens[w]);
      if (hit[x]) return false;
      hit[x] = true;
      theta[i] = x;
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j = 0; j < perms.size(); ++j) {
        if (theta[permutation_rank(compose(perms[i], perms[j]))] != s.mul(theta[i], theta[j])) {
          return false;
        }
      }
    }
    result = std::move(theta);
    return true;
  };
  std::function<bool()> rec = [&]() -> bool {
    if (gens.size() + 1 == degree) return try_build();
    for (Element t : involutions) {
      if (std::find(gens.begin(), gens.end(), t) != gens.end()) continue;
      bool ok = true;
      if (!gens.empty()) ok = order_divides(s.mul(gens.back(), t), 3);
      for (std::size_t i = 0; ok && i + 1 < gens.size(); ++i) {
        ok = s.mul(gens[i], t) == s.mul(t, gens[i]);
      }
      if (!ok) continue;
      gens.push_back(t);
      if (rec()) return true;
      gens.pop_back();
    }
    return false;
  };
  rec();
  return result;
}

}  // namespace

std::string SemigroupContext::describe() const {
  if (kind) return std::string(to_string(*kind)) + " n=" + std::to_string(n);
  return "semigroup of size " + std::to_string(size());
}

SemigroupContext diagram_context(const DiagramMonoid& monoid) {
  SemigroupContext ctx;
  ctx.semigroup = std::make_shared<const FiniteSemigroup>(monoid.semigroup);
  ctx.green = compute_green(*ctx.semigroup);
  ctx.star = monoid.star;
  ctx.alpha = TwistingMap::power(monoid.size(), monoid.middle);
  ctx.kind = monoid.kind;
  ctx.n = monoid.n;
  ctx.elements = monoid.elements;
  return ctx;
}

SemigroupContext generic_context(FiniteSemigroup s, Permutation star, TwistingMap alpha) {
  SemigroupContext ctx;
  ctx.semigroup = std::make_shared<const FiniteSemigroup>(std::move(s));
  if (star.size() != ctx.size() || alpha.size() != ctx.size()) {
    throw Error(ErrorCode::SizeMismatch, "star or twisting does not match the semigroup size");
  }
  for (const CheckReport& r : {anti_involution_report(*ctx.semigroup, star),
                               validate_twisting(*ctx.semigroup, alpha),
                               validate_star_twist(*ctx.semigroup, alpha, star)}) {
    if (!r.ok) throw Error(ErrorCode::ValidationFailed, r.check + ": " + r.witness);
  }
  ctx.green = compute_green(*ctx.semigroup);
  ctx.star = std::move(star);
  ctx.alpha = std::move(alpha);
  return ctx;
}

SemigroupContext specialize(const SemigroupContext& ctx, const Rational& delta) {
  SemigroupContext out = ctx;
  out.alpha = ctx.alpha.specialize(delta);
  return out;
}

std::optional<std::size_t> DClassFrame::theta_index(Element x) const {
  auto it = std::find(theta.begin(), theta.end(), x);
  if (it == theta.end()) return std::nullopt;
  return static_cast<std::size_t>(it - theta.begin());
}

std::vector<DClassFrame> build_frames(const SemigroupContext& ctx) {
  const FiniteSemigroup& s = *ctx.semigroup;
  const GreenData& g = ctx.green;
  if (!is_regular(s, g)) {
    throw Error(ErrorCode::NotRegular, "some D-class contains no idempotent");
  }
  std::vector<DClassFrame> frames;
  for (std::size_t d = 0; d < g.d_classes.size(); ++d) {
    DClassFrame f;
    f.d_class = d;
    f.lclasses = g.d_lclasses[d];
    std::size_t k = 0;
    if (ctx.kind) {
      const MonoidKind kind = *ctx.kind;
      const auto inv = green_invariants(kind, ctx.elements[g.d_classes[d].front()]);
      f.through = inv.d;
      k = kind == MonoidKind::Partition ? ctx.n - inv.d : (ctx.n - inv.d) / 2;
      f.idempotent = static_cast<Element>(
          std::lower_bound(ctx.elements.begin(), ctx.elements.end(),
                           canonical_idempotent(kind, ctx.n, k)) -
          ctx.elements.begin());
      f.degree = group_degree(kind, ctx.n, k);
      // Planar diagrams only realize the identity permutation.
      if (kind == MonoidKind::TemperleyLieb) f.degree = std::min<std::size_t>(f.degree, 1);
    } else {
      std::optional<Element> e;
      for (Element x : sorted_class(g.d_classes[d])) {
        if (s.mul(x, x) == x && ctx.star[x] == x) {
          e = x;
          break;
        }
      }
      if (!e) {
        throw Error(ErrorCode::NoStarFixedIdempotent,
                    "D-class " + std::to_string(d) + " (least element " +
                        elem_str(g.d_classes[d].front()) +
                        ") has no idempotent fixed by the anti-involution");
      }
      f.idempotent = *e;
    }
    const Element e = f.idempotent;
    if (g.d_of[e] != d || s.mul(e, e) != e || ctx.star[e] != e) {
      throw Error(ErrorCode::NoStarFixedIdempotent,
                  "chosen idempotent " + elem_str(e) + " is not a star-fixed idempotent of D-class " +
                      std::to_string(d));
    }
    f.group = maximal_subgroup(s, g, e);

    if (ctx.kind) {
      if (*ctx.kind == MonoidKind::TemperleyLieb) {
        f.theta = {e};
      } else {
        for (const auto& sigma : all_permutations(f.degree)) {
          f.theta.push_back(static_cast<Element>(
              std::lower_bound(ctx.elements.begin(), ctx.elements.end(),
                               theta(*ctx.kind, ctx.n, k, sigma)) -
              ctx.elements.begin()));
        }
      }
    } else {
      const std::size_t order = f.group.order();
      std::size_t m = 1, fact = 1;
      while (fact < order) fact *= ++m;
      if (fact != order) {
        throw Error(ErrorCode::UnsupportedGroup, "maximal subgroup of order " +
                                                     std::to_string(order) +
                                                     " is not a symmetric group");
      }
      f.degree = m;
      f.theta = order == 1 ? std::vector<Element>{e} : coxeter_theta(s, ctx.star, f.group, m);
      if (f.theta.empty()) {
        throw Error(ErrorCode::UnsupportedGroup,
                    "no star-fixed Coxeter generators for the maximal subgroup at " + elem_str(e));
      }
    }
    // theta must be an isomorphism onto G_D compatible with the star.
    const auto perms = all_permutations(f.degree);
    std::vector<Element> sorted_theta = f.theta;
    std::sort(sorted_theta.begin(), sorted_theta.end());
    bool iso = sorted_theta == f.group.elements;
    for (std::size_t i = 0; iso && i < perms.size(); ++i) {
      iso = ctx.star[f.theta[i]] == f.theta[permutation_rank(inverse(perms[i]))];
      for (std::size_t j = 0; iso && j < perms.size(); ++j) {
        iso = f.theta[permutation_rank(compose(perms[i], perms[j]))] ==
              s.mul(f.theta[i], f.theta[j]);
      }
    }
    if (!iso) {
      throw Error(ErrorCode::UnsupportedGroup,
                  "theta is not a star-compatible isomorphism at " + elem_str(e));
    }

    const std::size_t r_of_e = g.r_of[e];
    for (std::size_t lc : f.lclasses) {
      const auto members = sorted_class(g.l_classes[lc]);
      std::optional<Element> u;
      if (ctx.kind && *ctx.kind != MonoidKind::Partition) {
        const SetPartition cand = brauer_uL(ctx.n, k, ctx.elements[members.front()]);
        auto pos = std::lower_bound(ctx.elements.begin(), ctx.elements.end(), cand);
        if (pos != ctx.elements.end() && *pos == cand) {
          u = static_cast<Element>(pos - ctx.elements.begin());
        }
      } else {
        for (Element x : members) {
          if (g.r_of[x] == r_of_e) {
            u = x;
            break;
          }
        }
      }
      if (!u || g.l_of[*u] != lc || g.r_of[*u] != r_of_e) {
        throw Error(ErrorCode::NoSuchRepresentative,
                    "no u_L in L-class with least element " + elem_str(members.front()));
      }
      f.u.push_back(*u);
    }
    frames.push_back(std::move(f));
  }

  std::vector<std::size_t> below(g.d_classes.size(), 0);
  for (std::size_t a = 0; a < below.size(); ++a) {
    for (std::size_t b = 0; b < below.size(); ++b) below[b] += g.d_less(a, b) ? 1 : 0;
  }
  std::stable_sort(frames.begin(), frames.end(), [&](const DClassFrame& a, const DClassFrame& b) {
    if (a.through && b.through && *a.through != *b.through) return *a.through > *b.through;
    if (below[a.d_class] != below[b.d_class]) return below[a.d_class] > below[b.d_class];
    return a.d_class < b.d_class;
  });
  return frames;
}

std::string_view to_string(AssemblyMode mode) {
  switch (mode) {
    case AssemblyMode::ConstBeta: return "const-beta";
    case AssemblyMode::UnitAlpha: return "unit-alpha";
    case AssemblyMode::GeneralBeta: return "general-beta";
  }
  return "?";
}

AssemblyMode parse_mode(std::string_view text) {
  if (text == "const-beta") return AssemblyMode::ConstBeta;
  if (text == "unit-alpha") return AssemblyMode::UnitAlpha;
  if (text == "general-beta") return AssemblyMode::GeneralBeta;
  throw Error(ErrorCode::BadParameter, "unknown mode " + std::string(text));
}

BetaMap mode_beta(const SemigroupContext& ctx, const GreenData& green, const DClassFrame& frame,
                  AssemblyMode mode) {
  auto left = sorted_class(lclass_of(green, frame.idempotent));
  auto right = sorted_class(rclass_of(green, frame.idempotent));
  switch (mode) {
    case AssemblyMode::ConstBeta: return BetaMap::constant_one(std::move(left), std::move(right));
    case AssemblyMode::UnitAlpha:
      return BetaMap::restrict_alpha(std::move(left), std::move(right), ctx.alpha);
    case AssemblyMode::GeneralBeta: break;
  }
  throw Error(ErrorCode::BadParameter, "general-beta mode needs explicit beta maps");
}

CellDatum frame_group_datum(const DClassFrame& frame, const BetaMap& beta) {
  const Element e = frame.idempotent;
  const auto c_opt = beta.at(e, e);
  if (!c_opt) throw Error(ErrorCode::SupportOutOfDomain, "1_D outside the beta domain");
  const DeltaPoly c = *c_opt;
  for (Element x : frame.theta) {
    for (Element y : frame.theta) {
      if (beta(x, y) != c) {
        throw Error(ErrorCode::ModePreconditionFailed,
                    "beta is not constant on the maximal subgroup at (" + elem_str(x) + ", " +
                        elem_str(y) + ")");
      }
    }
  }
  const DeltaPoly c_inv = unit_inverse(c, "beta(1_D, 1_D)");

  auto base = cached_murphy(frame.degree);
  auto alg = std::make_shared<TwistedAlgebra>();
  alg->semigroup = base->algebra().semigroup;
  const std::size_t n = alg->semigroup->size();
  alg->alpha = c == DeltaPoly(1) ? TwistingMap::trivial(n)
                                 : TwistingMap::explicit_table(n, std::vector<DeltaPoly>(n * n, c));
  alg->star = base->algebra().star;

  CellDatum::Basis basis = base->basis();
  for (auto& rows : basis) {
    for (auto& row : rows) {
      for (auto& el : row) el = c_inv * el;
    }
  }
  CellDatum out(alg, base->lambdas(), base->strict_order(), std::move(basis));
  out.metadata() = base->metadata();
  if (c != DeltaPoly(1)) out.metadata()["scale"] = c_inv.to_string();
  return out;
}

std::optional<std::size_t> AssembledDatum::lambda_of(std::size_t frame,
                                                     std::size_t group_lambda) const {
  for (std::size_t i = 0; i < origin.size(); ++i) {
    if (origin[i] == std::pair{frame, group_lambda}) return i;
  }
  return std::nullopt;
}

AssembledDatum assemble_datum(const SemigroupContext& ctx, std::vector<DClassFrame> frames,
                              const AssemblyOptions& options) {
  const FiniteSemigroup& s = *ctx.semigroup;
  const GreenData& g = ctx.green;
  AssembledDatum out;
  out.mode = options.mode;

  auto precondition = [](const CheckReport& r) {
    if (!r.ok) throw Error(ErrorCode::ModePreconditionFailed, r.check + ": " + r.witness);
  };
  switch (options.mode) {
    case AssemblyMode::ConstBeta: precondition(validate_r_constant(s, g, ctx.alpha)); break;
    case AssemblyMode::UnitAlpha:
      for (const auto& f : frames) {
        for (Element x : lclass_of(g, f.idempotent)) {
          for (Element y : rclass_of(g, f.idempotent)) {
            if (!is_unit(ctx.alpha(x, y))) {
              throw Error(ErrorCode::ModePreconditionFailed,
                          "alpha(" + elem_str(x) + ", " + elem_str(y) +
                              ") = " + ctx.alpha(x, y).to_string() + " is not a unit");
            }
          }
        }
      }
      break;
    case AssemblyMode::GeneralBeta:
      if (options.betas.size() != frames.size()) {
        throw Error(ErrorCode::ModePreconditionFailed, "need one beta map per D-class frame");
      }
      break;
  }

  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const auto& f = frames[fi];
    BetaMap beta = options.mode == AssemblyMode::GeneralBeta
                       ? options.betas[fi]
                       : mode_beta(ctx, g, f, options.mode);
    if (beta.left_domain() != sorted_class(lclass_of(g, f.idempotent)) ||
        beta.right_domain() != sorted_class(rclass_of(g, f.idempotent))) {
      throw Error(ErrorCode::ModePreconditionFailed,
                  "beta domain is not L_D x L_D* for D-class " + std::to_string(f.d_class));
    }
    precondition(validate_beta(s, ctx.alpha, ctx.star, f.idempotent, beta));
    out.group_data.push_back(frame_group_datum(f, beta));
    out.betas.push_back(std::move(beta));
  }

  std::vector<LambdaInfo> lambdas;
  CellDatum::Basis basis;
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const auto& f = frames[fi];
    const auto& gd = out.group_data[fi];
    const auto& beta = out.betas[fi];
    const std::string dlabel =
        f.through ? "d=" + std::to_string(*f.through) : "D" + std::to_string(f.d_class);
    const std::size_t nl = f.u.size();
    for (std::size_t lam = 0; lam < gd.lambda_count(); ++lam) {
      const std::size_t m = gd.index_size(lam);
      LambdaInfo info;
      info.label = dlabel + ":" + gd.lambda(lam).label;
      info.index_size = nl * m;
      for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t sidx = 0; sidx < m; ++sidx) {
          std::string tl = sidx < gd.lambda(lam).index_labels.size()
                               ? gd.lambda(lam).index_labels[sidx]
                               : std::to_string(sidx);
          info.index_labels.push_back("L" + elem_str(f.u[a]) + "/" + tl);
        }
      }
      lambdas.push_back(std::move(info));
      out.origin.emplace_back(fi, lam);

      std::vector<std::vector<AlgebraElement>> cell(nl * m, std::vector<AlgebraElement>(nl * m));
      for (std::size_t a = 0; a < nl; ++a) {
        const Element ua_star = static_cast<Element>(ctx.star[f.u[a]]);
        for (std::size_t b = 0; b < nl; ++b) {
          const Element ub = f.u[b];
          for (std::size_t si = 0; si < m; ++si) {
            for (std::size_t ti = 0; ti < m; ++ti) {
              AlgebraElement c;
              for (const auto& [gpos, coeff] : gd.C(lam, si, ti).terms()) {
                const Element ge = f.theta[gpos];
                const Element lg = s.mul(ua_star, ge);
                c.add(s.mul(lg, ub), coeff * beta(ua_star, ge) * beta(lg, ub));
              }
              cell[a * m + si][b * m + ti] = std::move(c);
            }
          }
        }
      }
      basis.push_back(std::move(cell));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < out.origin.size(); ++i) {
    for (std::size_t j = 0; j < out.origin.size(); ++j) {
      const auto [fi, li] = out.origin[i];
      const auto [fj, lj] = out.origin[j];
      const bool lower = fi == fj ? out.group_data[fi].less(li, lj)
                                  : g.d_less(frames[fi].d_class, frames[fj].d_class);
      if (lower) order.emplace_back(i, j);
    }
  }

  auto datum = std::make_shared<CellDatum>(algebra_of(ctx), std::move(lambdas), std::move(order),
                                           std::move(basis));
  datum->metadata()["mode"] = std::string(to_string(options.mode));
  datum->metadata()["semigroup"] = ctx.describe();
  if (auto v = ctx.alpha.delta_value()) datum->metadata()["delta"] = to_string(*v);
  if (!out.group_data.empty()) {
    for (const auto& gd : out.group_data) {
      auto it = gd.metadata().find("convention");
      if (it != gd.metadata().end()) {
        datum->metadata()["group_convention"] = it->second;
        break;
      }
    }
  }
  out.frames = std::move(frames);

  if (options.validate) {
    out.checks.push_back(check_C1(*datum, s.size()));
    out.checks.push_back(check_C2(*datum));
    out.checks.push_back(check_C3(*datum, semigroup_basis(datum->algebra())).report);
    for (const auto& r : out.checks) {
      if (!r.ok) throw Error(ErrorCode::ValidationFailed, r.check + ": " + r.witness);
    }
  }
  out.datum = std::move(datum);
  return out;
}

SandwichMatrix sandwich_matrix(const SemigroupContext& ctx, const DClassFrame& frame,
                               std::size_t frame_position) {
  const FiniteSemigroup& s = *ctx.semigroup;
  const std::size_t nl = frame.u.size();
  SandwichMatrix p;
  p.frame = frame_position;
  p.entries.assign(nl, std::vector<AlgebraElement>(nl));
  p.products.assign(nl, std::vector<std::optional<Element>>(nl));
  for (std::size_t a = 0; a < nl; ++a) {
    for (std::size_t b = 0; b < nl; ++b) {
      const Element vb = static_cast<Element>(ctx.star[frame.u[b]]);
      const Element x = s.mul(frame.u[a], vb);
      auto pos = frame.theta_index(x);
      if (!pos) continue;
      p.products[a][b] = x;
      p.entries[a][b] = AlgebraElement::basis(static_cast<Element>(*pos), ctx.alpha(frame.u[a], vb));
    }
  }
  return p;
}

namespace {

PolyMatrix rho_of_sandwich(const CellDatum& gd, std::size_t lam, const SandwichMatrix& p) {
  const std::size_t nl = p.entries.size();
  const std::size_t m = gd.index_size(lam);
  PolyMatrix out(nl * m, nl * m);
  for (std::size_t a = 0; a < nl; ++a) {
    for (std::size_t b = 0; b < nl; ++b) {
      if (p.entries[a][b].is_zero()) continue;
      PolyMatrix r = cell_rho(gd, lam, p.entries[a][b]);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) out(a * m + i, b * m + j) = r(i, j);
      }
    }
  }
  return out;
}

}  // namespace

GramFactorization gram_factorization(const SemigroupContext& ctx, const AssembledDatum& a,
                                     std::size_t frame_position, std::size_t group_lambda) {
  auto idx = a.lambda_of(frame_position, group_lambda);
  if (!idx) throw Error(ErrorCode::UnknownLambda, "no such (D, lambda)");
  const auto& frame = a.frames[frame_position];
  const auto& gd = a.group_data[frame_position];
  GramFactorization out;
  out.assembled = gram_matrix(*a.datum, *idx);
  out.group_gram = gram_matrix(gd, group_lambda);
  out.rho_p = rho_of_sandwich(gd, group_lambda, sandwich_matrix(ctx, frame, frame_position));

  const std::size_t nl = frame.u.size();
  const std::size_t m = gd.index_size(group_lambda);
  PolyMatrix block(nl * m, nl * m);
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) block(l * m + i, l * m + j) = out.group_gram(i, j);
    }
  }
  out.product = block * out.rho_p;
  out.matrices_equal = out.product == out.assembled;
  out.det_assembled = det(out.assembled);
  out.det_product = pow(det(out.group_gram), nl) * det(out.rho_p);
  out.determinants_equal = out.det_assembled == out.det_product;
  return out;
}

SemisimplicityReport semisimplicity_report(const SemigroupContext& ctx, const Rational& delta) {
  SemisimplicityReport rep;
  const SemigroupContext sctx = specialize(ctx, delta);
  const FiniteSemigroup& s = *sctx.semigroup;
  rep.oracle = radical_oracle(s, sctx.alpha);

  rep.applicable = true;
  for (Element x = 0; x < s.size() && rep.applicable; ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      if (sctx.alpha(x, y).is_zero()) {
        rep.applicable = false;
        rep.inapplicable_reason = "alpha(" + elem_str(x) + ", " + elem_str(y) + ") = 0 at delta = " +
                                  to_string(delta);
        break;
      }
    }
  }
  if (!rep.applicable) {
    rep.agrees = true;
    return rep;
  }

  rep.semisimple = true;
  const auto frames = build_frames(sctx);
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const auto& f = frames[fi];
    FrameEvidence ev;
    ev.frame = fi;
    const BetaMap beta = mode_beta(sctx, sctx.green, f, AssemblyMode::UnitAlpha);
    const CellDatum gd = frame_group_datum(f, beta);
    const SandwichMatrix p = sandwich_matrix(sctx, f, fi);
    ev.group_semisimple = true;
    ev.sandwich_invertible = true;
    for (std::size_t lam = 0; lam < gd.lambda_count(); ++lam) {
      Rational gdet = det(gram_matrix(gd, lam).eval(delta));
      Rational pdet = det(rho_of_sandwich(gd, lam, p).eval(delta));
      ev.group_gram_dets.push_back(gdet);
      ev.sandwich_dets.push_back(pdet);
      if (gdet == 0) ev.group_semisimple = false;
      if (pdet == 0) ev.sandwich_invertible = false;
    }
    rep.semisimple = rep.semisimple && ev.group_semisimple && ev.sandwich_invertible;
    rep.frames.push_back(std::move(ev));
  }
  rep.agrees = rep.semisimple == rep.oracle.semisimple;
  return rep;
}

void require_applicable(const SemisimplicityReport& report) {
  if (!report.applicable) throw Error(ErrorCode::AlphaNotUnit, report.inapplicable_reason);
}

GroupModule cell_module(const CellDatum& group_datum, std::size_t lambda) {
  GroupModule out;
  for (Element gpos = 0; gpos < group_datum.algebra().dimension(); ++gpos) {
    out.action.push_back(cell_rho(group_datum, lambda, AlgebraElement::basis(gpos)));
  }
  return out;
}

InducedModule induce_module(const SemigroupContext& ctx, const DClassFrame& frame,
                            const GroupModule& source, const BetaMap& beta) {
  const FiniteSemigroup& s = *ctx.semigroup;
  const GreenData& g = ctx.green;
  const std::size_t nk = frame.u.size();
  const std::size_t m = source.dimension();
  if (source.action.size() != frame.group_order()) {
    throw Error(ErrorCode::SizeMismatch, "source module needs one matrix per group element");
  }
  std::vector<Element> v(nk);
  for (std::size_t b = 0; b < nk; ++b) v[b] = static_cast<Element>(ctx.star[frame.u[b]]);

  InducedModule out;
  out.source_dimension = m;
  out.rclass_count = nk;
  for (Element x = 0; x < s.size(); ++x) {
    PolyMatrix mat(nk * m, nk * m);
    for (std::size_t b = 0; b < nk; ++b) {
      const Element y = s.mul(x, v[b]);
      if (g.d_of[y] != frame.d_class) continue;
      std::optional<std::size_t> target, gpos;
      for (std::size_t a = 0; a < nk && !target; ++a) {
        if (g.r_of[v[a]] != g.r_of[y]) continue;
        target = a;
        for (std::size_t p = 0; p < frame.theta.size(); ++p) {
          if (s.mul(v[a], frame.theta[p]) == y) {
            gpos = p;
            break;
          }
        }
      }
      if (!target || !gpos) {
        throw Error(ErrorCode::NotAModule,
                    "s v_K = " + elem_str(y) + " is not of the form v_K' g for s = " + elem_str(x));
      }
      const DeltaPoly coeff =
          ctx.alpha(x, v[b]) * unit_inverse(beta(v[*target], frame.theta[*gpos]), "beta value");
      const PolyMatrix& gm = source.action[*gpos];
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) mat(*target * m + i, b * m + j) = coeff * gm(i, j);
      }
    }
    out.action.push_back(std::move(mat));
  }
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      if (out.action[x] * out.action[y] != scaled(out.action[s.mul(x, y)], ctx.alpha(x, y))) {
        throw Error(ErrorCode::NotAModule,
                    "action fails on the pair (" + elem_str(x) + ", " + elem_str(y) + ")");
      }
    }
  }
  return out;
}

}  // namespace diagcell
