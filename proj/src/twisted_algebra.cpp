#include "diagcell/twisted_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace diagcell {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(x);
  }
  return s + ")";
}

}  // namespace

TwistingMap TwistingMap::trivial(std::size_t size) {
  return power(size, std::vector<std::uint8_t>(size * size, 0));
}

TwistingMap TwistingMap::power(std::size_t size, std::vector<std::uint8_t> exponents) {
  if (exponents.size() != size * size) {
    throw Error(ErrorCode::SizeMismatch, "twisting exponent table has the wrong size");
  }
  TwistingMap t;
  t.size_ = size;
  std::uint8_t top = exponents.empty() ? 0 : *std::max_element(exponents.begin(), exponents.end());
  t.exponents_ = std::make_shared<const std::vector<std::uint8_t>>(std::move(exponents));
  for (std::size_t e = 0; e <= top; ++e) t.powers_.push_back(DeltaPoly::monomial(1, e));
  return t;
}

TwistingMap TwistingMap::explicit_table(std::size_t size, std::vector<DeltaPoly> values) {
  if (values.size() != size * size) {
    throw Error(ErrorCode::SizeMismatch, "twisting table has the wrong size");
  }
  TwistingMap t;
  t.size_ = size;
  t.values_ = std::make_shared<const std::vector<DeltaPoly>>(std::move(values));
  return t;
}

TwistingMap TwistingMap::specialize(const Rational& v) const {
  TwistingMap t = *this;
  t.delta_value_ = v;
  if (is_power()) {
    for (std::size_t e = 0; e < t.powers_.size(); ++e) {
      t.powers_[e] = DeltaPoly(powers_[e].eval(v));
    }
  } else if (values_) {
    std::vector<DeltaPoly> vals;
    vals.reserve(values_->size());
    for (const auto& p : *values_) vals.emplace_back(p.eval(v));
    t.values_ = std::make_shared<const std::vector<DeltaPoly>>(std::move(vals));
  }
  return t;
}

std::size_t TwistingMap::exponent(Element x, Element y) const {
  if (!is_power()) throw Error(ErrorCode::BadParameter, "twisting is not a delta power table");
  return (*exponents_)[std::size_t(x) * size_ + y];
}

const DeltaPoly& TwistingMap::operator()(Element x, Element y) const {
  if (is_power()) return powers_[(*exponents_)[std::size_t(x) * size_ + y]];
  return (*values_)[std::size_t(x) * size_ + y];
}

AlgebraElement AlgebraElement::basis(Element x, const DeltaPoly& c) {
  AlgebraElement a;
  a.add(x, c);
  return a;
}

std::vector<Element> AlgebraElement::support() const {
  std::vector<Element> out;
  out.reserve(terms_.size());
  for (const auto& [x, c] : terms_) out.push_back(x);
  return out;
}

DeltaPoly AlgebraElement::coeff(Element x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? DeltaPoly() : it->second;
}

void AlgebraElement::add(Element x, const DeltaPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [x, c] : other.terms_) add(x, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [x, c] : other.terms_) add(x, -c);
  return *this;
}

AlgebraElement operator*(const DeltaPoly& c, const AlgebraElement& a) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [x, coeff] : a.terms_) out.add(x, c * coeff);
  return out;
}

AlgebraElement AlgebraElement::evaluate(const Rational& v) const {
  AlgebraElement out;
  for (const auto& [x, c] : terms_) out.add(x, DeltaPoly(c.eval(v)));
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*[" << x << "]";
  }
  return out.str();
}

AlgebraElement alg_mul(const FiniteSemigroup& s, const TwistingMap& alpha,
                       const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      const DeltaPoly& w = alpha(x, y);
      if (w.is_zero()) continue;
      out.add(s.mul(x, y), w * cx * cy);
    }
  }
  return out;
}

AlgebraElement alg_star(const AlgebraElement& a, const Permutation& star) {
  AlgebraElement out;
  for (const auto& [x, c] : a.terms()) out.add(static_cast<Element>(star[x]), c);
  return out;
}

BetaMap::BetaMap(std::vector<Element> left, std::vector<Element> right,
                 std::vector<DeltaPoly> values)
    : left_(std::move(left)), right_(std::move(right)), values_(std::move(values)) {
  if (!std::is_sorted(left_.begin(), left_.end()) || !std::is_sorted(right_.begin(), right_.end())) {
    throw Error(ErrorCode::BadParameter, "beta domains must be sorted");
  }
  if (values_.size() != left_.size() * right_.size()) {
    throw Error(ErrorCode::SizeMismatch, "beta table has the wrong size");
  }
}

BetaMap BetaMap::constant_one(std::vector<Element> left, std::vector<Element> right) {
  std::vector<DeltaPoly> values(left.size() * right.size(), DeltaPoly(1));
  return BetaMap(std::move(left), std::move(right), std::move(values));
}

BetaMap BetaMap::restrict_alpha(std::vector<Element> left, std::vector<Element> right,
                                const TwistingMap& alpha) {
  std::vector<DeltaPoly> values;
  values.reserve(left.size() * right.size());
  for (Element x : left) {
    for (Element y : right) values.push_back(alpha(x, y));
  }
  return BetaMap(std::move(left), std::move(right), std::move(values));
}

std::optional<std::size_t> BetaMap::left_pos(Element x) const {
  auto it = std::lower_bound(left_.begin(), left_.end(), x);
  if (it == left_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - left_.begin());
}

std::optional<std::size_t> BetaMap::right_pos(Element y) const {
  auto it = std::lower_bound(right_.begin(), right_.end(), y);
  if (it == right_.end() || *it != y) return std::nullopt;
  return static_cast<std::size_t>(it - right_.begin());
}

bool BetaMap::in_left(Element x) const { return left_pos(x).has_value(); }
bool BetaMap::in_right(Element y) const { return right_pos(y).has_value(); }

std::optional<DeltaPoly> BetaMap::at(Element x, Element y) const {
  auto i = left_pos(x);
  auto j = right_pos(y);
  if (!i || !j) return std::nullopt;
  return values_[*i * right_.size() + *j];
}

const DeltaPoly& BetaMap::operator()(Element x, Element y) const {
  auto i = left_pos(x);
  auto j = right_pos(y);
  if (!i) throw Error(ErrorCode::SupportOutOfDomain, "element " + std::to_string(x) + " not in L_D");
  if (!j) throw Error(ErrorCode::SupportOutOfDomain, "element " + std::to_string(y) + " not in L_D*");
  return values_[*i * right_.size() + *j];
}

AlgebraElement circ(const FiniteSemigroup& s, const AlgebraElement& a, const AlgebraElement& b,
                    const BetaMap& beta) {
  for (Element x : a.support()) {
    if (!beta.in_left(x)) {
      throw Error(ErrorCode::SupportOutOfDomain, "left factor element " + std::to_string(x));
    }
  }
  for (Element y : b.support()) {
    if (!beta.in_right(y)) {
      throw Error(ErrorCode::SupportOutOfDomain, "right factor element " + std::to_string(y));
    }
  }
  AlgebraElement out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out.add(s.mul(x, y), beta(x, y) * cx * cy);
  }
  return out;
}

CheckReport validate_twisting(const FiniteSemigroup& s, const TwistingMap& alpha) {
  const std::size_t n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element xy = s.mul(x, y);
      const DeltaPoly& axy = alpha(x, y);
      for (Element z = 0; z < n; ++z) {
        Element yz = s.mul(y, z);
        if (alpha.is_power() && !alpha.delta_value()) {
          if (alpha.exponent(x, y) + alpha.exponent(xy, z) !=
              alpha.exponent(x, yz) + alpha.exponent(y, z)) {
            return CheckReport::fail("cocycle", tuple_str({x, y, z}));
          }
        } else if (axy * alpha(xy, z) != alpha(x, yz) * alpha(y, z)) {
          return CheckReport::fail("cocycle", tuple_str({x, y, z}));
        }
      }
    }
  }
  return CheckReport::pass("cocycle");
}

CheckReport validate_star_twist(const FiniteSemigroup& s, const TwistingMap& alpha,
                                const Permutation& star) {
  const std::size_t n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (alpha(x, y) != alpha(static_cast<Element>(star[y]), static_cast<Element>(star[x]))) {
        return CheckReport::fail("star-twist", tuple_str({x, y}));
      }
    }
  }
  return CheckReport::pass("star-twist");
}

CheckReport validate_r_constant(const FiniteSemigroup& s, const GreenData& g,
                                const TwistingMap& alpha) {
  const std::size_t n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (const auto& cls : g.r_classes) {
      const DeltaPoly& first = alpha(x, cls.front());
      for (Element z : cls) {
        if (alpha(x, z) != first) {
          return CheckReport::fail("R-constancy", tuple_str({x, cls.front(), z}));
        }
      }
    }
  }
  return CheckReport::pass("R-constancy");
}

CheckReport validate_beta(const FiniteSemigroup& s, const TwistingMap& alpha,
                          const Permutation& star, Element one, const BetaMap& beta) {
  const auto& left = beta.left_domain();
  const auto& right = beta.right_domain();
  const std::size_t n = s.size();
  for (Element x : left) {
    for (Element y : right) {
      if (!is_unit(beta(x, y))) return CheckReport::fail("beta units", tuple_str({x, y}));
    }
  }
  // beta1: beta(x,y) beta(xy,z) = beta(x,yz) beta(y,z)
  for (Element x : left) {
    for (Element y : right) {
      Element xy = s.mul(x, y);
      if (!beta.in_left(xy) || !beta.in_left(y)) continue;
      for (Element z : right) {
        Element yz = s.mul(y, z);
        if (!beta.in_right(yz)) continue;
        if (beta(x, y) * beta(xy, z) != beta(x, yz) * beta(y, z)) {
          return CheckReport::fail("beta1", tuple_str({x, y, z}));
        }
      }
    }
  }
  // beta2: alpha(x,y) beta(xy,z) = alpha(x,yz) beta(y,z)
  for (Element x = 0; x < n; ++x) {
    for (Element y : left) {
      Element xy = s.mul(x, y);
      if (!beta.in_left(xy)) continue;
      for (Element z : right) {
        if (alpha(x, y) * beta(xy, z) != alpha(x, s.mul(y, z)) * beta(y, z)) {
          return CheckReport::fail("beta2", tuple_str({x, y, z}));
        }
      }
    }
  }
  // beta3: beta(x,y) = beta(y*,x*)
  for (Element x : left) {
    for (Element y : right) {
      auto other = beta.at(static_cast<Element>(star[y]), static_cast<Element>(star[x]));
      if (!other || *other != beta(x, y)) return CheckReport::fail("beta3", tuple_str({x, y}));
    }
  }
  // beta4: beta(x,yz) alpha(y,z) = beta(x,y) alpha(xy,z)
  for (Element x : left) {
    for (Element y : right) {
      Element xy = s.mul(x, y);
      for (Element z = 0; z < n; ++z) {
        Element yz = s.mul(y, z);
        if (!beta.in_right(yz)) continue;
        if (beta(x, yz) * alpha(y, z) != beta(x, y) * alpha(xy, z)) {
          return CheckReport::fail("beta4", tuple_str({x, y, z}));
        }
      }
    }
  }
  if (!beta.in_left(one) || !beta.in_right(one)) {
    return CheckReport::fail("beta domain", "1_D outside the domain");
  }
  const DeltaPoly& b11 = beta(one, one);
  const DeltaPoly& a11 = alpha(one, one);
  for (Element x : left) {
    for (Element z : right) {
      if (alpha(x, z) * b11 != a11 * beta(x, z)) {
        return CheckReport::fail("alpha = alpha(D) beta", tuple_str({x, z}));
      }
    }
  }
  return CheckReport::pass("beta");
}

}  // namespace diagcell
