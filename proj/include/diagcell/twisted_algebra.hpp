#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "diagcell/delta_poly.hpp"
#include "diagcell/error.hpp"
#include "diagcell/semigroup.hpp"

namespace diagcell {

// A map alpha: S x S -> Q[delta]. Diagram twistings are kept as the integer
// table m(x, y) with alpha = delta^m; anything else as an explicit table.
class TwistingMap {
 public:
  TwistingMap() = default;

  static TwistingMap trivial(std::size_t size);
  static TwistingMap power(std::size_t size, std::vector<std::uint8_t> exponents);
  static TwistingMap explicit_table(std::size_t size, std::vector<DeltaPoly> values);

  // Evaluates delta at v; the result has constant values.
  TwistingMap specialize(const Rational& v) const;

  std::size_t size() const noexcept { return size_; }
  bool is_power() const noexcept { return exponents_ != nullptr; }
  const std::optional<Rational>& delta_value() const noexcept { return delta_value_; }
  std::size_t exponent(Element x, Element y) const;

  const DeltaPoly& operator()(Element x, Element y) const;

 private:
  std::size_t size_ = 0;
  std::shared_ptr<const std::vector<std::uint8_t>> exponents_;
  std::shared_ptr<const std::vector<DeltaPoly>> values_;
  std::vector<DeltaPoly> powers_;
  std::optional<Rational> delta_value_;
};

// Finite formal combination of semigroup elements; zero coefficients are never
// stored and terms are ordered by element index.
class AlgebraElement {
 public:
  using Terms = std::map<Element, DeltaPoly>;

  AlgebraElement() = default;
  static AlgebraElement basis(Element x, const DeltaPoly& c = DeltaPoly(1));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  std::vector<Element> support() const;
  DeltaPoly coeff(Element x) const;

  void add(Element x, const DeltaPoly& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const DeltaPoly& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  AlgebraElement evaluate(const Rational& v) const;
  std::string to_string() const;

 private:
  Terms terms_;
};

// x . y = alpha(x, y) (xy), extended bilinearly.
AlgebraElement alg_mul(const FiniteSemigroup& s, const TwistingMap& alpha,
                       const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_star(const AlgebraElement& a, const Permutation& star);

// R^alpha[S] with its anti-involution.
struct TwistedAlgebra {
  std::shared_ptr<const FiniteSemigroup> semigroup;
  TwistingMap alpha;
  Permutation star;

  std::size_t dimension() const { return semigroup->size(); }
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const {
    return alg_mul(*semigroup, alpha, a, b);
  }
  AlgebraElement involution(const AlgebraElement& a) const { return alg_star(a, star); }
  std::optional<Element> identity() const { return semigroup->identity(); }
};

// beta: L_D x L_D* -> units, defined only on that domain.
class BetaMap {
 public:
  BetaMap() = default;
  BetaMap(std::vector<Element> left, std::vector<Element> right, std::vector<DeltaPoly> values);

  static BetaMap constant_one(std::vector<Element> left, std::vector<Element> right);
  static BetaMap restrict_alpha(std::vector<Element> left, std::vector<Element> right,
                                const TwistingMap& alpha);

  const std::vector<Element>& left_domain() const noexcept { return left_; }
  const std::vector<Element>& right_domain() const noexcept { return right_; }
  bool in_left(Element x) const;
  bool in_right(Element y) const;
  std::optional<DeltaPoly> at(Element x, Element y) const;
  // Throws SupportOutOfDomain.
  const DeltaPoly& operator()(Element x, Element y) const;

 private:
  std::optional<std::size_t> left_pos(Element x) const;
  std::optional<std::size_t> right_pos(Element y) const;
  std::vector<Element> left_;
  std::vector<Element> right_;
  std::vector<DeltaPoly> values_;
};

// x ∘ y = beta(x, y)(xy) on R[L_D] x R[L_D*]. Throws SupportOutOfDomain.
AlgebraElement circ(const FiniteSemigroup& s, const AlgebraElement& a, const AlgebraElement& b,
                    const BetaMap& beta);

CheckReport validate_twisting(const FiniteSemigroup& s, const TwistingMap& alpha);
// alpha(x, y) = alpha(y*, x*).
CheckReport validate_star_twist(const FiniteSemigroup& s, const TwistingMap& alpha,
                                const Permutation& star);
// alpha(x, y) = alpha(x, z) whenever y R z.
CheckReport validate_r_constant(const FiniteSemigroup& s, const GreenData& g,
                                const TwistingMap& alpha);
// Unit values, the three defining identities, the derived fourth identity and
// alpha(x, z) beta(1_D, 1_D) = alpha(1_D, 1_D) beta(x, z) on L_D x L_D*.
CheckReport validate_beta(const FiniteSemigroup& s, const TwistingMap& alpha,
                          const Permutation& star, Element one, const BetaMap& beta);

}  // namespace diagcell
