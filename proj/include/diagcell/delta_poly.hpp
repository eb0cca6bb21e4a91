#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "diagcell/rational.hpp"

namespace diagcell {

// Univariate polynomial in the parameter delta over Q. Coefficient i is the
// coefficient of delta^i; the zero polynomial has no coefficients.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(int c) : DeltaPoly(Rational(c)) {}  // NOLINT
  DeltaPoly(const Rational& c);                 // NOLINT
  explicit DeltaPoly(std::vector<Rational> coeffs);

  static DeltaPoly delta() { return monomial(1, 1); }
  static DeltaPoly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Rational coeff(std::size_t i) const;
  Rational constant_term() const { return coeff(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& v) const;

  DeltaPoly& operator+=(const DeltaPoly& other);
  DeltaPoly& operator-=(const DeltaPoly& other);
  DeltaPoly& operator*=(const DeltaPoly& other);
  DeltaPoly& operator*=(const Rational& c);

  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  friend DeltaPoly operator*(DeltaPoly a, const Rational& c) { return a *= c; }
  friend DeltaPoly operator*(const Rational& c, DeltaPoly a) { return a *= c; }
  DeltaPoly operator-() const;

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const DeltaPoly& a, const DeltaPoly& b) { return !(a == b); }

  // Human-readable form, e.g. "d^2 - 1".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

DeltaPoly poly_mul(const DeltaPoly& a, const DeltaPoly& b);
Rational poly_eval(const DeltaPoly& p, const Rational& v);
// Units of Q[delta] are the nonzero constants.
bool is_unit(const DeltaPoly& p);
DeltaPoly pow(const DeltaPoly& p, std::size_t e);

// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b);
// Throws Error(DivisionNotExact) when b does not divide a.
DeltaPoly divexact(const DeltaPoly& a, const DeltaPoly& b);

}  // namespace diagcell
