#include "diagcell/delta_poly.hpp"

#include <sstream>

#include "diagcell/error.hpp"

namespace diagcell {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::Parse, "not a rational: \"" + s + "\""); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash) throw bad();
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw bad();
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  try {
    q = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

DeltaPoly::DeltaPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

DeltaPoly::DeltaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

DeltaPoly DeltaPoly::monomial(const Rational& c, std::size_t degree) {
  DeltaPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(degree + 1, Rational(0));
  p.coeffs_[degree] = c;
  return p;
}

Rational DeltaPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void DeltaPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational DeltaPoly::eval(const Rational& v) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.coeffs_.size() == 1) return b * a.coeffs_[0];
  if (b.coeffs_.size() == 1) return a * b.coeffs_[0];
  DeltaPoly out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.normalize();
  return out;
}

DeltaPoly& DeltaPoly::operator*=(const DeltaPoly& other) { return *this = *this * other; }

DeltaPoly& DeltaPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

DeltaPoly DeltaPoly::operator-() const {
  DeltaPoly p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

std::string DeltaPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) out << mag.get_str();
    if (k > 0) {
      if (!unit) out << "*";
      out << "d";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

DeltaPoly poly_mul(const DeltaPoly& a, const DeltaPoly& b) { return a * b; }

Rational poly_eval(const DeltaPoly& p, const Rational& v) { return p.eval(v); }

bool is_unit(const DeltaPoly& p) { return p.degree() == 0; }

DeltaPoly pow(const DeltaPoly& p, std::size_t e) {
  DeltaPoly result(1);
  DeltaPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionNotExact, "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {DeltaPoly(), a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational& lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
  }
  return {DeltaPoly(std::move(quot)), DeltaPoly(std::move(rem))};
}

DeltaPoly divexact(const DeltaPoly& a, const DeltaPoly& b) {
  if (b.is_constant() && !b.is_zero()) return a * (Rational(1) / b.leading());
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorCode::DivisionNotExact, b.to_string() + " does not divide " + a.to_string());
  }
  return q;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidSemigroup: return "InvalidSemigroup";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NoSuchRepresentative: return "NoSuchRepresentative";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SupportOutOfDomain: return "SupportOutOfDomain";
    case ErrorCode::UnknownLambda: return "UnknownLambda";
    case ErrorCode::C3Violation: return "C3Violation";
    case ErrorCode::InconsistentForm: return "InconsistentForm";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NoStarFixedIdempotent: return "NoStarFixedIdempotent";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::ModePreconditionFailed: return "ModePreconditionFailed";
    case ErrorCode::AlphaNotUnit: return "AlphaNotUnit";
    case ErrorCode::NotAModule: return "NotAModule";
  }
  return "Unknown";
}

}  // namespace diagcell
