#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace diagcell {

// Arbitrary-precision rational in lowest terms (GMP keeps mpq canonical).
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" with optional sign; throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace diagcell
