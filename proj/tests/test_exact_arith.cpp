#include <doctest.h>

#include "diagcell/poly_matrix.hpp"
#include "oracles.hpp"

using namespace diagcell;

namespace {
const DeltaPoly d = DeltaPoly::delta();
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(-5, 1)) == "-5");
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  try {
    parse_rational("2/");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(DeltaPoly(1), d) == d);
  CHECK(poly_mul(d + 1, d - 1) == pow(d, 2) - 1);
  CHECK(poly_mul(Rational(2) * d, Rational(3) * pow(d, 2)) == Rational(6) * pow(d, 3));
  CHECK((pow(d, 2) - 1).to_string() == "d^2 - 1");
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(pow(d, 2), 2) == 4);
  CHECK(poly_eval(DeltaPoly(), 7) == 0);
  CHECK(poly_eval(d + 1, -1) == 0);
}

TEST_CASE("normal form") {
  DeltaPoly p = (d + 1) - d;
  CHECK(p.degree() == 0);
  CHECK((d - d).is_zero());
  CHECK((d - d).degree() == -1);
  CHECK(DeltaPoly(std::vector<Rational>{1, 0, 0}).coeffs().size() == 1);
}

TEST_CASE("is_unit") {
  CHECK(is_unit(DeltaPoly(Rational(3, 2))));
  CHECK_FALSE(is_unit(d));
  CHECK_FALSE(is_unit(DeltaPoly()));
}

TEST_CASE("division") {
  auto [q, r] = divmod(pow(d, 3) + 2, d + 1);
  CHECK(q * (d + 1) + r == pow(d, 3) + 2);
  CHECK(r.degree() < 1);
  CHECK(divexact(pow(d, 2) - 1, d - 1) == d + 1);
  try {
    divexact(pow(d, 2) + 1, d - 1);
    FAIL("expected inexact division");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionNotExact);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    DeltaPoly a = oracle::random_poly(rng, 4), b = oracle::random_poly(rng, 4),
              c = oracle::random_poly(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    Rational v(i % 7 - 3, 2);
    v.canonicalize();
    CHECK(poly_eval(a * b, v) == poly_eval(a, v) * poly_eval(b, v));
  }
}

TEST_CASE("det examples") {
  CHECK(det(PolyMatrix(1, 1, {d})) == d);
  CHECK(det(PolyMatrix::identity(2)) == DeltaPoly(1));
  CHECK(det(PolyMatrix(2, 2, {d, 1, 1, d})) == pow(d, 2) - 1);
  CHECK(det(PolyMatrix(0, 0)) == DeltaPoly(1));
  try {
    det(PolyMatrix(2, 3));
    FAIL("expected NonSquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonSquare);
  }
}

TEST_CASE("Bareiss agrees with the Leibniz expansion") {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      PolyMatrix m = oracle::random_matrix(rng, n);
      CHECK(det(m) == oracle::leibniz_det(m));
    }
  }
  // A zero leading column forces a pivot swap.
  PolyMatrix z(3, 3, {0, d, 1, 1, 0, d, d, 1, 0});
  CHECK(det(z) == oracle::leibniz_det(z));
}

TEST_CASE("det is multiplicative") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix a = oracle::random_matrix(rng, 3), b = oracle::random_matrix(rng, 3);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("rational matrices") {
  QMatrix q(2, 2);
  q(0, 0) = 1;
  q(0, 1) = 2;
  q(1, 0) = 3;
  q(1, 1) = 4;
  CHECK(det(q) == -2);
  CHECK(q.rank() == 2);
  CHECK(q * q.inverse() == QMatrix::identity(2));
  QMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK(s.rank() == 1);
  CHECK(det(s) == 0);
  CHECK_THROWS_AS(s.inverse(), Error);
  PolyMatrix p(2, 2, {d, 1, 1, d});
  CHECK(det(p.eval(3)) == poly_eval(det(p), 3));
  CHECK(p.is_symmetric());
  CHECK_FALSE(PolyMatrix(2, 2, {d, 1, 0, d}).is_symmetric());
}
