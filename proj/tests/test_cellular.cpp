#include <doctest.h>

#include "diagcell/cellular.hpp"
#include "diagcell/group_cell_data.hpp"
#include "oracles.hpp"

using namespace diagcell;

namespace {

std::shared_ptr<const TwistedAlgebra> sym_algebra(std::size_t m) {
  SymmetricGroup g = symmetric_group(m);
  auto alg = std::make_shared<TwistedAlgebra>();
  alg->semigroup = std::make_shared<const FiniteSemigroup>(g.table);
  alg->alpha = TwistingMap::trivial(g.table.size());
  alg->star = g.inversion;
  return alg;
}

AlgebraElement B(Element x, int c = 1) { return AlgebraElement::basis(x, DeltaPoly(c)); }

// S_2 = {1, s}; lambdas (2) and (1,1) with C = 1 + s and C = 1.
CellDatum s2_datum(std::vector<std::pair<std::size_t, std::size_t>> order,
                   AlgebraElement top = B(0) + B(1), AlgebraElement bottom = B(0)) {
  return CellDatum(sym_algebra(2), {{"(2)", 1, {}}, {"(1,1)", 1, {}}}, std::move(order),
                   {{{top}}, {{bottom}}});
}

}  // namespace

TEST_CASE("construction rejects malformed data") {
  auto alg = sym_algebra(2);
  CHECK_THROWS_AS(CellDatum(alg, {{"a", 1, {}}}, {{0, 0}}, {{{B(0)}}}), Error);
  CHECK_THROWS_AS(CellDatum(alg, {{"a", 1, {}}, {"b", 1, {}}}, {{0, 1}, {1, 0}},
                            {{{B(0)}}, {{B(1)}}}),
                  Error);
  CHECK_THROWS_AS(CellDatum(alg, {{"a", 2, {}}}, {}, {{{B(0)}}}), Error);
}

TEST_CASE("trivial and S_2 data satisfy the axioms") {
  CellDatum t = trivial_datum();
  CHECK(check_C1(t, 1).ok);
  CHECK(check_C2(t).ok);
  CHECK(check_C3(t, semigroup_basis(t.algebra())).report.ok);
  CHECK(gram_matrix(t, 0) == PolyMatrix(1, 1, {DeltaPoly(1)}));

  CellDatum d = s2_datum({{0, 1}});
  CHECK(d.less(0, 1));
  CHECK_FALSE(d.less(1, 0));
  CHECK(d.basis_size() == 2);
  CHECK(check_C1(d, 2).ok);
  CHECK(check_C2(d).ok);
  auto c3 = check_C3(d, semigroup_basis(d.algebra()));
  CHECK(c3.report.ok);
  CHECK(cell_rho(d, 0, B(1)) == PolyMatrix(1, 1, {DeltaPoly(1)}));
  CHECK(cell_rho(d, 1, B(1)) == PolyMatrix(1, 1, {DeltaPoly(-1)}));
  CHECK(gram_matrix(d, 0) == PolyMatrix(1, 1, {DeltaPoly(2)}));
  CHECK(gram_matrix(d, 1) == PolyMatrix(1, 1, {DeltaPoly(1)}));
  GramVerdict v = semisimple_by_gram(d, 0);
  CHECK(v.semisimple);
  CHECK(v.determinants == std::vector<Rational>{2, 1});
}

TEST_CASE("broken data fail the right axiom") {
  // Not a basis.
  CellDatum c1 = s2_datum({{0, 1}}, B(0) + B(1), B(0) + B(1));
  CHECK_FALSE(check_C1(c1, 2).ok);
  CHECK_FALSE(c1.solver().valid());

  // The cyclic group of order 3 with inversion: the generator is not fixed.
  std::vector<Element> table;
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) table.push_back((x + y) % 3);
  auto z3 = std::make_shared<TwistedAlgebra>();
  z3->semigroup = std::make_shared<const FiniteSemigroup>(3, table, 0);
  z3->alpha = TwistingMap::trivial(3);
  z3->star = {0, 2, 1};
  CellDatum c2(z3, {{"a", 1, {}}, {"b", 1, {}}, {"c", 1, {}}}, {}, {{{B(0)}}, {{B(1)}}, {{B(2)}}});
  CHECK(check_C1(c2, 3).ok);
  auto r2 = check_C2(c2);
  CHECK_FALSE(r2.ok);
  CHECK_FALSE(r2.witness.empty());

  // Order reversed: s . 1 needs the higher cell.
  CellDatum c3 = s2_datum({{1, 0}});
  CHECK(check_C1(c3, 2).ok);
  CHECK(check_C2(c3).ok);
  CHECK_FALSE(check_C3(c3, semigroup_basis(c3.algebra())).report.ok);
  CHECK_THROWS_AS(cell_rho(c3, 1, B(1)), Error);
}

TEST_CASE("trace form oracle on TL_2") {
  // TL_2 = {1, e}, e^2 = delta e: the form is [[2, delta], [delta, delta^2]].
  FiniteSemigroup tl2(2, {0, 1, 1, 1}, 0);
  TwistingMap alpha = TwistingMap::power(2, {0, 0, 0, 1});
  for (int v : {-2, -1, 0, 1, 2, 3}) {
    OracleVerdict o = radical_oracle(tl2, alpha.specialize(v));
    Rational det = oracle::leibniz_det(PolyMatrix(2, 2, {2, v, v, v * v})).constant_term();
    CHECK(o.dimension == 2);
    CHECK(o.rank == (v == 0 ? 1u : 2u));
    CHECK(o.semisimple == (det != 0));
  }
  // A null semigroup algebra is never semisimple.
  FiniteSemigroup null2(2, {0, 0, 0, 0});
  CHECK_FALSE(radical_oracle(null2, TwistingMap::trivial(2)).semisimple);
}

TEST_CASE("coordinate solver round trip") {
  std::mt19937 rng(5);
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    CellDatum d = murphy_datum(n);
    const CoordinateSolver& sol = d.solver();
    REQUIRE(sol.valid());
    CHECK(is_unit(sol.determinant()));
    for (std::size_t f = 0; f < d.basis_size(); ++f) {
      const CellIndex& ci = d.cell_index(f);
      CHECK(d.flat_index(ci.lambda, ci.s, ci.t) == f);
      auto coords = sol.express(d.C(ci.lambda, ci.s, ci.t));
      CHECK(coords.size() == 1);
      CHECK(coords.at(f) == DeltaPoly(1));
    }
    std::uniform_int_distribution<Element> pick(0, Element(d.algebra().dimension() - 1));
    for (int i = 0; i < 10; ++i) {
      AlgebraElement v;
      for (int k = 0; k < 4; ++k) v.add(pick(rng), oracle::random_poly(rng, 1));
      AlgebraElement back;
      for (const auto& [f, c] : sol.express(v)) {
        const CellIndex& ci = d.cell_index(f);
        back += c * d.C(ci.lambda, ci.s, ci.t);
      }
      CHECK(back == v);
    }
  }
}

TEST_CASE("phi sampling agrees with the exhaustive form") {
  CellDatum d = murphy_datum(4);
  for (std::size_t l = 0; l < d.lambda_count(); ++l) {
    PolyMatrix full = phi_a(d, l, std::nullopt, 100);
    CHECK(phi_a(d, l, std::nullopt, 0) == full);
    CHECK(full.is_symmetric());
    CHECK(gram_matrix(d, l) == full);
  }
}
