#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "diagcell/group_cell_data.hpp"
#include "oracles.hpp"

using namespace diagcell;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Frame-Robinson-Thrall.
std::size_t hook_count(const IntegerPartition& la) {
  std::size_t n = std::accumulate(la.begin(), la.end(), std::size_t{0});
  std::size_t prod = 1;
  for (std::size_t r = 0; r < la.size(); ++r)
    for (std::size_t c = 0; c < la[r]; ++c) {
      std::size_t below = 0;
      for (std::size_t r2 = r + 1; r2 < la.size() && la[r2] > c; ++r2) ++below;
      prod *= la[r] - c + below;
    }
  return factorial(n) / prod;
}

// Fill the shape with each permutation of 1..n and keep the increasing ones.
std::size_t brute_tableaux(const IntegerPartition& la) {
  std::size_t n = std::accumulate(la.begin(), la.end(), std::size_t{0});
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::size_t count = 0;
  do {
    std::vector<std::vector<std::size_t>> rows;
    std::size_t k = 0;
    for (std::size_t len : la) {
      rows.emplace_back(v.begin() + k, v.begin() + k + len);
      k += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) ok = false;
        if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] > rows[r + 1][c]) ok = false;
      }
    count += ok;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

Permutation word_product(const std::vector<std::size_t>& word, std::size_t n) {
  Permutation p = identity_permutation(n);
  for (std::size_t i : word) {
    Permutation s = identity_permutation(n);
    std::swap(s[i], s[i + 1]);
    p = compose(p, s);
  }
  return p;
}

std::size_t inversions(const Permutation& p) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

}  // namespace

TEST_CASE("integer partitions") {
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (std::size_t n = 1; n <= 8; ++n) {
    auto ps = integer_partitions(n);
    CHECK(ps.size() == counts[n]);
    CHECK(ps.front() == IntegerPartition{n});
    CHECK(ps.back() == IntegerPartition(n, 1));
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
    for (const auto& p : ps) {
      CHECK(std::is_sorted(p.rbegin(), p.rend()));
      CHECK(std::accumulate(p.begin(), p.end(), std::size_t{0}) == n);
    }
  }
  CHECK(to_string(IntegerPartition{2, 1}) == "(2,1)");
}

TEST_CASE("dominance") {
  using P = IntegerPartition;
  CHECK(dominance_less(P{2, 1}, P{3}));
  CHECK(dominance_less(P{1, 1, 1}, P{2, 1}));
  CHECK(dominance_less(P{1, 1, 1}, P{3}));
  CHECK_FALSE(dominance_less(P{3}, P{2, 1}));
  CHECK_FALSE(dominance_less(P{2, 1}, P{2, 1}));
  CHECK_FALSE(dominance_less(P{3, 3}, P{4, 1, 1}));
  CHECK_FALSE(dominance_less(P{4, 1, 1}, P{3, 3}));
  try {
    dominance_less(P{2}, P{1, 1, 1});
    FAIL("expected SizeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("standard tableaux and their permutations") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& la : integer_partitions(n)) {
      auto ts = standard_tableaux(la);
      CHECK(ts.size() == hook_count(la));
      CHECK(ts.size() == brute_tableaux(la));
      // Row reading first, and its permutation is the identity.
      std::size_t v = 1;
      for (std::size_t r = 0; r < la.size(); ++r)
        for (std::size_t c = 0; c < la[r]; ++c) CHECK(ts.front().rows[r][c] == v++);
      CHECK(tableau_permutation(ts.front()) == identity_permutation(n));
      for (const auto& t : ts) {
        CHECK(is_standard(t));
        Permutation d = tableau_permutation(t);
        std::size_t k = 0;
        for (std::size_t r = 0; r < la.size(); ++r)
          for (std::size_t c = 0; c < la[r]; ++c) CHECK(d[k++] == t.rows[r][c] - 1);
        auto word = reduced_word(d);
        CHECK(word.size() == inversions(d));
        CHECK(word_product(word, n) == d);
      }
    }
  }
  CHECK_FALSE(is_standard(StandardTableau{{{2, 1}}}));
  CHECK(is_standard(StandardTableau{{{1, 3}, {2, 4}, {5}}}));
  CHECK_FALSE(is_standard(StandardTableau{{{1, 2}, {4, 3}}}));
  CHECK(to_string(StandardTableau{{{1, 2}, {3}}}) == "[[1,2],[3]]");
}

TEST_CASE("Murphy data") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CellDatum d = murphy_datum(n);
    CHECK(d.basis_size() == factorial(n));
    CHECK(d.lambda_count() == integer_partitions(n).size());
    CHECK(d.metadata().count("convention") == 1);
    CHECK(check_C1(d, factorial(n)).ok);
    CHECK(check_C2(d).ok);
    CHECK(check_C3(d, semigroup_basis(d.algebra())).report.ok);
    // (n) is the least cell, (1^n) the greatest.
    for (std::size_t l = 1; l < d.lambda_count(); ++l) {
      CHECK(d.less(0, l));
      if (l + 1 < d.lambda_count()) CHECK(d.less(l, d.lambda_count() - 1));
    }
    GramVerdict v = semisimple_by_gram(d, 0);
    CHECK(v.semisimple);
    CHECK(v.determinants.front() == Rational(factorial(n)));
    CHECK(v.determinants.back() == 1);
    CHECK(radical_oracle(*d.algebra().semigroup, d.algebra().alpha).semisimple);
  }

  CellDatum s2 = murphy_datum(2);
  CHECK(s2.C(0, 0, 0) == AlgebraElement::basis(0) + AlgebraElement::basis(1));
  CHECK(s2.C(1, 0, 0) == AlgebraElement::basis(0));

  CellDatum s3 = murphy_datum(3);
  AlgebraElement all;
  for (Element g = 0; g < 6; ++g) all.add(g, 1);
  CHECK(s3.C(0, 0, 0) == all);
  CHECK(s3.lambda(1).label == "(2,1)");
  CHECK(s3.index_size(1) == 2);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) CHECK(s3.C(1, s, t).support_size() == 2);
  CHECK(s3.C(2, 0, 0) == AlgebraElement::basis(0));
  CHECK_FALSE(s3.less(1, 1));

  try {
    murphy_datum(6);
    FAIL("expected RankTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankTooLarge);
  }
}
