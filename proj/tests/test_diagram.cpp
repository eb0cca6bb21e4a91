#include <doctest.h>

#include <functional>

#include "diagcell/diagram.hpp"
#include "diagcell/json_io.hpp"
#include "oracles.hpp"

using namespace diagcell;

namespace {

SetPartition sp(std::size_t n, std::vector<std::vector<int>> blocks) {
  return SetPartition(n, blocks);
}

// Restricted growth strings on 2n points, mapped through the kind filter.
std::size_t brute_force_count(MonoidKind kind, std::size_t n) {
  const std::size_t points = 2 * n;
  std::vector<std::uint8_t> rgs(points, 0);
  std::size_t count = 0;
  std::function<void(std::size_t, std::uint8_t)> rec = [&](std::size_t i, std::uint8_t max) {
    if (i == points) {
      count += belongs_to(kind, SetPartition::from_block_labels(n, rgs)) ? 1 : 0;
      return;
    }
    for (std::uint8_t b = 0; b <= max + 1 && b < points; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max<std::uint8_t>(max, b));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return count;
}

}  // namespace

TEST_CASE("set partition construction") {
  SetPartition x = sp(2, {{2, -1}, {1}, {-2}});
  CHECK(x.blocks() == std::vector<std::vector<int>>{{1}, {2, -1}, {-2}});
  CHECK_THROWS_AS(sp(2, {{1, 2}, {-1}}), Error);
  CHECK_THROWS_AS(sp(2, {{1, 2}, {-1, -2}, {1}}), Error);
  CHECK_THROWS_AS(sp(2, {{1, 3}, {-1, -2}, {2}}), Error);
  CHECK(SetPartition::identity(3).is_matching());
  const bool ordered = sp(2, {{1, 2, -1, -2}}) < SetPartition::identity(2) ||
                       SetPartition::identity(2) < sp(2, {{1, 2, -1, -2}});
  CHECK(ordered);
}

TEST_CASE("worked product in A_7") {
  SetPartition x = sp(7, {{1, 3, -4, -6}, {2}, {4, 5, 6}, {7}, {-1}, {-2, -3}, {-5, -7}});
  SetPartition y = sp(7, {{1}, {2, 4}, {3, -3, -4, -6}, {5, 7}, {6, -5, -7}, {-1}, {-2}});
  Product p = partition_mul(x, y);
  CHECK(p.value == sp(7, {{1, 3, -3, -4, -5, -6, -7}, {2}, {4, 5, 6}, {7}, {-1}, {-2}}));
  CHECK(p.middle_count == 2);
  CHECK(p.value.block_count() == 6);
  CHECK(green_invariants(MonoidKind::Partition, x).d == 1);
}

TEST_CASE("simple products") {
  SetPartition e = sp(2, {{1, 2}, {-1, -2}});
  Product ee = partition_mul(e, e);
  CHECK(ee.value == e);
  CHECK(ee.middle_count == 1);
  for (const auto& x : enumerate_elements(MonoidKind::Partition, 2)) {
    Product p = partition_mul(SetPartition::identity(2), x);
    CHECK(p.value == x);
    CHECK(p.middle_count == 0);
  }
  try {
    partition_mul(e, SetPartition::identity(3));
    FAIL("expected RankMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::RankMismatch);
  }
}

TEST_CASE("star") {
  CHECK(star(SetPartition::identity(4)) == SetPartition::identity(4));
  CHECK(star(sp(2, {{1, -1, -2}, {2}})) == sp(2, {{1, 2, -1}, {-2}}));
  SetPartition x = sp(7, {{1, 3, -4, -6}, {2}, {4, 5, 6}, {7}, {-1}, {-2, -3}, {-5, -7}});
  auto a = green_invariants(MonoidKind::Partition, x);
  auto b = green_invariants(MonoidKind::Partition, star(x));
  CHECK(a.d == b.d);
  CHECK(a.r.closed.size() == b.l.closed.size());
  CHECK(a.l.closed.size() == b.r.closed.size());
  CHECK(star(star(x)) == x);
}

TEST_CASE("planarity") {
  CHECK(is_planar(SetPartition::identity(3)));
  CHECK_FALSE(is_planar(sp(2, {{1, -2}, {2, -1}})));
  CHECK(is_planar(sp(2, {{1, 2}, {-1, -2}})));
  CHECK(is_planar(sp(4, {{1, 4}, {2, 3}, {-1, -2}, {-3, -4}})));
  CHECK_FALSE(is_planar(sp(4, {{1, 3}, {2, 4}, {-1, -2}, {-3, -4}})));
  CHECK_FALSE(is_planar(sp(1, {{1}, {-1}})));
}

TEST_CASE("enumeration counts against formulas and brute force") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(enumerate_elements(MonoidKind::TemperleyLieb, n).size() == oracle::catalan(n));
    CHECK(enumerate_elements(MonoidKind::Brauer, n).size() == oracle::double_factorial_odd(n));
    CHECK(enumerate_elements(MonoidKind::Partition, n).size() == oracle::bell(2 * n));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto kind : {MonoidKind::Partition, MonoidKind::Brauer, MonoidKind::TemperleyLieb}) {
      CHECK(enumerate_elements(kind, n).size() == brute_force_count(kind, n));
    }
  }
  CHECK(enumerate(MonoidKind::TemperleyLieb, 3).size() == 5);
  CHECK(enumerate(MonoidKind::Brauer, 3).size() == 15);
  CHECK(enumerate(MonoidKind::Partition, 2).size() == 15);
  try {
    enumerate(MonoidKind::Partition, 5);
    FAIL("expected RankTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankTooLarge);
  }
  CHECK_THROWS_AS(enumerate(MonoidKind::Brauer, 6), Error);
  CHECK_THROWS_AS(enumerate(MonoidKind::TemperleyLieb, 8), Error);
}

TEST_CASE("canonical order is sorted and indexable") {
  auto m = enumerate(MonoidKind::Brauer, 3);
  CHECK(std::is_sorted(m.elements.begin(), m.elements.end()));
  CHECK(std::is_sorted(m.keys.begin(), m.keys.end()));
  for (Element i = 0; i < m.size(); ++i) CHECK(m.index_of(m.elements[i]) == i);
  CHECK_FALSE(m.find(sp(3, {{1}, {2, 3}, {-1, -2, -3}})));
  CHECK_THROWS_AS(m.index_of(sp(3, {{1}, {2, 3}, {-1, -2, -3}})), Error);
}

TEST_CASE("diagram JSON uses point order for blocks") {
  Json j = Json::parse(R"({"n": 5, "blocks": [[1,3],[2,-5],[4,-1],[5,-3],[-2,-4]]})");
  SetPartition x = set_partition_from_json(j);
  CHECK(to_json(x) == j);
  CHECK(belongs_to(MonoidKind::Brauer, x));
  CHECK_FALSE(belongs_to(MonoidKind::TemperleyLieb, x));
}

TEST_CASE("associativity and the twist cocycle") {
  for (auto [kind, n] : {std::pair{MonoidKind::Partition, 2}, {MonoidKind::Brauer, 3}}) {
    auto m = enumerate(kind, n);
    const auto& s = m.semigroup;
    for (Element x = 0; x < m.size(); ++x)
      for (Element y = 0; y < m.size(); ++y)
        for (Element z = 0; z < m.size(); ++z) {
          CHECK(s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z)));
          CHECK(m.m(x, y) + m.m(s.mul(x, y), z) == m.m(x, s.mul(y, z)) + m.m(y, z));
        }
  }
  // Random triples in A_3 through the diagram product itself.
  auto elems = enumerate_elements(MonoidKind::Partition, 3);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const auto &x = elems[pick(rng)], &y = elems[pick(rng)], &z = elems[pick(rng)];
    Product xy = partition_mul(x, y), yz = partition_mul(y, z);
    Product l = partition_mul(xy.value, z), r = partition_mul(x, yz.value);
    CHECK(l.value == r.value);
    CHECK(xy.middle_count + l.middle_count == r.middle_count + yz.middle_count);
  }
}

TEST_CASE("star is compatible with products and the twist") {
  for (auto [kind, n] :
       {std::pair{MonoidKind::Partition, 2}, {MonoidKind::Brauer, 3}, {MonoidKind::TemperleyLieb, 4}}) {
    auto m = enumerate(kind, n);
    CHECK(check_anti_involution(m.semigroup, m.star));
    for (Element x = 0; x < m.size(); ++x) {
      CHECK(m.elements[m.star[x]] == star(m.elements[x]));
      for (Element y = 0; y < m.size(); ++y) {
        CHECK(m.m(x, y) == m.m(static_cast<Element>(m.star[y]), static_cast<Element>(m.star[x])));
      }
    }
  }
}

TEST_CASE("closure of BR and TL") {
  auto tl = enumerate_elements(MonoidKind::TemperleyLieb, 4);
  for (const auto& x : tl) {
    CHECK(is_planar(star(x)));
    for (const auto& y : tl) CHECK(is_planar(partition_mul(x, y).value));
  }
  auto br = enumerate_elements(MonoidKind::Brauer, 3);
  for (const auto& x : br)
    for (const auto& y : br) CHECK(partition_mul(x, y).value.is_matching());
}

TEST_CASE("Green invariants") {
  CHECK(green_invariants(MonoidKind::Partition, SetPartition::identity(4)).d == 4);
  auto inv = green_invariants(MonoidKind::TemperleyLieb, sp(2, {{1, 2}, {-1, -2}}));
  CHECK(inv.d == 0);
  CHECK(inv.r.closed == std::vector<std::vector<int>>{{1, 2}});
  CHECK(inv.l.closed.size() == 1);
  for (auto [kind, n] : {std::pair{MonoidKind::Partition, 3}, {MonoidKind::Brauer, 4},
                         {MonoidKind::TemperleyLieb, 5}}) {
    auto m = enumerate(kind, n);
    CHECK(green_cross_check(m, compute_green(m.semigroup)).ok);
  }
}

TEST_CASE("R-constancy of the twist") {
  for (auto [kind, n] : {std::pair{MonoidKind::Partition, 3}, {MonoidKind::Brauer, 4},
                         {MonoidKind::TemperleyLieb, 5}}) {
    auto m = enumerate(kind, n);
    GreenData g = compute_green(m.semigroup);
    for (const auto& cls : g.r_classes)
      for (Element x = 0; x < m.size(); ++x)
        for (Element z : cls) CHECK(m.m(x, cls.front()) == m.m(x, z));
  }
}

TEST_CASE("canonical idempotents") {
  CHECK(canonical_idempotent(MonoidKind::Partition, 3, 1) == sp(3, {{1}, {-1}, {2, -2}, {3, -3}}));
  CHECK(canonical_idempotent(MonoidKind::Partition, 3, 0) == SetPartition::identity(3));
  CHECK(canonical_idempotent(MonoidKind::Brauer, 4, 0) == SetPartition::identity(4));
  CHECK(canonical_idempotent(MonoidKind::Brauer, 4, 1) ==
        sp(4, {{1, 2}, {-1, -2}, {3, -3}, {4, -4}}));
  CHECK(canonical_idempotent(MonoidKind::Partition, 2, 2) == sp(2, {{1, 2}, {-1, -2}}));
  CHECK_THROWS_AS(canonical_idempotent(MonoidKind::Brauer, 3, 2), Error);
  CHECK_THROWS_AS(canonical_idempotent(MonoidKind::Partition, 3, 4), Error);
  for (std::size_t k = 0; k <= 3; ++k) {
    SetPartition e = canonical_idempotent(MonoidKind::Partition, 3, k);
    CHECK(partition_mul(e, e).value == e);
    CHECK(star(e) == e);
    CHECK(green_invariants(MonoidKind::Partition, e).d == 3 - k);
  }
}

TEST_CASE("theta") {
  CHECK(theta(MonoidKind::Partition, 3, 1, {0, 1}) ==
        canonical_idempotent(MonoidKind::Partition, 3, 1));
  CHECK(theta(MonoidKind::Partition, 3, 1, {1, 0}) == sp(3, {{1}, {-1}, {2, -3}, {3, -2}}));
  CHECK_THROWS_AS(theta(MonoidKind::Partition, 3, 1, {0, 1, 2}), Error);
  for (const auto& s : all_permutations(3)) {
    SetPartition t = theta(MonoidKind::Partition, 3, 0, s);
    CHECK(star(t) == theta(MonoidKind::Partition, 3, 0, inverse(s)));
    CHECK(theta_inv(MonoidKind::Partition, 3, 0, t) == s);
    for (const auto& u : all_permutations(3)) {
      CHECK(partition_mul(t, theta(MonoidKind::Partition, 3, 0, u)).value ==
            theta(MonoidKind::Partition, 3, 0, compose(s, u)));
    }
  }
  CHECK_FALSE(theta_inv(MonoidKind::Partition, 3, 0, sp(3, {{1, 2}, {-1, -2}, {3, -3}})));
}

TEST_CASE("u_L recipe for Brauer diagrams") {
  // Any element of L; here the top is arbitrary but the bottom pairs fix l(L).
  SetPartition member = sp(6, {{1, 5}, {2, 3}, {4, -2}, {6, -3}, {-1, -4}, {-5, -6}});
  SetPartition u = brauer_uL(6, 2, member);
  CHECK(u == sp(6, {{1, 2}, {3, 4}, {-1, -4}, {-5, -6}, {5, -2}, {6, -3}}));
  SetPartition e = sp(2, {{1, 2}, {-1, -2}});
  CHECK(brauer_uL(2, 1, e) == e);
}
