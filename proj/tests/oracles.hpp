// Brute-force reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "diagcell/permutation.hpp"
#include "diagcell/poly_matrix.hpp"
#include "diagcell/semigroup.hpp"

namespace oracle {

using namespace diagcell;

inline DeltaPoly leibniz_det(const PolyMatrix& m) {
  DeltaPoly sum;
  for (const auto& p : all_permutations(m.rows())) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    DeltaPoly term(1);
    for (std::size_t i = 0; i < p.size(); ++i) term = term * m(i, p[i]);
    sum = inversions % 2 ? sum - term : sum + term;
  }
  return sum;
}

inline DeltaPoly random_poly(std::mt19937& rng, int max_degree = 2) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(-1, max_degree);
  std::vector<Rational> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(coef(rng));
  return DeltaPoly(std::move(c));
}

inline PolyMatrix random_matrix(std::mt19937& rng, std::size_t n, int max_degree = 2) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, max_degree);
  return m;
}

// Principal ideals as bitsets, with a formal identity adjoined.
struct Ideals {
  std::vector<std::vector<bool>> right, left, two;
};

inline Ideals principal_ideals(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  Ideals id;
  id.right.assign(n, std::vector<bool>(n));
  id.left = id.right;
  id.two = id.right;
  for (Element x = 0; x < n; ++x) {
    id.right[x][x] = id.left[x][x] = id.two[x][x] = true;
    for (Element a = 0; a < n; ++a) {
      id.right[x][s.mul(x, a)] = true;
      id.left[x][s.mul(a, x)] = true;
      id.two[x][s.mul(a, x)] = id.two[x][s.mul(x, a)] = true;
      for (Element b = 0; b < n; ++b) id.two[x][s.mul(s.mul(a, x), b)] = true;
    }
  }
  return id;
}

// Whether the two labelings induce the same partition.
inline bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::map<std::size_t, std::size_t> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [x, fx] = ab.emplace(a[i], b[i]);
    auto [y, fy] = ba.emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

template <class Key>
std::vector<std::size_t> label_by(const std::vector<Key>& keys) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> out;
  for (const auto& k : keys) out.push_back(ids.emplace(k, ids.size()).first->second);
  return out;
}

inline std::uint64_t catalan(std::uint64_t n) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// (2n - 1)!!
inline std::uint64_t double_factorial_odd(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

// Bell numbers from the Bell triangle.
inline std::uint64_t bell(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}

// Transformation monoid T_m: all maps {0..m-1} -> {0..m-1}, composed as
// (fg)(i) = g(f(i)).
inline FiniteSemigroup full_transformation_monoid(std::size_t m) {
  std::vector<std::vector<std::size_t>> maps;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> f(m);
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i, c /= m) f[i] = c % m;
    maps.push_back(f);
  }
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<Element>(i);
  std::vector<Element> table;
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      std::vector<std::size_t> h(m);
      for (std::size_t i = 0; i < m; ++i) h[i] = g[f[i]];
      table.push_back(index[h]);
    }
  }
  std::vector<std::size_t> id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = i;
  return FiniteSemigroup(maps.size(), table, index[id]);
}

}  // namespace oracle
