#include "diagcell/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace diagcell {

Permutation identity_permutation(std::size_t m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(m);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t permutation_rank(const Permutation& p) {
  // Lehmer code in the factorial number system.
  std::size_t rank = 0;
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j) smaller += p[j] < p[i] ? 1 : 0;
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

std::vector<std::size_t> reduced_word(const Permutation& p) {
  // Bubble sort p into the identity by right multiplication with adjacent
  // transpositions: p ∘ s_i swaps positions i and i+1 of the one-line form.
  Permutation q = p;
  std::vector<std::size_t> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      if (q[i] > q[i + 1]) {
        std::swap(q[i], q[i + 1]);
        word.push_back(i);
        swapped = true;
      }
    }
  }
  // p ∘ s_{w1} ∘ ... ∘ s_{wk} = id, so p = s_{wk} ∘ ... ∘ s_{w1}.
  std::reverse(word.begin(), word.end());
  return word;
}

SymmetricGroup symmetric_group(std::size_t m) {
  SymmetricGroup g;
  g.degree = m;
  g.elements = all_permutations(m);
  const std::size_t n = g.elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] =
          static_cast<Element>(permutation_rank(compose(g.elements[i], g.elements[j])));
    }
  }
  g.table = FiniteSemigroup(n, std::move(table), Element{0}, n <= 24);
  g.inversion.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inversion[i] = permutation_rank(inverse(g.elements[i]));
  return g;
}

}  // namespace diagcell
