#pragma once

#include <cstddef>
#include <vector>

#include "diagcell/semigroup.hpp"

namespace diagcell {

// Permutations act on {0, ..., m-1} as functions; compose(a, b) = a ∘ b,
// i.e. (a ∘ b)(i) = a(b(i)).
Permutation identity_permutation(std::size_t m);
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// All permutations of degree m in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(std::size_t m);
// Position of p in all_permutations(p.size()).
std::size_t permutation_rank(const Permutation& p);

// Reduced word for p as a product s_{i1} ∘ s_{i2} ∘ ... of adjacent
// transpositions s_i = (i i+1); the length equals the inversion count.
std::vector<std::size_t> reduced_word(const Permutation& p);

// S_m as a finite group, elements in all_permutations order, product compose.
struct SymmetricGroup {
  std::size_t degree = 0;
  std::vector<Permutation> elements;
  FiniteSemigroup table;
  Permutation inversion;  // element index -> index of its inverse
};

SymmetricGroup symmetric_group(std::size_t m);

}  // namespace diagcell
