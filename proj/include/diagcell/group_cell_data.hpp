#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diagcell/cellular.hpp"
#include "diagcell/permutation.hpp"

namespace diagcell {

// Weakly decreasing positive parts.
using IntegerPartition = std::vector<std::size_t>;

// Rows of a Young diagram filled with 1..n.
struct StandardTableau {
  std::vector<std::vector<std::size_t>> rows;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

// Partitions of n, starting from (n) and descending lexicographically.
std::vector<IntegerPartition> integer_partitions(std::size_t n);
// Standard tableaux of shape lambda; the row-reading tableau comes first.
std::vector<StandardTableau> standard_tableaux(const IntegerPartition& lambda);
bool is_standard(const StandardTableau& t);

// Strict dominance a ◁ b. Throws SizeMismatch when the sizes differ.
bool dominance_less(const IntegerPartition& a, const IntegerPartition& b);

// d(t): sends the entry of the row-reading tableau in each cell to the entry
// of t in the same cell (0-based values).
Permutation tableau_permutation(const StandardTableau& t);

std::string to_string(const IntegerPartition& p);
std::string to_string(const StandardTableau& t);

// The one-element group algebra with its single cell.
CellDatum trivial_datum();

// Murphy basis of Q[S_n] with the inversion anti-involution. The algebra is
// symmetric_group(n), so basis supports are all_permutations indices. Cells
// are ordered so that more dominant shapes are lower; the word convention is
// recorded in metadata()["convention"]. Throws RankTooLarge above `guard` and
// ValidationFailed if the datum fails its axioms.
CellDatum murphy_datum(std::size_t n, std::size_t guard = 5);

}  // namespace diagcell
