#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagcell/permutation.hpp"
#include "diagcell/semigroup.hpp"

namespace diagcell {

enum class MonoidKind { Partition, Brauer, TemperleyLieb };

std::string_view to_string(MonoidKind kind);
// Accepts "partition", "brauer", "tl". Throws BadParameter.
MonoidKind parse_kind(std::string_view text);

// An equivalence relation on {1..n} ∪ {1'..n'}. Label i > 0 is the point i,
// label -i is i'. Points are ordered 1..n, 1'..n'; the canonical form numbers
// blocks by first point in that order, which also fixes the block listing.
class SetPartition {
 public:
  SetPartition() = default;
  // Throws BadParameter unless `blocks` partitions the 2n labels exactly.
  SetPartition(std::size_t n, const std::vector<std::vector<int>>& blocks);
  // block_of[p] for points p = 0..2n-1 (0..n-1 top, n..2n-1 bottom); any
  // labelling, canonicalized here.
  static SetPartition from_block_labels(std::size_t n, const std::vector<std::uint8_t>& block_of);
  static SetPartition identity(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const std::vector<std::uint8_t>& block_of() const noexcept { return block_of_; }
  std::size_t block_count() const noexcept { return blocks_; }
  std::vector<std::vector<int>> blocks() const;
  bool is_matching() const;
  // Order-compatible packing of the canonical labelling (n <= 8).
  std::uint64_t key() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.block_of_ == b.block_of_;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.block_of_ < b.block_of_;
  }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::size_t blocks_ = 0;
  std::vector<std::uint8_t> block_of_;
};

int point_label(std::size_t n, std::size_t point);
std::size_t label_point(std::size_t n, int label);

struct Product {
  SetPartition value;
  std::size_t middle_count = 0;  // classes lying wholly in the middle row
};

// Stacks x over y. Throws RankMismatch.
Product partition_mul(const SetPartition& x, const SetPartition& y);
// Swaps i and i'.
SetPartition star(const SetPartition& x);
// Non-crossing test on the boundary word 1..n, n'..1'. Non-matchings are not planar.
bool is_planar(const SetPartition& x);

struct SideInvariant {
  std::vector<std::vector<int>> closed;  // blocks within one side
  std::vector<std::vector<int>> traces;  // that side's traces of through-blocks
  friend bool operator==(const SideInvariant&, const SideInvariant&) = default;
  friend auto operator<=>(const SideInvariant&, const SideInvariant&) = default;
};

struct GreenInvariants {
  std::size_t d = 0;
  SideInvariant r;
  SideInvariant l;
  friend bool operator==(const GreenInvariants&, const GreenInvariants&) = default;
};

// Closed-form Green invariants: the partition-monoid form keeps the traces of
// through-blocks, the Brauer/Temperley-Lieb form only the one-sided pairs.
GreenInvariants green_invariants(MonoidKind kind, const SetPartition& x);

// The star-fixed idempotent of the D-class with k removed through-strands
// (partition: d = n-k; Brauer/TL: d = n-2k). Throws BadParameter.
SetPartition canonical_idempotent(MonoidKind kind, std::size_t n, std::size_t k);

// Degree of the maximal subgroup permutations for parameter k.
std::size_t group_degree(MonoidKind kind, std::size_t n, std::size_t k);
// Offset of the first permuted strand in 1_D.
std::size_t strand_offset(MonoidKind kind, std::size_t k);

// Group isomorphism S_degree -> G_D. Throws DegreeMismatch.
SetPartition theta(MonoidKind kind, std::size_t n, std::size_t k, const Permutation& sigma);
// Inverse of theta; nullopt when x is not of the form theta(sigma).
std::optional<Permutation> theta_inv(MonoidKind kind, std::size_t n, std::size_t k,
                                     const SetPartition& x);

// The u_L recipe for Brauer/Temperley-Lieb: top pairs {2i-1,2i} for i <= k,
// the bottom pairs of `bottom` (any element of L), and an order-preserving
// join of top points 2k+1..n to the remaining bottom points.
SetPartition brauer_uL(std::size_t n, std::size_t k, const SetPartition& bottom);

// A materialized diagram monoid: elements in canonical order with the
// multiplication table, middle-count table and star permutation.
struct DiagramMonoid {
  MonoidKind kind = MonoidKind::Partition;
  std::size_t n = 0;
  std::vector<SetPartition> elements;
  std::vector<std::uint64_t> keys;  // sorted, parallel to elements
  FiniteSemigroup semigroup;
  std::vector<std::uint8_t> middle;  // m(x, y), row-major
  Permutation star;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t m(Element x, Element y) const { return middle[std::size_t(x) * size() + y]; }
  // Throws BadParameter if x is not an element.
  Element index_of(const SetPartition& x) const;
  std::optional<Element> find(const SetPartition& x) const;
};

struct SizeGuard {
  std::size_t partition = 4;
  std::size_t brauer = 5;
  std::size_t tl = 7;
};

// Canonical element list only (no table). Throws RankTooLarge / BadParameter.
std::vector<SetPartition> enumerate_elements(MonoidKind kind, std::size_t n,
                                             SizeGuard guard = {});
DiagramMonoid enumerate(MonoidKind kind, std::size_t n, SizeGuard guard = {});

bool belongs_to(MonoidKind kind, const SetPartition& x);

}  // namespace diagcell

namespace diagcell {

// Whether the closed-form invariants induce exactly the engine's R, L and D
// partitions of the monoid.
CheckReport green_cross_check(const DiagramMonoid& monoid, const GreenData& green);

}  // namespace diagcell
