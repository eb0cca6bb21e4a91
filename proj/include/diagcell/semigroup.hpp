#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diagcell/error.hpp"

namespace diagcell {

using Element = std::uint32_t;
using Permutation = std::vector<std::size_t>;

// A finite semigroup materialized as its full multiplication table.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;
  // Validates table range and associativity (exhaustive up to 300 elements,
  // a fixed pseudo-random sample of triples above). Throws InvalidSemigroup.
  FiniteSemigroup(std::size_t size, std::vector<Element> table,
                  std::optional<Element> identity = std::nullopt, bool validate = true);

  std::size_t size() const noexcept { return size_; }
  Element mul(Element x, Element y) const { return table_[std::size_t(x) * size_ + y]; }
  std::span<const Element> row(Element x) const {
    return {table_.data() + std::size_t(x) * size_, size_};
  }
  const std::vector<Element>& table() const noexcept { return table_; }
  std::optional<Element> identity() const noexcept { return identity_; }

  // Searches for a two-sided identity.
  std::optional<Element> find_identity() const;

 private:
  std::size_t size_ = 0;
  std::vector<Element> table_;
  std::optional<Element> identity_;
};

CheckReport check_associativity(const FiniteSemigroup& s, std::size_t exhaustive_limit = 300);

// Green's relations. Class indices are assigned in order of each class's
// least element.
struct GreenData {
  std::vector<std::size_t> r_of, l_of, h_of, d_of, j_of;
  std::vector<std::vector<Element>> r_classes, l_classes, h_classes, d_classes, j_classes;
  // Per D-class: indices into l_classes / r_classes, ascending by least element.
  std::vector<std::vector<std::size_t>> d_lclasses, d_rclasses;
  // d_leq[a][b]: D_a <=_J D_b (reflexive, transitive).
  std::vector<std::vector<bool>> d_leq;
  // d_covers[b]: the D-classes covered by D_b in the J-order.
  std::vector<std::vector<std::size_t>> d_covers;

  bool d_less(std::size_t a, std::size_t b) const { return a != b && d_leq[a][b]; }
  // Whether x lies strictly below the D-class `d` in the J-order.
  bool below(Element x, std::size_t d) const { return d_less(d_of[x], d); }
};

GreenData compute_green(const FiniteSemigroup& s);

std::vector<Element> idempotents(const FiniteSemigroup& s);
bool is_regular(const FiniteSemigroup& s, const GreenData& g);

// The H-class of an idempotent with its group structure.
struct GroupTable {
  std::vector<Element> elements;  // ascending semigroup indices
  Element identity = 0;
  std::size_t identity_pos = 0;
  std::vector<std::size_t> inverse;               // positions
  std::vector<std::vector<std::size_t>> product;  // positions

  std::size_t order() const noexcept { return elements.size(); }
  std::optional<std::size_t> position(Element x) const;
};

// Throws NotIdempotent.
GroupTable maximal_subgroup(const FiniteSemigroup& s, const GreenData& g, Element e);

bool check_anti_involution(const FiniteSemigroup& s, const Permutation& star);
CheckReport anti_involution_report(const FiniteSemigroup& s, const Permutation& star);

// Exhaustive check that J = D, x D xy => x R xy and y D xy => y L xy.
CheckReport group_bound_checks(const FiniteSemigroup& s, const GreenData& g);

// Green's Lemma instance check over all pairs x, a with xa R x.
CheckReport green_lemma_check(const FiniteSemigroup& s, const GreenData& g);

// H = R ∩ L as partitions.
CheckReport h_is_r_meet_l(const GreenData& g);

}  // namespace diagcell
