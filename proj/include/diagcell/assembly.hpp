#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diagcell/cellular.hpp"
#include "diagcell/diagram.hpp"
#include "diagcell/group_cell_data.hpp"
#include "diagcell/twisted_algebra.hpp"

namespace diagcell {

// A semigroup with anti-involution and twisting, plus the diagram description
// when it came from one.
struct SemigroupContext {
  std::shared_ptr<const FiniteSemigroup> semigroup;
  GreenData green;
  Permutation star;
  TwistingMap alpha;
  std::optional<MonoidKind> kind;
  std::size_t n = 0;
  std::vector<SetPartition> elements;

  std::size_t size() const { return semigroup->size(); }
  std::string describe() const;
};

SemigroupContext diagram_context(const DiagramMonoid& monoid);
// Validates star, twisting and their compatibility. Throws ValidationFailed.
SemigroupContext generic_context(FiniteSemigroup s, Permutation star, TwistingMap alpha);
// Same context with delta evaluated.
SemigroupContext specialize(const SemigroupContext& ctx, const Rational& delta);

struct DClassFrame {
  std::size_t d_class = 0;
  Element idempotent = 0;
  GroupTable group;
  std::size_t degree = 0;             // G_D is isomorphic to S_degree
  std::vector<Element> theta;         // all_permutations index -> element of G_D
  std::vector<std::size_t> lclasses;  // L-classes of D, ascending by least element
  std::vector<Element> u;             // u_L per entry of lclasses
  std::optional<std::size_t> through;  // d for diagram monoids

  std::size_t group_order() const noexcept { return theta.size(); }
  // Position in theta of an element of G_D.
  std::optional<std::size_t> theta_index(Element x) const;
};

// Frames ordered from the top of the J-order down (for diagram monoids, by
// decreasing number of through-blocks). Throws NotRegular,
// NoStarFixedIdempotent, UnsupportedGroup.
std::vector<DClassFrame> build_frames(const SemigroupContext& ctx);

enum class AssemblyMode { ConstBeta, UnitAlpha, GeneralBeta };
std::string_view to_string(AssemblyMode mode);
AssemblyMode parse_mode(std::string_view text);

// The beta map a mode prescribes for one frame (const: 1, unit: alpha).
BetaMap mode_beta(const SemigroupContext& ctx, const GreenData& green, const DClassFrame& frame,
                  AssemblyMode mode);

// Cell datum of R^beta[G_D] over the group indexed by theta positions,
// transported from the Murphy datum. beta restricted to G_D must be a constant
// unit c; the transport is g -> c^-1 g. Throws ModePreconditionFailed.
CellDatum frame_group_datum(const DClassFrame& frame, const BetaMap& beta);

struct AssembledDatum {
  std::shared_ptr<const CellDatum> datum;
  AssemblyMode mode = AssemblyMode::ConstBeta;
  std::vector<DClassFrame> frames;
  std::vector<BetaMap> betas;
  std::vector<CellDatum> group_data;
  // For each assembled lambda: (frame position, group lambda).
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  std::vector<CheckReport> checks;

  std::optional<std::size_t> lambda_of(std::size_t frame, std::size_t group_lambda) const;
};

struct AssemblyOptions {
  AssemblyMode mode = AssemblyMode::ConstBeta;
  std::vector<BetaMap> betas;  // per frame, general mode only
  bool validate = true;
};

// Throws ModePreconditionFailed or ValidationFailed, with a witness.
AssembledDatum assemble_datum(const SemigroupContext& ctx, std::vector<DClassFrame> frames,
                              const AssemblyOptions& options = {});

// (P_D)_{LK}: an element of the group algebra indexed by theta positions.
struct SandwichMatrix {
  std::size_t frame = 0;
  std::vector<std::vector<AlgebraElement>> entries;
  std::vector<std::vector<std::optional<Element>>> products;  // u_L u_K* when in G_D
};

SandwichMatrix sandwich_matrix(const SemigroupContext& ctx, const DClassFrame& frame,
                               std::size_t frame_position = 0);

struct GramFactorization {
  PolyMatrix assembled;    // Phi^{(D,lambda)}
  PolyMatrix group_gram;   // Phi^lambda
  PolyMatrix rho_p;        // rho^lambda(P_D)
  PolyMatrix product;      // Phi'^lambda rho^lambda(P_D)
  bool matrices_equal = false;
  DeltaPoly det_assembled;
  DeltaPoly det_product;   // (det Phi^lambda)^{|L|} det rho^lambda(P_D)
  bool determinants_equal = false;
};

GramFactorization gram_factorization(const SemigroupContext& ctx, const AssembledDatum& a,
                                     std::size_t frame_position, std::size_t group_lambda);

struct FrameEvidence {
  std::size_t frame = 0;
  std::vector<Rational> group_gram_dets;  // per group lambda
  std::vector<Rational> sandwich_dets;    // det rho^lambda(P_D) per group lambda
  bool group_semisimple = false;
  bool sandwich_invertible = false;
};

struct SemisimplicityReport {
  bool applicable = false;  // every required alpha value is a unit
  std::string inapplicable_reason;
  bool semisimple = false;  // meaningful when applicable
  std::vector<FrameEvidence> frames;
  OracleVerdict oracle;
  bool agrees = false;      // verdict equals the oracle's
};

// Never throws AlphaNotUnit: an inapplicable result is reported with the
// oracle verdict. Use require_applicable for the throwing form.
SemisimplicityReport semisimplicity_report(const SemigroupContext& ctx, const Rational& delta);
void require_applicable(const SemisimplicityReport& report);

// A module over R^beta[G_D] given by one matrix per theta position.
struct GroupModule {
  std::vector<PolyMatrix> action;
  std::size_t dimension() const { return action.empty() ? 0 : action.front().rows(); }
};

struct InducedModule {
  std::size_t frame = 0;
  std::size_t source_dimension = 0;
  std::size_t rclass_count = 0;
  std::vector<PolyMatrix> action;  // per semigroup element
};

// Cell module W(lambda) of a group datum as a GroupModule.
GroupModule cell_module(const CellDatum& group_datum, std::size_t lambda);

// Throws NotAModule with the offending pair.
InducedModule induce_module(const SemigroupContext& ctx, const DClassFrame& frame,
                            const GroupModule& source, const BetaMap& beta);

}  // namespace diagcell
