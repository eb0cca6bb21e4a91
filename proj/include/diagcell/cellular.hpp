#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diagcell/error.hpp"
#include "diagcell/poly_matrix.hpp"
#include "diagcell/twisted_algebra.hpp"

namespace diagcell {

struct LambdaInfo {
  std::string label;
  std::size_t index_size = 0;
  std::vector<std::string> index_labels;  // optional, one per index
};

// Position of a basis element C^lambda_{st}.
struct CellIndex {
  std::size_t lambda = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

class CoordinateSolver;

// A candidate cell datum (Lambda, M, C, *) over a twisted semigroup algebra.
// Construction only checks shapes and that the order is a strict partial
// order; the axioms are checked by check_C1/C2/C3.
class CellDatum {
 public:
  using Basis = std::vector<std::vector<std::vector<AlgebraElement>>>;  // [lambda][s][t]

  CellDatum(std::shared_ptr<const TwistedAlgebra> algebra, std::vector<LambdaInfo> lambdas,
            std::vector<std::pair<std::size_t, std::size_t>> strict_order, Basis basis);

  const TwistedAlgebra& algebra() const noexcept { return *algebra_; }
  std::shared_ptr<const TwistedAlgebra> algebra_ptr() const noexcept { return algebra_; }
  std::size_t lambda_count() const noexcept { return lambdas_.size(); }
  const LambdaInfo& lambda(std::size_t i) const { return lambdas_.at(i); }
  const std::vector<LambdaInfo>& lambdas() const noexcept { return lambdas_; }
  std::size_t index_size(std::size_t lambda) const { return lambdas_.at(lambda).index_size; }
  bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
  std::vector<std::pair<std::size_t, std::size_t>> strict_order() const;

  const AlgebraElement& C(std::size_t lambda, std::size_t s, std::size_t t) const {
    return basis_[lambda][s][t];
  }
  const Basis& basis() const noexcept { return basis_; }
  std::size_t basis_size() const noexcept { return flat_.size(); }
  const CellIndex& cell_index(std::size_t flat) const { return flat_[flat]; }
  std::size_t flat_index(std::size_t lambda, std::size_t s, std::size_t t) const {
    return offsets_[lambda] + s * lambdas_[lambda].index_size + t;
  }

  std::map<std::string, std::string>& metadata() noexcept { return metadata_; }
  const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

  // Change-of-basis solver, built on first use.
  const CoordinateSolver& solver() const;

 private:
  std::shared_ptr<const TwistedAlgebra> algebra_;
  std::vector<LambdaInfo> lambdas_;
  std::vector<std::vector<bool>> less_;
  Basis basis_;
  std::vector<CellIndex> flat_;
  std::vector<std::size_t> offsets_;
  std::map<std::string, std::string> metadata_;
  struct SolverCache {
    std::once_flag once;
    std::shared_ptr<const CoordinateSolver> solver;
  };
  std::shared_ptr<SolverCache> cache_ = std::make_shared<SolverCache>();
};

// Expresses algebra elements in the cell basis. The change-of-basis matrix is
// split into independent blocks (connected components of the support graph).
class CoordinateSolver {
 public:
  explicit CoordinateSolver(const CellDatum& datum);

  bool valid() const noexcept { return problem_.empty(); }
  const std::string& problem() const noexcept { return problem_; }
  // Product of the block determinants; equals the full determinant up to sign.
  const DeltaPoly& determinant() const noexcept { return det_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  // Coordinates indexed by flat basis position. Throws ValidationFailed if the
  // datum is not a basis.
  std::map<std::size_t, DeltaPoly> express(const AlgebraElement& v) const;

 private:
  struct Block {
    std::vector<std::size_t> basis;   // flat basis indices
    std::vector<Element> elements;    // semigroup elements
    PolyMatrix inverse;               // basis x elements
  };
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_element_;
  std::vector<std::size_t> pos_in_block_;
  DeltaPoly det_;
  std::string problem_;
};

// A(<lambda) as the list of basis elements C^mu with mu < lambda.
std::vector<AlgebraElement> lower_span_basis(const CellDatum& datum, std::size_t lambda);

CheckReport check_C1(const CellDatum& datum, std::size_t ambient_dimension);
CheckReport check_C2(const CellDatum& datum);

struct StructureCoefficients {
  // r[g][lambda](s', s) = r_a(s', s) for generator g.
  std::vector<std::vector<PolyMatrix>> r;
  CheckReport report;
};

StructureCoefficients check_C3(const CellDatum& datum,
                               const std::vector<AlgebraElement>& generators);

// All semigroup basis elements, the generator set used for full C3 checks.
std::vector<AlgebraElement> semigroup_basis(const TwistedAlgebra& algebra);

// rho^lambda(a)(s, t) = r_a(s, t). Throws C3Violation.
PolyMatrix cell_rho(const CellDatum& datum, std::size_t lambda, const AlgebraElement& a);

// Matrix of phi_a^lambda. With `a` omitted the product C_{s's} C_{tt'} is used
// directly. (s', t') = (s, t) defines the value; all other (s', t') pairs are
// checked when |M(lambda)| <= exhaustive_limit, a fixed sample otherwise.
// Throws InconsistentForm.
PolyMatrix phi_a(const CellDatum& datum, std::size_t lambda,
                 const std::optional<AlgebraElement>& a, std::size_t exhaustive_limit = 4);

// Phi^lambda: phi_a with a = the algebra identity when the semigroup identity
// is one, else the identity-free form.
PolyMatrix gram_matrix(const CellDatum& datum, std::size_t lambda,
                       std::size_t exhaustive_limit = 4);

struct GramVerdict {
  bool semisimple = true;
  std::vector<Rational> determinants;  // per lambda, at the given delta
};

GramVerdict semisimple_by_gram(const CellDatum& datum, const Rational& delta);

struct OracleVerdict {
  bool semisimple = false;
  std::size_t rank = 0;
  std::size_t dimension = 0;
};

// Trace form tr(L_a L_b) of the left regular representation over Q; the
// algebra is semisimple iff the form is nondegenerate. `alpha` must have
// constant values (specialize first).
OracleVerdict radical_oracle(const FiniteSemigroup& s, const TwistingMap& alpha);

}  // namespace diagcell
