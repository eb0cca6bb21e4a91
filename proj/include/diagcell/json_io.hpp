#pragma once

#include <json.hpp>

#include "diagcell/assembly.hpp"
#include "diagcell/cellular.hpp"
#include "diagcell/diagram.hpp"

namespace diagcell {

using Json = nlohmann::ordered_json;

// Every parser throws Error(Parse) on malformed input.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const DeltaPoly& p);  // {"coeffs": ["1/2", "0", "3"]}
DeltaPoly delta_poly_from_json(const Json& j);

Json to_json(const FiniteSemigroup& s);  // {"size", "table", "identity"}
FiniteSemigroup semigroup_from_json(const Json& j);

Json to_json(const SetPartition& x);  // {"n", "blocks"}
SetPartition set_partition_from_json(const Json& j);

Json to_json(const AlgebraElement& a);  // {"terms": [{"elem", "coeff"}]}
AlgebraElement algebra_element_from_json(const Json& j);

Json to_json(const PolyMatrix& m);  // {"rows", "cols", "entries"}
PolyMatrix poly_matrix_from_json(const Json& j);

Json to_json(const CheckReport& r);

Json to_json(const DiagramMonoid& m);
// Rebuilds the monoid from its element list and checks the stored tables.
DiagramMonoid diagram_monoid_from_json(const Json& j);
bool same_monoid(const DiagramMonoid& a, const DiagramMonoid& b);

// A semigroup with "star" (required) and optional "alpha" (matrix of
// DeltaPoly; trivial when absent), validated.
SemigroupContext generic_context_from_json(const Json& j);

Json to_json(const CellDatum& d);
CellDatum cell_datum_from_json(const Json& j, std::shared_ptr<const TwistedAlgebra> algebra);
bool same_datum(const CellDatum& a, const CellDatum& b);

Json to_json(const GreenData& g);

}  // namespace diagcell
