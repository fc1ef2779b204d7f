#pragma once

#include "effalg/catalog.hpp"
#include "effalg/duality.hpp"
#include "effalg/internal_states.hpp"
#include "effalg/po_group.hpp"
#include "effalg/reference_suite.hpp"
#include "effalg/state_space.hpp"
#include "effalg/structure.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace effalg {

using Json = nlohmann::ordered_json;

/// Malformed or unsupported input document.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Rational& value);
Json to_json(const RationalVector& values);
Rational rational_from_json(const Json& value);
RationalVector rational_vector_from_json(const Json& value);

/// Structure files come in three shapes:
///   { "n": 4, "zero": 0, "one": 3, "sums": [[i, j, k], ...], "labels": [...] }
///   { "catalog": { "kind": "chain", "n": 3 } }
///   { "group": { "rank": 2, "scalars": "Z", "order": "product", "unit": ["2", "1"] } }
struct StructureInput {
    std::optional<RawSumTable> table;
    std::optional<CatalogSpec> catalog;
    std::optional<IntervalAlgebra> group;
};

StructureInput structure_from_json(const Json& doc);
RawSumTable table_from_json(const Json& doc);
CatalogSpec catalog_from_json(const Json& doc);
IntervalAlgebra group_from_json(const Json& doc);
Json to_json(const CatalogSpec& spec);
Json structure_to_json(const FiniteEffectAlgebra& algebra);

/// Simplex files: { "vertices": ["v1", ...], "g": [j0, j1, ...], "n": 2 }.
struct SimplexInput {
    FiniteSimplex simplex;
    VertexMap g;
};
SimplexInput simplex_from_json(const Json& doc);

Json to_json(const AxiomViolation& violation);
Json to_json(const StructureReport& report, const std::vector<Ideal>& ideals);
Json to_json(const Classification& c);
Json to_json(const InducedStateMap& g);
Json to_json(const OrderDeterminingReport& r);
Json to_json(const RoundTripReport& r);
Json to_json(const MorphismReport& r);
/// Timing is left out so that reports are reproducible.
Json to_json(const SuiteCheck& c);

} // namespace effalg
