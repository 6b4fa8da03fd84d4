#ifndef MULTIPORT_SERIALIZE_HPP
#define MULTIPORT_SERIALIZE_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "multiport/circuit.hpp"
#include "multiport/fock.hpp"
#include "multiport/lift.hpp"
#include "multiport/universality.hpp"

namespace multiport {

// JSON interchange formats. Complex numbers are [re, im] pairs throughout.
//   Occupation      flat array of counts, e.g. [1,0,2]
//   ComplexMatrix   {"rows": r, "cols": c, "entries": [[re,im],...]} row-major
//   StateVector     {"m": m, "n": n, "amplitudes": [[re,im],...]} basis order
//   LiftedUnitary   {"m": m, "n": n, "basis": [[ints],...], "matrix": ComplexMatrix}
//   Circuit         {"m": m, "elements": [{"kind":"ps"|"bs","modes":[..],...}]}
// Schema violations raise ValidationError with the offending field named.

using Json = nlohmann::json;

/// Parses text, reporting failures as ValidationError with line and column.
Json parse_json(std::string_view text, const std::string& source_name);

Json occupation_to_json(const Occupation& occ);
Occupation occupation_from_json(const Json& j);

Json matrix_to_json(const Matrix& matrix);
Matrix matrix_from_json(const Json& j);

Json state_to_json(const StateVector& state);
StateVector state_from_json(const Json& j);

Json lifted_to_json(const LiftedUnitary& lifted);
/// Checks the stored basis against the canonical enumeration and the matrix
/// against the unitarity invariant (defect <= 1e-9 * M).
LiftedUnitary lifted_from_json(const Json& j);

Json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& j);

Json classification_to_json(const UniversalityClass& klass);
UniversalityClass classification_from_json(const Json& j);

Json search_result_to_json(const SearchResult& result);
SearchResult search_result_from_json(const Json& j);

}  // namespace multiport

#endif
