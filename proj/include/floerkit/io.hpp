#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "floerkit/ainfty.hpp"
#include "floerkit/conductors.hpp"
#include "floerkit/maslov.hpp"
#include "floerkit/morse.hpp"
#include "floerkit/polytopes.hpp"
#include "floerkit/strings.hpp"

namespace floerkit {

using Json = nlohmann::ordered_json;

// Raises ParseError carrying the 1-based line and column of the failure.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
// Series literal such as "2 - t^1/2 + O(t^3)", or a plain integer.
Series series_from_json(const Json& j);

AInftyDatum datum_from_json(const Json& j);
Json to_json(const AInftyDatum& d);
// Entries {"q", "inputs", "output", "coeff"}; inputs name source generators,
// outputs target generators.
Tensor tensor_from_json(const Json& j, const AInftyDatum& source, const AInftyDatum& target);
Json tensor_to_json(const Tensor& t, const AInftyDatum& source, const AInftyDatum& target);
MapDatum map_from_json(const Json& j, const AInftyDatum& source, const AInftyDatum& target);
Augmentation augmentation_from_json(const Json& j, const AInftyDatum& d);
Json to_json(const Augmentation& a, const AInftyDatum& d);

Polynomial polynomial_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
LagrangianPath path_from_json(const Json& j);

MorseDatum morse_from_json(const Json& j);

// {"factors": [{"id", "from", "to", "mu"}], "shift": e}
OpenString open_string_from_json(const Json& j);
Json to_json(const OpenString& s);

Conductor conductor_from_json(const Json& j);
Continuation continuation_from_json(const Json& j);
Json to_json(const Conductor& c);
Json to_json(const Continuation& c);

Json to_json(const CheckReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const AugmentationReport& r);
Json to_json(const CohomologyReport& r);
Json to_json(const SymbolicReport& r);
Json to_json(const LemmaReport& r);
Json to_json(const CrossingReport& r);
Json to_json(const SftIndexBound& b);
Json to_json(const BoundaryReport& r);
Json to_json(const FacetFactorization& f);

}  // namespace floerkit
