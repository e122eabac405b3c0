#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "graev/certificates.hpp"
#include "graev/maps.hpp"
#include "graev/norm.hpp"
#include "graev/space.hpp"

namespace graev::io {

using nlohmann::json;

// {"kind":"interval"} or
// {"kind":"finite","base":"e","points":[...],"dist":{"a,b":"p/q",...}}.
// Diagonal entries may be omitted; either orientation of a pair may be given.
// Throws std::invalid_argument on schema errors or when the table is not a metric.
PointedMetricSpace space_from_json(const json& j);
json space_to_json(const PointedMetricSpace& s);

// "interval", "lemma32-m<k>" (conjugacy_space) and "lemma31-m<k>" (prefix_space).
std::optional<PointedMetricSpace> builtin_space(std::string_view name);

// A readable file, else a built-in name (a trailing ".json" is ignored).
PointedMetricSpace resolve_space(const std::string& spec);

// {"k":3,"map":[3,2,1],"cost":"1","pairs":[[1,3]],"fixed":[2]}
json matching_to_json(const NormResult& r);
NormResult matching_from_json(const json& j);

// {"map":{"e1":"e2",...}}, {"scale":"1/2"} or {"knots":[["0","0"],["1/2","1"]]}.
PointMap point_map_from_json(const json& j, const PointedMetricSpace& space);
json point_map_to_json(const PointMap& h);

// {"points":["0","1/2"],"values":["0","1/4"]}
PartialContraction partial_contraction_from_json(const json& j);
json partial_contraction_to_json(const PartialContraction& p);

// {"m":3,"target":"e1 e2 e1^-1","factors":[{"g":"e1","a":"e2"}]}
json decomposition_to_json(const ConjugateDecomposition& d);
ConjugateDecomposition decomposition_from_json(const json& j);

// {"n":3,"c":"1/2","target":"2/5 2/5 2/5","bases":["2/5"]}
json power_certificate_to_json(const PowerCertificate& p, const PointedMetricSpace& s);
PowerCertificate power_certificate_from_json(const json& j, const PointedMetricSpace& s);

using Certificate = std::variant<ConjugateDecomposition, PowerCertificate>;
// Dispatches on the presence of "factors" or "bases".
Certificate certificate_from_json(const json& j, const PointedMetricSpace& s);

// Parses JSON text, or reads it from a file when `source` does not start with '{'.
json load_json(const std::string& source);

}  // namespace graev::io
