#pragma once

#include <json.hpp>

#include <string>

#include "diversity/checkers.hpp"
#include "diversity/diversity.hpp"
#include "diversity/finite.hpp"
#include "diversity/kernels.hpp"

// JSON forms of the public types. Readers throw ParseError on malformed
// documents; payload validation errors (DomainError, PreconditionError) pass
// through unchanged.
namespace diversity::io {

using nlohmann::json;

json to_json(const PointSet& a);
PointSet point_set_from_json(const json& j);

json to_json(const HPolytope& k);
HPolytope kernel_from_json(const json& j);

json to_json(const DiscreteSphericalMeasure& nu);
DiscreteSphericalMeasure measure_from_json(const json& j);

json to_json(const SphereSampler& s);
SphereSampler sampler_from_json(const json& j);

/// {"type": "l1"}, {"type": "diameter", "norm": "l2"}, {"type": "minkowski",
/// "kernel": {...}}, {"type": "weighted-sum", "terms": [{"weight": w, "spec":
/// {...}}, ...]}, and so on; see the README for every variant.
json to_json(const DiversitySpec& s);
DiversitySpec spec_from_json(const json& j);

/// {"ground": [...], "values": [{"subset": [...], "value": v}, ...]}. Every
/// subset with two or more labels must be listed; singletons default to 0.
json to_json(const DiversityTable& t);
DiversityTable table_from_json(const json& j);

json to_json(const NegativeTypeReport& r, const DiversityTable& t);
json to_json(const CheckReport& r);

std::string norm_name(Norm n);

/// Reads and parses a file; ParseError when it cannot be opened or parsed.
json read_file(const std::string& path);

}  // namespace diversity::io
