#include "diversity/io.hpp"

#include <bit>
#include <cmath>
#include <fstream>

#include "diversity/errors.hpp"

namespace diversity::io {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<Vector> vectors(const json& j, const char* key) { return get<std::vector<Vector>>(j, key); }

Norm norm_from_name(const std::string& s) {
  if (s == "l1") return Norm::L1;
  if (s == "l2") return Norm::L2;
  if (s == "linf") return Norm::Linf;
  throw ParseError("unknown norm '" + s + "' (expected l1, l2 or linf)");
}

}  // namespace

std::string norm_name(Norm n) {
  switch (n) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::Linf: return "linf";
  }
  return "l2";
}

json to_json(const PointSet& a) { return {{"dim", a.dim()}, {"points", a.points()}}; }

PointSet point_set_from_json(const json& j) {
  const auto dim = get<std::size_t>(j, "dim");
  return PointSet(dim, vectors(j, "points"));
}

json to_json(const HPolytope& k) { return {{"normals", k.normals()}, {"offsets", k.offsets()}}; }

HPolytope kernel_from_json(const json& j) { return HPolytope(vectors(j, "normals"), get<Vector>(j, "offsets")); }

json to_json(const DiscreteSphericalMeasure& nu) {
  json atoms = json::array();
  for (const auto& a : nu.atoms) atoms.push_back({{"u", a.direction}, {"m", a.mass}});
  return {{"atoms", atoms}};
}

DiscreteSphericalMeasure measure_from_json(const json& j) {
  const auto atoms = get<json>(j, "atoms");
  if (!atoms.is_array()) throw ParseError("field 'atoms' must be an array");
  DiscreteSphericalMeasure nu;
  for (const auto& a : atoms) nu.atoms.push_back({get<Vector>(a, "u"), get<double>(a, "m")});
  return nu;
}

json to_json(const SphereSampler& s) {
  json j{{"dim", s.dim}, {"count", s.count}};
  if (s.mode == SphereMode::Equiangular2d) {
    j["mode"] = "equiangular-2d";
  } else {
    j["mode"] = "uniform";
    j["seed"] = s.seed;
  }
  return j;
}

SphereSampler sampler_from_json(const json& j) {
  const auto mode = get<std::string>(j, "mode");
  const auto count = get<std::size_t>(j, "count");
  if (mode == "equiangular-2d") {
    if (j.contains("dim") && get<std::size_t>(j, "dim") != 2) {
      throw DomainError("equiangular sampling requires dimension 2");
    }
    return SphereSampler::equiangular(count);
  }
  if (mode == "uniform") {
    const auto seed = j.contains("seed") ? get<std::uint64_t>(j, "seed") : std::uint64_t{0};
    return SphereSampler::uniform(get<std::size_t>(j, "dim"), count, seed);
  }
  throw ParseError("unknown sampler mode '" + mode + "'");
}

json to_json(const DiversitySpec& s) {
  json j{{"type", s.type_name()}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Diameter>) {
          j["norm"] = norm_name(v.norm);
        } else if constexpr (std::is_same_v<T, spec::Minkowski>) {
          j["kernel"] = to_json(v.kernel);
        } else if constexpr (std::is_same_v<T, spec::SimplexClosedForm>) {
          j["normals"] = v.simplex.normals;
          j["weights"] = v.simplex.weights;
        } else if constexpr (std::is_same_v<T, spec::DiscreteLinear>) {
          j["measure"] = to_json(v.measure);
        } else if constexpr (std::is_same_v<T, spec::MeanWidth>) {
          j["sampler"] = to_json(v.sampler);
        } else if constexpr (std::is_same_v<T, spec::MeanWidthP>) {
          j["p"] = v.p;
          j["sampler"] = to_json(v.sampler);
        } else if constexpr (std::is_same_v<T, spec::Zonotope>) {
          j["directions"] = v.directions;
        } else if constexpr (std::is_same_v<T, spec::WeightedSum>) {
          json terms = json::array();
          for (std::size_t i = 0; i < v.terms.size(); ++i)
            terms.push_back({{"weight", v.weights[i]}, {"spec", to_json(v.terms[i])}});
          j["terms"] = terms;
        } else if constexpr (std::is_same_v<T, spec::MaxOf>) {
          json terms = json::array();
          for (const auto& t : v.terms) terms.push_back(to_json(t));
          j["terms"] = terms;
        }
      },
      s.variant());
  return j;
}

DiversitySpec spec_from_json(const json& j) {
  const auto type = get<std::string>(j, "type");
  if (type == "diameter") {
    return DiversitySpec::diameter(j.contains("norm") ? norm_from_name(get<std::string>(j, "norm")) : Norm::L2);
  }
  if (type == "l1") return DiversitySpec::l1();
  if (type == "circumradius") return DiversitySpec::circumradius();
  if (type == "minkowski") return DiversitySpec::minkowski(kernel_from_json(get<json>(j, "kernel")));
  if (type == "simplex-closed-form") {
    return DiversitySpec::simplex_closed_form({vectors(j, "normals"), get<Vector>(j, "weights")});
  }
  if (type == "discrete-linear") return DiversitySpec::discrete_linear(measure_from_json(get<json>(j, "measure")));
  if (type == "mean-width") return DiversitySpec::mean_width(sampler_from_json(get<json>(j, "sampler")));
  if (type == "mean-width-p") {
    return DiversitySpec::mean_width_p(get<double>(j, "p"), sampler_from_json(get<json>(j, "sampler")));
  }
  if (type == "zonotope") return DiversitySpec::zonotope(vectors(j, "directions"));
  if (type == "weighted-sum" || type == "max-of") {
    const auto terms = get<json>(j, "terms");
    if (!terms.is_array()) throw ParseError("field 'terms' must be an array");
    std::vector<double> weights;
    std::vector<DiversitySpec> specs;
    for (const auto& t : terms) {
      if (type == "weighted-sum") {
        weights.push_back(get<double>(t, "weight"));
        specs.push_back(spec_from_json(get<json>(t, "spec")));
      } else {
        specs.push_back(spec_from_json(t));
      }
    }
    return type == "max-of" ? DiversitySpec::max_of(std::move(specs))
                            : DiversitySpec::weighted_sum(std::move(weights), std::move(specs));
  }
  throw ParseError("unknown diversity type '" + type + "'");
}

json to_json(const DiversityTable& t) {
  json values = json::array();
  for (Subset s = 1; s <= t.full(); ++s) values.push_back({{"subset", t.labels_of(s)}, {"value", t[s]}});
  return {{"ground", t.ground()}, {"values", values}};
}

DiversityTable table_from_json(const json& j) {
  const auto ground = get<std::vector<std::string>>(j, "ground");
  if (ground.empty()) throw ParseError("table ground list is empty");
  if (ground.size() > kMaxGround) {
    throw DomainError("diversity table ground set exceeds " + std::to_string(kMaxGround) + " labels");
  }
  const auto entries = get<json>(j, "values");
  if (!entries.is_array()) throw ParseError("field 'values' must be an array");
  const std::size_t count = std::size_t{1} << ground.size();
  std::vector<double> values(count, 0.0);
  std::vector<bool> seen(count, false);
  // Label lookup goes through a provisional table so unknown labels are reported uniformly.
  const DiversityTable shape(ground, std::vector<double>(count, 0.0));
  for (const auto& e : entries) {
    const auto labels = get<std::vector<std::string>>(e, "subset");
    const Subset s = shape.subset_of(labels);
    if (s == 0) throw ParseError("table entry for the empty subset");
    if (seen[s]) throw ParseError("table lists a subset twice");
    seen[s] = true;
    values[s] = get<double>(e, "value");
  }
  for (Subset s = 1; s < count; ++s) {
    if (!seen[s] && std::popcount(s) > 1) {
      std::string names;
      for (const auto& l : shape.labels_of(s)) names += (names.empty() ? "" : ",") + l;
      throw ParseError("table is missing subset {" + names + "}");
    }
  }
  return DiversityTable(ground, std::move(values));
}

json to_json(const NegativeTypeReport& r, const DiversityTable& t) {
  json j{{"decision", r.decision},
         {"max_projected_eigenvalue", r.max_projected_eigenvalue},
         {"tolerance", r.tolerance}};
  if (!r.certificate.empty()) {
    json cert = json::array();
    for (std::size_t i = 0; i < r.certificate.size(); ++i)
      cert.push_back({{"subset", t.labels_of(static_cast<Subset>(i + 1))}, {"x", r.certificate[i]}});
    j["certificate"] = cert;
    j["form"] = union_form(t, r.certificate);
  }
  return j;
}

json to_json(const CheckReport& r) {
  json j{{"property", r.property}, {"pass", r.pass}, {"seed", r.seed}, {"trials", r.trials}};
  j["worst_excess"] = std::isfinite(r.worst_excess) ? json(r.worst_excess) : json(nullptr);
  if (r.witness) {
    json sets = json::object();
    for (const auto& [name, a] : r.witness->sets) sets[name] = to_json(a);
    json scalars = json::object();
    for (const auto& [name, v] : r.witness->scalars) scalars[name] = v;
    j["witness"] = {{"relation", r.witness->relation}, {"trial", r.witness->trial}, {"sets", sets},
                    {"scalars", scalars},                {"lhs", r.witness->lhs},     {"rhs", r.witness->rhs}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace diversity::io
