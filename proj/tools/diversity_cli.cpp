// Command-line front end. Exit codes: 0 ok, 1 property failure, 2 parse
// error, 3 domain error, 4 failed mathematical precondition.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "diversity/checkers.hpp"
#include "diversity/errors.hpp"
#include "diversity/finite.hpp"
#include "diversity/io.hpp"

using namespace diversity;
using io::json;

namespace {

constexpr std::size_t kCliNegativeTypeGround = 6;

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw DomainError("cannot write '" + out + "'");
  f << j.dump(2) << '\n';
}

DiversityTable load_table(const std::string& path) {
  const json j = io::read_file(path);
  // The size limit is checked before the (exponentially long) value list.
  if (j.is_object() && j.contains("ground") && j["ground"].is_array() &&
      j["ground"].size() > kCliNegativeTypeGround) {
    throw DomainError("table has " + std::to_string(j["ground"].size()) +
                      " labels; the command-line limit is " + std::to_string(kCliNegativeTypeGround));
  }
  return io::table_from_json(j);
}

std::vector<std::pair<std::string, Vector>> labelled_points(const json& j) {
  const PointSet a = io::point_set_from_json(j);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    try {
      labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw ParseError("field 'labels' must be a list of strings");
    }
    if (labels.size() != a.size()) throw ParseError("'labels' and 'points' differ in length");
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) labels.push_back("p" + std::to_string(i));
  }
  std::vector<std::pair<std::string, Vector>> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(labels[i], a[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and test diversities on R^k and on finite tables"};
  app.require_subcommand(1);

  std::string spec_path, points_path, table_path, input_path, out_path, suite = "all", direction;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  double tol = 1e-8;
  std::optional<double> table_tol;

  auto* compute = app.add_subcommand("compute", "Print delta(A) for a spec and a point set");
  compute->add_option("--spec", spec_path, "Diversity spec JSON")->required();
  compute->add_option("--points", points_path, "Point set JSON")->required();
  compute->add_option("--out", out_path, "Also write {type, value} JSON here");

  auto* check = app.add_subcommand("check", "Run a property suite; exit 1 when any check fails");
  check->add_option("--spec", spec_path, "Diversity spec JSON")->required();
  check->add_option("--suite", suite, "axioms, sublinear, linear, invariance, deletion, lipschitz, valuation or all");
  check->add_option("--seed", seed, "Sampler seed");
  check->add_option("--trials", trials, "Trials per check");
  check->add_option("--tol", tol, "Relative comparison tolerance");
  check->add_option("--out", out_path, "Write the report array here instead of stdout");

  auto* negtype = app.add_subcommand("negtype", "Decide negative type of a diversity table");
  auto* embed = app.add_subcommand("embed-decide", "Decide linear embeddability of a diversity table");
  for (auto* sub : {negtype, embed}) {
    sub->add_option("--table", table_path, "Diversity table JSON")->required();
    sub->add_option("--tol", table_tol, "Eigenvalue tolerance (default 1e-9 max|M|)");
    sub->add_option("--out", out_path, "Write the decision here instead of stdout");
  }

  auto* convert = app.add_subcommand("convert", "Convert between balanced measures and simplex kernels");
  convert->add_option("direction", direction, "measure-to-kernel or kernel-to-measure")
      ->required()
      ->check(CLI::IsMember({"measure-to-kernel", "kernel-to-measure"}));
  convert->add_option("--input", input_path, "Measure or kernel JSON")->required();
  convert->add_option("--out", out_path, "Write the result here instead of stdout");

  auto* restrict_cmd = app.add_subcommand("restrict", "Tabulate a spec on every subset of labelled points");
  restrict_cmd->add_option("--spec", spec_path, "Diversity spec JSON")->required();
  restrict_cmd->add_option("--points", points_path, "Point set JSON, optionally with \"labels\"")->required();
  restrict_cmd->add_option("--out", out_path, "Write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::Parse);
  }

  try {
    if (*compute) {
      const auto spec = io::spec_from_json(io::read_file(spec_path));
      const auto a = io::point_set_from_json(io::read_file(points_path));
      const double v = eval(spec, a);
      std::cout << format_value(v) << '\n';
      if (!out_path.empty()) emit({{"type", spec.type_name()}, {"value", v}}, out_path);
      return 0;
    }
    if (*check) {
      const auto spec = io::spec_from_json(io::read_file(spec_path));
      CheckConfig cfg;
      cfg.seed = seed;
      cfg.trials = trials;
      cfg.tol = tol;
      const auto reports = run_suite(spec, suite, cfg);
      json arr = json::array();
      bool ok = true;
      for (const auto& r : reports) {
        arr.push_back(io::to_json(r));
        ok = ok && r.pass;
      }
      emit(arr, out_path);
      if (!out_path.empty()) {
        for (const auto& r : reports) std::cout << r.property << ": " << (r.pass ? "pass" : "FAIL") << '\n';
      }
      return ok ? 0 : 1;
    }
    if (*negtype || *embed) {
      const auto t = load_table(table_path);
      const auto r = negative_type(t, table_tol);
      json j = io::to_json(r, t);
      if (*embed) j["linear_embeddable"] = r.decision;
      emit(j, out_path);
      return 0;
    }
    if (*convert) {
      const json in = io::read_file(input_path);
      if (direction == "measure-to-kernel") {
        emit(io::to_json(kernel_from_measure(io::measure_from_json(in))), out_path);
      } else {
        emit(io::to_json(measure_from_simplex_kernel(io::kernel_from_json(in))), out_path);
      }
      return 0;
    }
    if (*restrict_cmd) {
      const auto spec = io::spec_from_json(io::read_file(spec_path));
      emit(io::to_json(restrict(spec, labelled_points(io::read_file(points_path)))), out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::Domain);
  }
  return 0;
}
