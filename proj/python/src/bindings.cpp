// JSON in, JSON out: documents cross the boundary as strings and the Python
// package turns them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diversity/checkers.hpp"
#include "diversity/errors.hpp"
#include "diversity/finite.hpp"
#include "diversity/io.hpp"

namespace py = pybind11;
using namespace diversity;
using io::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

double eval_json(const std::string& spec, const std::string& points) {
  return eval(io::spec_from_json(parse(spec)), io::point_set_from_json(parse(points)));
}

std::string check_json(const std::string& spec, const std::string& suite, std::uint64_t seed,
                       std::size_t trials, double tol) {
  CheckConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.tol = tol;
  json out = json::array();
  for (const auto& r : run_suite(io::spec_from_json(parse(spec)), suite, cfg)) out.push_back(io::to_json(r));
  return out.dump();
}

std::string negative_type_json(const std::string& table, std::optional<double> tol) {
  const auto t = io::table_from_json(parse(table));
  const auto r = negative_type(t, tol);
  return io::to_json(r, t).dump();
}

std::string restrict_json(const std::string& spec, const std::vector<std::string>& labels,
                          const std::vector<Vector>& points) {
  if (labels.size() != points.size()) throw DomainError("labels and points differ in length");
  std::vector<std::pair<std::string, Vector>> lp;
  for (std::size_t i = 0; i < labels.size(); ++i) lp.emplace_back(labels[i], points[i]);
  return io::to_json(restrict(io::spec_from_json(parse(spec)), lp)).dump();
}

std::string table_axioms_json(const std::string& table) {
  const auto t = io::table_from_json(parse(table));
  json out = json::array();
  for (const auto& v : check_table_axioms(t)) {
    out.push_back({{"axiom", to_string(v.kind)},
                   {"s", t.labels_of(v.s)},
                   {"t", t.labels_of(v.t)},
                   {"lhs", v.lhs},
                   {"rhs", v.rhs}});
  }
  return out.dump();
}

std::string measure_to_kernel(const std::string& measure) {
  return io::to_json(kernel_from_measure(io::measure_from_json(parse(measure)))).dump();
}

std::string kernel_to_measure(const std::string& kernel) {
  return io::to_json(measure_from_simplex_kernel(io::kernel_from_json(parse(kernel)))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Diversity evaluation and property checks (JSON string interface)";

  auto base = py::register_exception<Error>(m, "DiversityError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  m.def("eval", &eval_json, py::arg("spec"), py::arg("points"));
  m.def("check", &check_json, py::arg("spec"), py::arg("suite") = "all", py::arg("seed") = 0,
        py::arg("trials") = 200, py::arg("tol") = 1e-8);
  m.def("negative_type", &negative_type_json, py::arg("table"), py::arg("tol") = py::none());
  m.def("restrict", &restrict_json, py::arg("spec"), py::arg("labels"), py::arg("points"));
  m.def("table_axioms", &table_axioms_json, py::arg("table"));
  m.def("measure_to_kernel", &measure_to_kernel, py::arg("measure"));
  m.def("kernel_to_measure", &kernel_to_measure, py::arg("kernel"));
  m.def("suite_names", &suite_names);
}
