#include <pybind11/pybind11.h>

#include "aarp/cli.hpp"
#include "aarp/errors.hpp"

namespace py = pybind11;

namespace {

aarp::DataSet load(const std::string& data) { return aarp::dataset_from_text(data); }

std::string check(const std::string& data, const std::string& axiom, const std::string& theory,
                  const std::string& theory2, std::size_t k, std::size_t max_states, std::size_t max_candidates) {
  aarp::CheckOptions o;
  o.axiom = axiom;
  o.theory = theory;
  o.theory2 = theory2;
  o.k = k;
  o.max_states = max_states;
  o.max_candidates = max_candidates;
  return aarp::run_check(load(data), o).dump();
}

std::string oracle(const std::string& data, const std::string& theory, bool transitive, bool complete, std::size_t cap) {
  aarp::OracleFlags flags;
  flags.require_transitive = transitive;
  flags.require_complete = complete;
  return aarp::run_oracle(load(data), theory, flags, cap).dump();
}

}  // namespace

PYBIND11_MODULE(_aarp, m) {
  m.doc() = "Algebraic revealed preference tests (JSON in, JSON out)";

  auto base = py::register_exception<aarp::Error>(m, "AarpError", PyExc_RuntimeError);
  py::register_exception<aarp::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<aarp::CapExceeded>(m, "CapExceeded", base.ptr());

  const aarp::CheckOptions defaults;
  m.def("check", &check, py::arg("data"), py::arg("axiom"), py::arg("theory") = "trivial",
        py::arg("theory2") = "trivial", py::arg("k") = defaults.k, py::arg("max_states") = defaults.max_states,
        py::arg("max_candidates") = defaults.max_candidates);
  m.def(
      "complete",
      [](const std::string& data, const std::string& theory, const std::string& closure) {
        return aarp::run_complete(load(data), theory, closure).dump();
      },
      py::arg("data"), py::arg("theory") = "trivial", py::arg("closure") = "transitive");
  m.def("oracle", &oracle, py::arg("data"), py::arg("theory") = "trivial", py::arg("transitive") = false,
        py::arg("complete") = false, py::arg("cap") = aarp::kOracleDefaultCap);
  m.def(
      "laws",
      [](const std::string& data, const std::string& theory, std::size_t samples, std::uint64_t seed) {
        return aarp::run_laws(load(data), theory, samples, seed).dump();
      },
      py::arg("data"), py::arg("theory") = "trivial", py::arg("samples") = 40, py::arg("seed") = 1);
  m.def(
      "normalize", [](const std::string& data) { return aarp::dataset_to_json(load(data)).dump(); }, py::arg("data"));
  m.def(
      "render", [](const std::string& report) { return aarp::render_human(aarp::Json::parse(report)); },
      py::arg("report"));
}
