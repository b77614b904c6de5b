#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halfflow/bisubmodular.hpp"
#include "halfflow/errors.hpp"
#include "halfflow/instance.hpp"
#include "halfflow/oracle.hpp"
#include "halfflow/solver.hpp"

namespace py = pybind11;

namespace {

std::string solve_json(const std::string& text) {
  auto instance = halfflow::parse_instance(text);
  auto report = halfflow::solve_instance(instance);
  auto out = halfflow::report_to_json(instance, report, {true, true, true});
  out["verified"] = report.verified();
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Half-integral maximum node-capacitated multiflow";

  py::register_exception<halfflow::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<halfflow::SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  py::register_exception<halfflow::UnboundedInstance>(m, "UnboundedInstance", PyExc_ValueError);
  py::register_exception<halfflow::TooLarge>(m, "TooLarge", PyExc_RuntimeError);

  m.def("solve", &solve_json, py::arg("instance_json"),
        "Solve an instance given as JSON text; returns the result as JSON text.");
  m.def("normalize", [](const std::string& text) { return halfflow::serialize_instance(halfflow::parse_instance(text)); },
        py::arg("instance_json"), "Validate and re-serialize an instance.");
  m.def("dual_enum", [](const std::string& text) { return halfflow::dual_enum(halfflow::parse_instance(text)); },
        py::arg("instance_json"), "Exhaustive minimum of the dual objective on small instances.");
  m.def("delta_star", [](std::int64_t b, int mask) { return halfflow::delta_star(b, static_cast<halfflow::SignedSubset>(mask)); },
        py::arg("b"), py::arg("mask"));
  m.def("classify_type", [](int mask) { return halfflow::classify_type(static_cast<halfflow::SignedSubset>(mask)); },
        py::arg("mask"));
  m.def("exchange_capacity", &halfflow::exchange_capacity, py::arg("b"), py::arg("x"), py::arg("u"), py::arg("v"));
}
