#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kanrep/targets.hpp"

namespace py = pybind11;

namespace {

kanrep::FieldContext field_of(const std::string& text) {
  try {
    return kanrep::FieldContext::parse(text);
  } catch (const std::exception& e) {
    throw kanrep::UsageError(std::string("bad field: ") + e.what());
  }
}

py::tuple result(const kanrep::CommandOutput& out) { return py::make_tuple(out.exit_code, out.json.dump()); }

py::tuple build(const std::string& kind, unsigned n, const std::string& alpha, std::optional<unsigned> parity,
                unsigned truncation, const std::string& field) {
  std::string params = "n=" + std::to_string(n);
  if (!alpha.empty()) params += ",alpha=" + alpha;
  if (parity) params += ",parity=" + std::to_string(*parity);
  if (kind == "tensor") params += ",N=" + std::to_string(truncation);
  return result(kanrep::run_build(kind, kanrep::make_target(kind, params, field_of(field))));
}

py::tuple check(const std::string& suite, const std::string& target, std::size_t limit, unsigned threads,
                const std::string& field) {
  if (threads == 0) throw kanrep::UsageError("threads must be positive");
  kanrep::CheckOptions options;
  options.limit = limit;
  options.threads = threads;
  const kanrep::Target t = kanrep::parse_target(target, field_of(field));
  kanrep::CommandOutput out;
  {
    py::gil_scoped_release release;
    out = kanrep::run_check(suite, t, options);
  }
  return result(out);
}

}  // namespace

PYBIND11_MODULE(_kanrep, m) {
  m.doc() = "Exact Kan(n) superalgebra and V(alpha) bimodule engine";
  py::register_exception<kanrep::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("build", &build, py::arg("kind"), py::arg("n"), py::arg("alpha") = "", py::arg("parity") = py::none(),
        py::arg("N") = 4, py::arg("field") = "q", "(exit_code, JSON) of a serialized construction");
  m.def("check", &check, py::arg("suite"), py::arg("target"), py::arg("limit") = 10, py::arg("threads") = 1,
        py::arg("field") = "q", "(exit_code, JSON) of a verification suite");
  m.def(
      "classify",
      [](const std::string& target, const std::string& field) {
        return result(kanrep::run_classify(kanrep::parse_target(target, field_of(field))));
      },
      py::arg("target"), py::arg("field") = "q");
  m.def(
      "iso",
      [](const std::string& a, const std::string& b, const std::string& field) {
        const kanrep::FieldContext f = field_of(field);
        return result(kanrep::run_iso(kanrep::parse_target(a, f), kanrep::parse_target(b, f)));
      },
      py::arg("left"), py::arg("right"), py::arg("field") = "q");
  m.def(
      "special",
      [](const std::string& target, const std::string& field) {
        return result(kanrep::run_special(kanrep::parse_target(target, field_of(field))));
      },
      py::arg("target"), py::arg("field") = "q");
}
