// Python bindings: JSON text in, JSON text out; the package wraps them in dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resloc/error.hpp"
#include "resloc/problems.hpp"

namespace py = pybind11;
using namespace resloc;

namespace {

std::optional<Vec> opt_vec(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return vec_from_json(Json::parse(*text));
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_resloc, m) {
  m.doc() = "Exact lattice sums by residue localization (JSON interface)";

  // Messages start with the error kind, e.g. "ShiftNotAdmissible: ...".
  py::register_exception<Error>(m, "ResLocError", PyExc_ValueError);
  py::register_exception<Json::exception>(m, "MalformedProblem", PyExc_ValueError);

  m.def("ct", [](const std::string& problem) { return run_ct(parse(problem)).dump(); }, py::arg("problem"));

  m.def(
      "trig_sum",
      [](const std::string& problem, std::optional<std::string> mu, std::optional<std::string> t, long k, bool oracle) {
        TrigSumOptions o;
        o.mu = opt_vec(mu);
        o.t = opt_vec(t);
        o.k = k;
        o.oracle = oracle;
        return run_trig_sum(parse(problem), o).dump();
      },
      py::arg("problem"), py::arg("mu") = py::none(), py::arg("t") = py::none(), py::arg("k") = 0,
      py::arg("oracle") = false);

  m.def(
      "rat_sum",
      [](const std::string& problem, std::optional<std::string> mu, std::optional<std::string> t, long cutoff) {
        RatSumOptions o;
        o.mu = opt_vec(mu);
        o.t = opt_vec(t);
        o.numeric_cutoff = cutoff;
        return run_rat_sum(parse(problem), o).dump();
      },
      py::arg("problem"), py::arg("mu") = py::none(), py::arg("t") = py::none(), py::arg("numeric_cutoff") = 0);

  m.def(
      "verlinde",
      [](const std::string& descriptor, int g, long k, std::optional<std::string> lambda, long k0, bool oracle) {
        VerlindeOptions o;
        o.g = g;
        o.k = k;
        o.lambda = opt_vec(lambda);
        o.quasipolynomial_k0 = k0;
        o.oracle = oracle;
        // Long exact sums: let other Python threads run.
        py::gil_scoped_release release;
        return run_verlinde(parse(descriptor), o).dump();
      },
      py::arg("root_system"), py::arg("g") = 1, py::arg("k") = 0, py::arg("lam") = py::none(),
      py::arg("quasipolynomial") = 0, py::arg("oracle") = false);

  m.def("vertices", [](const std::string& problem) { return run_vertices(parse(problem)).dump(); });
  m.def("nbc", [](const std::string& problem) { return run_nbc(parse(problem)).dump(); });
  m.def(
      "partial_fractions",
      [](const std::string& problem, std::optional<std::string> mu) {
        return run_partial_fractions(parse(problem), opt_vec(mu)).dump();
      },
      py::arg("problem"), py::arg("mu") = py::none());
  m.def(
      "delta_check",
      [](const std::string& problem, std::optional<std::string> mu) {
        return run_delta_check(parse(problem), opt_vec(mu)).dump();
      },
      py::arg("problem"), py::arg("mu") = py::none());
}
