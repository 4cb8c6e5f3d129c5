// Python bindings. Reports cross the boundary as dicts with the same layout
// as the CLI's JSON output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torusjet/error.hpp"
#include "torusjet/extend.hpp"
#include "torusjet/json_io.hpp"
#include "torusjet/verify.hpp"
#include "torusjet/whitney.hpp"

namespace py = pybind11;
using namespace torusjet;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

LatticePoint point(const LatticeFunction& f, const std::vector<long>& x) {
  if (x.size() != f.spec().dim()) throw InvalidInput("point must have one coordinate per axis");
  return LatticePoint{x};
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Finite-difference calculus and Whitney jets for lattice functions on the torus";

  py::register_exception<InvalidInput>(mod, "InvalidInput", PyExc_ValueError);
  py::register_exception<DegenerateInput>(mod, "DegenerateInput", PyExc_ArithmeticError);

  py::class_<LatticeFunction>(mod, "LatticeFunction")
      .def(py::init([](std::vector<int> m, std::vector<double> values) {
             return LatticeFunction(LatticeSpec(std::move(m)), std::move(values));
           }),
           py::arg("m"), py::arg("values"))
      .def_property_readonly("m", [](const LatticeFunction& f) { return f.spec().m(); })
      .def_property_readonly("values", &LatticeFunction::values)
      .def("__call__", [](const LatticeFunction& f, const std::vector<long>& x) { return f(point(f, x)); })
      .def("to_dict", [](const LatticeFunction& f) { return to_py(to_json(f)); })
      .def("__repr__", [](const LatticeFunction& f) { return "LatticeFunction(" + to_json(f).dump() + ")"; });

  mod.def("random_function",
          [](std::vector<int> m, std::uint64_t seed, double amplitude) {
            return random_function(LatticeSpec(std::move(m)), seed, amplitude);
          },
          py::arg("m"), py::arg("seed") = 1, py::arg("amplitude") = 1.0);

  mod.def("seminorm", [](const LatticeFunction& f, int k) { return to_py(to_json(seminorm(f, k))); },
          py::arg("f"), py::arg("k"));

  mod.def("theta",
          [](const LatticeFunction& f, const std::vector<long>& x, int k) {
            return to_py(to_json(theta(f, point(f, x), k)));
          },
          py::arg("f"), py::arg("x"), py::arg("k"));

  mod.def("build_jet",
          [](const LatticeFunction& f, const std::vector<long>& x, int top_degree, bool closed_form) {
            const auto p = point(f, x);
            if (closed_form) return to_py(json{{"jet", to_json(closed_form_jet(f, p, top_degree))}});
            const auto balls = default_balls(p, f.spec());
            return to_py(to_json(build_jet(f, p, top_degree, balls)));
          },
          py::arg("f"), py::arg("x"), py::arg("K"), py::arg("closed_form") = false);

  mod.def("whitney_check",
          [](const LatticeFunction& f, int r, bool closed_form) {
            return to_py(to_json(whitney_check(f, r, closed_form ? JetBuilder::closed_form : JetBuilder::recursive)));
          },
          py::arg("f"), py::arg("r"), py::arg("closed_form") = false);

  mod.def("constant_report", &constant_report, py::arg("f"), py::arg("r"));

  mod.def("theorem_a_report",
          [](const LatticeFunction& f, int k, int N, int s) {
            return to_py(to_json(theorem_a_report(f, k, ExtensionConfig{s, N})));
          },
          py::arg("f"), py::arg("k"), py::arg("N") = 4, py::arg("s") = 0);

  mod.def("extend",
          [](const LatticeFunction& f, int K, const std::vector<std::vector<double>>& points, int s) {
            const Extension F(f, K, ExtensionConfig{s, 4});
            std::vector<double> out;
            out.reserve(points.size());
            for (const auto& y : points) {
              if (y.size() != f.spec().dim()) throw InvalidInput("point must have one coordinate per axis");
              out.push_back(F(y));
            }
            return out;
          },
          py::arg("f"), py::arg("K"), py::arg("points"), py::arg("s") = 0);

  mod.def("verify",
          [](std::uint64_t seed, int trials, int max_d, int max_k, std::vector<std::string> only,
             std::vector<int> groups) {
            SuiteOptions opt;
            opt.seed = seed;
            opt.trials = trials;
            opt.max_d = max_d;
            opt.max_k = max_k;
            opt.only = std::move(only);
            opt.criteria = std::move(groups);
            SuiteReport report;
            {
              py::gil_scoped_release release;
              report = run_suite(opt);
            }
            return to_py(to_json(report));
          },
          py::arg("seed") = 1, py::arg("trials") = 50, py::arg("max_d") = 3, py::arg("max_k") = 3,
          py::arg("only") = std::vector<std::string>{}, py::arg("groups") = std::vector<int>{});
}
