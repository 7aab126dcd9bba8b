/*
 * Copyright 2026 The eqhp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "eqhp/additive.h"
#include "eqhp/cellgen.h"
#include "eqhp/errors.h"
#include "eqhp/json_io.h"
#include "eqhp/mackey.h"
#include "eqhp/rep_cn.h"
#include "eqhp/ring_c2.h"
#include "eqhp/ring_parse.h"

namespace py = pybind11;

namespace eqhp {
namespace {

// Structured results cross the boundary as plain dicts built from the
// same serializers the CLI uses.
py::object ToPython(const Json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

py::object CellPlan(int n, int count, const std::string& flag) {
  return ToPython(ToJson(MakeCellComplexPlan(MakeFlag(ParseFlagKind(flag), n, count), count)));
}

py::object ProperlyEven(int n, int count, const std::string& flag) {
  return ToPython(ToJson(CheckProperlyEven(MakeFlag(ParseFlagKind(flag), n, count), count)));
}

std::string Plot(int n, int max_k, const std::string& style) {
  const auto points = PlotGenerators(MakeAdditiveStructure(n, max_k));
  if (style == "ascii") return RenderAsciiPlot(points);
  if (style == "svg") return RenderSvgPlot(points, n);
  throw DomainError("unknown plot style '" + style + "' (expected ascii or svg)");
}

py::object Point(int x, int y, int p) {
  return ToPython(ToJson(p == 2 ? PointCohomologyC2(x, y) : PointCohomologyOdd(x, y, p)));
}

py::object Group(int m, int s, std::optional<int> cutoff) {
  const C2Degree alpha{m, s};
  return ToPython(ToJson(EvaluateGroupC2(alpha, cutoff.value_or(MinimalCutoff(alpha)))));
}

py::tuple RunCliCaptured(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::RunCli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace eqhp

PYBIND11_MODULE(_eqhp, m) {
  using namespace eqhp;
  m.doc() = "Bredon cohomology of B_{C_n}SU(2)";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", domain_error.ptr());
  py::register_exception<HomogeneityError>(m, "HomogeneityError", domain_error.ptr());

  m.def("fixed_dim_formula", &FixedDimFormula, py::arg("n"), py::arg("k"));
  m.def(
      "fixed_dim",
      [](int n, std::vector<int> multiplicities, int d) {
        return FixedDim(ComplexRep(n, std::move(multiplicities)), d);
      },
      py::arg("n"), py::arg("multiplicities"), py::arg("d"));
  m.def("rep_tables", [](int n) { return ToPython(RepTablesJson(n)); }, py::arg("n"));
  m.def("cell_plan", &CellPlan, py::arg("n"), py::arg("count"),
        py::arg("flag") = "canonical");
  m.def("check_properly_even", &ProperlyEven, py::arg("n"), py::arg("count"),
        py::arg("flag") = "canonical");
  m.def(
      "additive_structure",
      [](int n, int max_k) { return ToPython(ToJson(MakeAdditiveStructure(n, max_k))); },
      py::arg("n"), py::arg("max_k"));
  m.def("additive_plot", &Plot, py::arg("n"), py::arg("max_k"), py::arg("style") = "ascii");
  m.def("point_cohomology", &Point, py::arg("x"), py::arg("y"), py::arg("p") = 2);
  m.def("evaluate_group", &Group, py::arg("m"), py::arg("s"),
        py::arg("cutoff") = std::nullopt);
  m.def(
      "fixed_components",
      [](int n, std::vector<int> multiplicities) {
        return ToPython(ToJson(FixedComponents(QuatRep(n, std::move(multiplicities)))));
      },
      py::arg("n"), py::arg("multiplicities"));

  py::class_<RingElement>(m, "RingElement")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return ParseRingExpression(text); }),
           py::arg("text"))
      .def_static("one", &RingElement::One)
      .def_static("epsilon", &RingElement::Epsilon)
      .def_static("xi", &RingElement::Xi)
      .def_static("c", &RingElement::SmallC)
      .def_static("C", &RingElement::BigC)
      .def_static("integer", &RingElement::Integer, py::arg("value"))
      .def_property_readonly("degree",
                             [](const RingElement& u) -> std::optional<std::pair<int, int>> {
                               if (!u.degree()) return std::nullopt;
                               return std::make_pair(u.degree()->m, u.degree()->s);
                             })
      .def_property_readonly("is_zero", &RingElement::is_zero)
      .def("to_dict", [](const RingElement& u) { return ToPython(ToJson(u)); })
      .def("eval_sun",
           [](const RingElement& u, std::optional<int> level) {
             return EvalSun(u, level).ToString();
           },
           py::arg("level") = std::nullopt)
      .def("eval_fixed",
           [](const RingElement& u, int r, std::optional<int> level) {
             return EvalFixed(u, r, level).ToString();
           },
           py::arg("r"), py::arg("level") = std::nullopt)
      .def("images",
           [](const RingElement& u, std::optional<int> level) {
             return ToPython(ToJson(EvaluateAll(u, level)));
           },
           py::arg("level") = std::nullopt)
      .def("__add__", [](const RingElement& l, const RingElement& r) { return l + r; })
      .def("__sub__", [](const RingElement& l, const RingElement& r) { return l - r; })
      .def("__mul__", [](const RingElement& l, const RingElement& r) { return l * r; })
      .def("__neg__", [](const RingElement& u) { return -u; })
      .def("__pow__", [](const RingElement& u, int e) { return Power(u, e); })
      .def("__eq__", [](const RingElement& l, const RingElement& r) { return l == r; })
      .def("__str__", &RingElement::ToString)
      .def("__repr__",
           [](const RingElement& u) { return "RingElement('" + u.ToString() + "')"; });

  m.def("parse", &ParseRingExpression, py::arg("text"));
  m.def(
      "check_relation",
      [](std::optional<std::string> rhs) {
        return ToPython(ToJson(rhs ? CheckRelation(ParseRingExpression(*rhs)) : CheckRelation()));
      },
      py::arg("rhs") = std::nullopt);
  m.def("nu", [](int n) { return ToPython(ToJson(NuClass(n))); }, py::arg("n"));
  m.def(
      "monomial_basis",
      [](int m_deg, int s_deg, int max_j) {
        std::vector<std::string> out;
        for (const auto& mono : MonomialBasis({m_deg, s_deg}, max_j)) out.push_back(ToString(mono));
        return out;
      },
      py::arg("m"), py::arg("s"), py::arg("max_j") = 2);
  m.def(
      "probe_injectivity",
      [](int m_deg, int s_deg, int max_j) {
        return ToPython(ToJson(ProbeInjectivity({m_deg, s_deg}, max_j)));
      },
      py::arg("m"), py::arg("s"), py::arg("max_j") = 2);
  m.def("run_cli", &RunCliCaptured, py::arg("args"));
}
