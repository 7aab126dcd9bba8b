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

#include "eqhp/json_io.h"

#include <string>

namespace eqhp {

Json ToJson(const C2Degree& degree) {
  return {{"m", degree.m}, {"s", degree.s}};
}

namespace {

Json Position(int x, int y) { return {{"x", x}, {"y", y}}; }

Json PositionOf(const C2Degree& degree) {
  return Position(degree.fixed_dim(), degree.total_dim());
}

}  // namespace

Json ToJson(const AbelianGroup& group) {
  return {{"rank", group.rank}, {"torsion", group.torsion}};
}

Json ToJson(const GroupHom& hom) {
  return {{"domain", ToJson(hom.domain)},
          {"codomain", ToJson(hom.codomain)},
          {"matrix", hom.matrix}};
}

Json ToJson(const FixedDimProfile& profile) {
  Json out = Json::object();
  for (const auto& [d, dim] : profile) out[std::to_string(d)] = dim;
  return out;
}

Json ToJson(const SplitFullFlag& flag) {
  return {{"kind", std::string(ToString(flag.kind))},
          {"n", flag.n},
          {"indices", flag.indices}};
}

Json ToJson(const CellDescriptor& cell) {
  Json out = {{"k", cell.k},
              {"total", cell.total_dim},
              {"fixed", cell.fixed_dim()},
              {"profile", ToJson(cell.profile)},
              {"rep", std::vector<int>(cell.rep.multiplicities().begin(),
                                       cell.rep.multiplicities().end())}};
  if (cell.c2_form) out["c2_form"] = ToJson(*cell.c2_form);
  return out;
}

Json ToJson(const EvenVerdict& verdict) {
  Json out = {{"pass", verdict.pass}};
  if (!verdict.pass) {
    out["first_k"] = verdict.first_k;
    out["second_k"] = verdict.second_k;
    out["condition"] = std::string(1, verdict.condition);
    out["detail"] = verdict.detail;
  }
  return out;
}

Json ToJson(const CellComplexPlan& plan) {
  Json cells = Json::array();
  for (const auto& cell : plan.cells) cells.push_back(ToJson(cell));
  return {{"n", plan.flag.n},
          {"flag", ToJson(plan.flag)},
          {"cells", cells},
          {"verdict", plan.verdict ? ToJson(*plan.verdict) : Json()}};
}

Json ToJson(const AdditiveStructure& structure) {
  Json generators = Json::array();
  for (const auto& cell : structure.generators) generators.push_back(ToJson(cell));
  Json points = Json::array();
  for (const auto& [x, y] : PlotGenerators(structure)) points.push_back(Position(x, y));
  return {{"n", structure.n},
          {"scope", std::string(ToString(structure.scope))},
          {"generators", generators},
          {"points", points},
          {"verdict", structure.verdict ? ToJson(*structure.verdict) : Json()}};
}

Json ToJson(const MackeyPresentation& presentation) {
  Json out = {{"label", std::string(ToString(presentation.label))},
              {"p", presentation.p},
              {"top", ToJson(presentation.top)},
              {"bottom", ToJson(presentation.bottom)},
              {"res", ToJson(presentation.res)},
              {"tr", ToJson(presentation.tr)},
              {"weyl", ToJson(presentation.weyl)}};
  if (presentation.symbolic_res_entry) {
    out["symbolic_res_entry"] = {presentation.symbolic_res_entry->first,
                                 presentation.symbolic_res_entry->second};
  }
  return out;
}

Json ToJson(const PointCohomClass& point) {
  Json out = {{"label", std::string(ToString(point.label))},
              {"position", Position(point.x, point.y)},
              {"p", point.p}};
  if (point.label != MackeyLabel::kZero) {
    out["presentation"] = ToJson(NamedFunctor(point.label, point.p));
  }
  return out;
}

Json ToJson(const EvaluatedGroup& group) {
  Json summands = Json::array();
  for (const auto& summand : group.summands) {
    summands.push_back({{"k", summand.k},
                        {"label", std::string(ToString(summand.point.label))},
                        {"shifted", ToJson(summand.shifted)},
                        {"position", Position(summand.point.x, summand.point.y)}});
  }
  return {{"alpha", ToJson(group.alpha)},
          {"cutoff", group.cutoff},
          {"summands", summands},
          {"top", ToJson(group.top)},
          {"bottom", ToJson(group.bottom)}};
}

Json ToJson(const FixedComponentReport& report) {
  Json components = Json::array();
  for (const auto& c : report.components) {
    components.push_back({{"r", c.r},
                          {"kind", std::string(ToString(c.kind))},
                          {"empty", c.empty},
                          {"projective_dim", c.projective_dim},
                          {"ambient_dim", c.ambient_dim}});
  }
  return {{"n", report.n},
          {"components", components},
          {"nonempty_count", report.nonempty_count()}};
}

Json ToJson(const RingElement& element) {
  Json terms = Json::array();
  for (const auto& [m, coeff] : element.terms()) {
    terms.push_back({{"e", m.a},
                     {"x", m.b},
                     {"c", m.i},
                     {"CC", m.j},
                     {"coeff", coeff},
                     {"torsion", m.torsion() ? 2 : 0}});
  }
  Json out = {{"text", element.ToString()}, {"terms", terms}};
  if (element.degree()) {
    out["degree"] = ToJson(*element.degree());
    out["position"] = PositionOf(*element.degree());
  } else {
    out["degree"] = Json();
    out["position"] = Json();
  }
  return out;
}

Json ToJson(const Images& images) {
  return {{"sun", images.sun.ToString()},
          {"fixed0", images.fixed0.ToString()},
          {"fixed1", images.fixed1.ToString()}};
}

Json ToJson(const RelationCheck& check) {
  Json comparisons = Json::array();
  for (const auto& c : check.comparisons) {
    comparisons.push_back(
        {{"map", c.map}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"equal", c.equal}});
  }
  Json out = {{"pass", check.pass}, {"comparisons", comparisons}};
  if (!check.pass) out["first_failure"] = check.first_failure;
  return out;
}

Json ToJson(const NuRecord& record) {
  return {{"n", record.n},
          {"level", record.n + 1},
          {"nu", ToJson(record.nu)},
          {"images", ToJson(record.images)},
          {"expected", ToJson(record.expected)},
          {"matches", record.matches}};
}

Json ToJson(const InjectivityProbe& probe) {
  Json basis = Json::array();
  for (const auto& m : probe.basis) basis.push_back(ToString(m));
  return {{"degree", ToJson(probe.degree)},
          {"position", PositionOf(probe.degree)},
          {"basis", basis},
          {"free_generators", probe.free_generators},
          {"torsion_generators", probe.torsion_generators},
          {"free_rank", probe.free_rank},
          {"torsion_rank", probe.torsion_rank},
          {"injective", probe.injective}};
}

Json RepTablesJson(int n) {
  Json complex = Json::array();
  for (int r = 0; r < n; ++r) {
    const IrredComplex phi(n, r);
    complex.push_back({{"index", r},
                       {"type", std::string(ToString(ClassifyType(phi)))},
                       {"indicator", FrobeniusSchurIndicator(phi)},
                       {"conjugate", phi.Conjugate().index()}});
  }
  Json quat = Json::array();
  for (int r = 0; r <= n / 2; ++r) {
    const IrredQuat psi(n, r);
    const ComplexRep restricted = RestrictQuat(QuatRep::Irreducible(psi));
    Json summands = Json::array();
    for (int s = 0; s < n; ++s) {
      for (int c = 0; c < restricted.multiplicity(s); ++c) summands.push_back(s);
    }
    quat.push_back({{"index", r}, {"restriction", summands}});
  }
  return {{"n", n}, {"complex", complex}, {"quaternionic", quat}};
}

}  // namespace eqhp
