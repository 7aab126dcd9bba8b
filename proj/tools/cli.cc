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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "eqhp/additive.h"
#include "eqhp/cellgen.h"
#include "eqhp/errors.h"
#include "eqhp/json_io.h"
#include "eqhp/mackey.h"
#include "eqhp/rep_cn.h"
#include "eqhp/ring_c2.h"
#include "eqhp/ring_parse.h"

namespace eqhp::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct Settings {
  std::string format = "table";
  int max_n = 64;
};

// A command's answer in both renderings.
struct Outcome {
  Json result;
  std::string text;
};

void CheckOrder(int n, const Settings& settings) {
  if (n < 1) throw DomainError("group order must be at least 1, got " + std::to_string(n));
  if (n > settings.max_n) {
    throw DomainError("group order " + std::to_string(n) + " exceeds --max-n " +
                      std::to_string(settings.max_n));
  }
}

std::string ProfileText(const FixedDimProfile& profile) {
  std::string out;
  for (const auto& [d, dim] : profile) {
    if (!out.empty()) out += " ";
    out += std::to_string(d) + ":" + std::to_string(dim);
  }
  return out;
}

std::string PositionText(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string VerdictText(const std::optional<EvenVerdict>& verdict) {
  if (!verdict) return "verdict: n/a (fewer than two cells)\n";
  if (verdict->pass) return "verdict: pass\n";
  std::ostringstream os;
  os << "verdict: fail at cells " << verdict->first_k;
  if (verdict->second_k != verdict->first_k) os << "," << verdict->second_k;
  os << " condition (" << verdict->condition << ")";
  if (!verdict->detail.empty()) os << ": " << verdict->detail;
  os << "\n";
  return os.str();
}

std::string QuatRepText(const QuatRep& w) {
  std::string out;
  const auto mult = w.multiplicities();
  for (std::size_t r = 0; r < mult.size(); ++r) {
    if (mult[r] == 0) continue;
    if (!out.empty()) out += " + ";
    if (mult[r] != 1) out += std::to_string(mult[r]);
    out += "Psi_" + std::to_string(r);
  }
  return out.empty() ? "0" : out;
}

Outcome Reps(int n, const Settings& settings) {
  CheckOrder(n, settings);
  Outcome outcome{RepTablesJson(n), {}};
  std::ostringstream os;
  os << "C_" << n << " irreducibles over C\n";
  for (int r = 0; r < n; ++r) {
    const IrredComplex phi(n, r);
    os << "  Phi_" << std::left << std::setw(4) << r << std::setw(9)
       << ToString(ClassifyType(phi));
    if (phi.Conjugate().index() != r) os << "conjugate Phi_" << phi.Conjugate().index();
    os << "\n";
  }
  os << "C_" << n << " irreducibles over H\n";
  for (int r = 0; r <= n / 2; ++r) {
    os << "  Psi_" << std::left << std::setw(4) << r << "restricts to Phi_" << r
       << " + Phi_" << Mod(-r, n) << "\n";
  }
  outcome.text = os.str();
  return outcome;
}

Outcome Cells(int n, int count, const std::string& flag_name,
              const Settings& settings) {
  CheckOrder(n, settings);
  if (count < 0) throw DomainError("cell count must be non-negative");
  const SplitFullFlag flag = MakeFlag(ParseFlagKind(flag_name), n, count);
  const CellComplexPlan plan = MakeCellComplexPlan(flag, count);
  std::ostringstream os;
  os << "n=" << n << " flag=" << ToString(flag.kind) << " cells=" << plan.cells.size()
     << "\n";
  os << std::right << std::setw(4) << "k" << std::setw(7) << "total" << std::setw(7)
     << "fixed" << "  profile";
  if (n == 2) os << std::setw(14) << "form";
  os << "\n";
  for (const auto& cell : plan.cells) {
    os << std::right << std::setw(4) << cell.k << std::setw(7) << cell.total_dim
       << std::setw(7) << cell.fixed_dim() << "  ";
    if (cell.c2_form) {
      os << std::left << std::setw(14) << ProfileText(cell.profile)
         << ToString(*cell.c2_form);
    } else {
      os << ProfileText(cell.profile);
    }
    os << "\n";
  }
  os << VerdictText(plan.verdict);
  return {ToJson(plan), os.str()};
}

Outcome Additive(int n, int max_k, const std::string& mode, const Settings& settings) {
  CheckOrder(n, settings);
  if (max_k < 0) throw DomainError("generator count must be non-negative");
  const AdditiveStructure structure = MakeAdditiveStructure(n, max_k);
  const auto points = PlotGenerators(structure);
  Outcome outcome{ToJson(structure), {}};
  if (mode == "plot") {
    outcome.text = RenderAsciiPlot(points);
  } else if (mode == "svg") {
    outcome.text = RenderSvgPlot(points, n);
  } else {
    std::ostringstream os;
    os << "n=" << n << " scope=" << ToString(structure.scope) << " generators k=0.."
       << max_k << "\n";
    os << std::right << std::setw(4) << "k" << std::setw(7) << "fixed" << std::setw(7)
       << "total" << "  profile\n";
    for (const auto& cell : structure.generators) {
      os << std::setw(4) << cell.k << std::setw(7) << cell.fixed_dim() << std::setw(7)
         << cell.total_dim << "  " << ProfileText(cell.profile) << "\n";
    }
    outcome.text = os.str();
  }
  return outcome;
}

Outcome Point(int m, int s, int p) {
  // For odd p the second coordinate counts copies of a two-dimensional
  // irreducible real representation.
  const int x = m;
  const int y = p == 2 ? m + s : m + 2 * s;
  const PointCohomClass point = p == 2 ? PointCohomologyC2(x, y) : PointCohomologyOdd(x, y, p);
  Outcome outcome{ToJson(point), {}};
  outcome.result["alpha"] = {{"m", m}, {"s", s}};
  std::ostringstream os;
  if (p == 2) {
    os << "alpha = " << ToString(C2Degree{m, s});
  } else {
    os << "alpha = " << m << " + " << s << "lambda";
  }
  os << "  position " << PositionText(x, y) << "\n";
  os << "H^alpha(S^0; A) = " << ToString(point.label) << "\n";
  os << "  top     " << ToString(TopValue(point)) << "\n";
  os << "  bottom  " << ToString(BottomValue(point)) << "\n";
  outcome.text = os.str();
  return outcome;
}

Outcome Group(int m, int s, std::optional<int> cutoff) {
  const C2Degree alpha{m, s};
  const EvaluatedGroup group = EvaluateGroupC2(alpha, cutoff ? *cutoff : MinimalCutoff(alpha));
  std::ostringstream os;
  os << "alpha = " << ToString(alpha) << "  position "
     << PositionText(alpha.fixed_dim(), alpha.total_dim()) << "  cutoff " << group.cutoff
     << "\n";
  for (const auto& summand : group.summands) {
    os << "  k=" << std::left << std::setw(3) << summand.k << std::setw(16)
       << ToString(summand.shifted) << std::setw(10)
       << PositionText(summand.point.x, summand.point.y) << ToString(summand.point.label)
       << "\n";
  }
  if (group.summands.empty()) os << "  (no nonzero summands)\n";
  os << "top     " << ToString(group.top) << "\n";
  os << "bottom  " << ToString(group.bottom) << "\n";
  return {ToJson(group), os.str()};
}

Outcome FixedPoints(int n, int count, const std::string& rep_text,
                    const Settings& settings) {
  CheckOrder(n, settings);
  QuatRep w(n);
  if (!rep_text.empty()) {
    std::vector<int> mult;
    std::stringstream ss(rep_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        mult.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw UsageError("--rep expects comma-separated integers, got '" + rep_text + "'");
      }
    }
    w = QuatRep(n, mult);
  } else {
    if (count < 0) throw DomainError("flag length must be non-negative");
    w = CanonicalFlag(n, count).Partial(count);
  }
  const FixedComponentReport report = FixedComponents(w);
  Outcome outcome{ToJson(report), {}};
  outcome.result["rep"] = std::vector<int>(w.multiplicities().begin(), w.multiplicities().end());
  std::ostringstream os;
  os << "fixed points of P(W), W = " << QuatRepText(w) << " (n=" << n << ")\n";
  for (const auto& c : report.components) {
    os << "  [" << c.r << "]  ";
    if (c.empty) {
      os << "empty\n";
    } else {
      os << std::left << std::setw(8)
         << (std::string(ToString(c.kind)) + "^" + std::to_string(c.projective_dim))
         << "ambient " << c.ambient_dim << "\n";
    }
  }
  os << "components: " << report.nonempty_count() << "\n";
  outcome.text = os.str();
  return outcome;
}

int ParseInt(const std::string& word, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(word, &used);
    if (used == word.size()) return value;
  } catch (const std::logic_error&) {
  }
  throw UsageError(what + " must be an integer, got '" + word + "'");
}

std::string ImagesText(const Images& images) {
  std::ostringstream os;
  os << "  sun     " << images.sun.ToString() << "\n";
  os << "  fixed0  " << images.fixed0.ToString() << "\n";
  os << "  fixed1  " << images.fixed1.ToString() << "\n";
  return os.str();
}

Outcome Ring(const std::vector<std::string>& words, std::optional<int> level, int jmax,
             const std::string& rhs_text, const Settings& settings) {
  if (words.empty()) throw UsageError("ring needs an expression or an action");
  const std::string& head = words.front();
  auto expect_words = [&](std::size_t count) {
    if (words.size() != count) {
      throw UsageError("ring " + head + " takes " + std::to_string(count - 1) +
                       " argument(s)");
    }
  };
  std::ostringstream os;
  if (head == "check-relation") {
    expect_words(1);
    const RelationCheck check =
        rhs_text.empty() ? CheckRelation() : CheckRelation(ParseRingExpression(rhs_text));
    for (const auto& c : check.comparisons) {
      os << std::left << std::setw(8) << c.map << c.lhs << (c.equal ? " == " : " != ")
         << c.rhs << "\n";
    }
    os << (check.pass ? "relation: pass\n" : "relation: fail at " + check.first_failure + "\n");
    return {ToJson(check), os.str()};
  }
  if (head == "nu") {
    expect_words(2);
    const int n = ParseInt(words[1], "n");
    CheckOrder(n, settings);
    const NuRecord record = NuClass(n);
    os << "nu(" << n << ") = " << record.nu.ToString() << "  at level " << n + 1 << "\n";
    os << ImagesText(record.images);
    os << "matches expected: " << (record.matches ? "yes" : "no") << "\n";
    return {ToJson(record), os.str()};
  }
  if (head == "basis" || head == "probe") {
    expect_words(3);
    const C2Degree degree{ParseInt(words[1], "m"), ParseInt(words[2], "s")};
    if (jmax < 0) throw DomainError("--jmax must be non-negative");
    if (head == "basis") {
      Json basis = Json::array();
      for (const auto& m : MonomialBasis(degree, jmax)) {
        basis.push_back(ToString(m));
        os << ToString(m) << "\n";
      }
      return {{{"degree", ToJson(degree)}, {"jmax", jmax}, {"basis", basis}}, os.str()};
    }
    const InjectivityProbe probe = ProbeInjectivity(degree, jmax);
    os << "degree " << ToString(degree) << "  basis:";
    for (const auto& m : probe.basis) os << " " << ToString(m);
    os << "\n  free rank " << probe.free_rank << "/" << probe.free_generators
       << ", torsion rank " << probe.torsion_rank << "/" << probe.torsion_generators << "\n";
    os << "injective: " << (probe.injective ? "yes" : "no") << "\n";
    return {ToJson(probe), os.str()};
  }

  if (words.size() > 2) throw UsageError("ring takes an expression and one action");
  const std::string action = words.size() == 2 ? words[1] : "normalize";
  const RingElement element = ParseRingExpression(head);
  Json result = {{"expression", head}, {"action", action}, {"element", ToJson(element)}};
  if (action == "normalize") {
    os << element.ToString() << "\n";
  } else if (action == "eval-sun") {
    const SunElement image = EvalSun(element, level);
    result["image"] = image.ToString();
    os << image.ToString() << "\n";
  } else if (action == "eval-fixed0" || action == "eval-fixed1") {
    const FixedRingElement image = EvalFixed(element, action.back() - '0', level);
    result["image"] = image.ToString();
    os << image.ToString() << "\n";
  } else if (action == "eval-all") {
    const Images images = EvaluateAll(element, level);
    result["images"] = ToJson(images);
    os << ImagesText(images);
  } else {
    throw UsageError("unknown ring action '" + action + "'");
  }
  if (level) result["level"] = *level;
  return {result, os.str()};
}

void Emit(std::ostream& out, const Settings& settings, const std::string& command,
          const std::vector<std::string>& args, const Outcome& outcome) {
  if (settings.format == "json") {
    Json envelope = {{"schema_version", kSchemaVersion},
                     {"command", command},
                     {"args", args},
                     {"status", "ok"},
                     {"result", outcome.result}};
    out << envelope.dump(2) << "\n";
  } else {
    out << outcome.text;
  }
}

int Fail(std::ostream& out, std::ostream& err, const Settings& settings,
         const std::string& command, const std::vector<std::string>& args,
         ExitCode code, const std::string& message) {
  err << "error: " << message << "\n";
  if (settings.format == "json") {
    Json envelope = {{"schema_version", kSchemaVersion},
                     {"command", command},
                     {"args", args},
                     {"status", "error"},
                     {"error",
                      {{"kind", code == kUsageError ? "usage" : "domain"},
                       {"message", message}}}};
    out << envelope.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings settings;
  CLI::App app{"Bredon cohomology of B_{C_n}SU(2): representations, cells, "
               "additive structure and the C_2 ring",
               "eqhp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--max-n", settings.max_n, "Largest accepted group order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int n = 0;
  int count = 0;
  int m = 0;
  int s = 0;
  int p = 2;
  std::string flag_name = "canonical";
  std::string mode = "table";
  std::string rep_text;
  std::optional<int> cutoff;
  std::optional<int> level;
  int jmax = 2;
  std::string rhs_text;
  std::vector<std::string> words;

  auto* reps = app.add_subcommand("reps", "Irreducible representations of C_n");
  reps->add_option("n", n, "Group order")->required();

  auto* cells = app.add_subcommand("cells", "Cell structure from a split full flag");
  cells->add_option("n", n, "Group order")->required();
  cells->add_option("count", count, "Number of cells")->required();
  cells->add_option("flag", flag_name, "canonical or interleaved")
      ->check(CLI::IsMember({"canonical", "interleaved"}))
      ->capture_default_str();

  auto* additive = app.add_subcommand("additive", "Free generators of the cohomology");
  additive->add_option("n", n, "Group order")->required();
  additive->add_option("max_k", count, "Last generator index")->required();
  additive->add_option("mode", mode, "table, json, plot or svg")
      ->check(CLI::IsMember({"table", "json", "plot", "svg"}))
      ->capture_default_str();

  auto* point = app.add_subcommand(
      "point", "Cohomology of a point in degree m + s sigma (m + s lambda for odd p)");
  point->add_option("m", m)->required();
  point->add_option("s", s)->required();
  point->add_option("--p", p, "Prime order")->capture_default_str();

  auto* group = app.add_subcommand("group", "H^{m + s sigma} of B_{C_2}SU(2)");
  group->add_option("m", m)->required();
  group->add_option("s", s)->required();
  group->add_option("--cutoff", cutoff, "Last cell included (default: smallest valid)");

  auto* ring = app.add_subcommand(
      "ring",
      "Ring of the C_2 case: '<expr> [normalize|eval-sun|eval-fixed0|eval-fixed1|"
      "eval-all]', 'check-relation', 'nu <n>', 'basis <m> <s>', 'probe <m> <s>'");
  ring->add_option("words", words)->required();
  ring->add_option("--level", level, "Filtration level for truncated evaluation");
  ring->add_option("--jmax", jmax, "Largest C exponent for basis and probe")
      ->capture_default_str();
  ring->add_option("--rhs", rhs_text, "Alternative right-hand side for check-relation");

  auto* fixed = app.add_subcommand("fixed-points", "Fixed points of P(W) for W = W_N");
  fixed->add_option("n", n, "Group order")->required();
  fixed->add_option("count", count, "Flag length N");
  fixed->add_option("--rep", rep_text, "Explicit multiplicities b_0,b_1,...");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    const auto parsed = app.get_subcommands();
    const std::string command = parsed.empty() ? "" : parsed.front()->get_name();
    const int code = Fail(out, err, settings, command, args, kUsageError, e.what());
    err << "run with --help for usage\n";
    return code;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  if (chosen == additive && mode == "json") settings.format = "json";
  try {
    Outcome outcome;
    if (chosen == reps) {
      outcome = Reps(n, settings);
    } else if (chosen == cells) {
      outcome = Cells(n, count, flag_name, settings);
    } else if (chosen == additive) {
      outcome = Additive(n, count, mode, settings);
    } else if (chosen == point) {
      outcome = Point(m, s, p);
    } else if (chosen == group) {
      outcome = Group(m, s, cutoff);
    } else if (chosen == ring) {
      outcome = Ring(words, level, jmax, rhs_text, settings);
    } else {
      if (fixed->count("count") == 0 && rep_text.empty()) {
        throw UsageError("fixed-points needs a flag length or --rep");
      }
      outcome = FixedPoints(n, count, rep_text, settings);
    }
    Emit(out, settings, command, args, outcome);
    return kOk;
  } catch (const UsageError& e) {
    return Fail(out, err, settings, command, args, kUsageError, e.what());
  } catch (const DomainError& e) {
    return Fail(out, err, settings, command, args, kDomainError, e.what());
  }
}

}  // namespace eqhp::cli
