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

#include "eqhp/cellgen.h"

#include <algorithm>
#include <sstream>

#include "eqhp/errors.h"

namespace eqhp {

std::string ToString(const C2Degree& degree) {
  std::ostringstream out;
  out << degree.m << (degree.s < 0 ? "-" : "+") << std::abs(degree.s)
      << "sigma";
  return out.str();
}

std::string_view ToString(FlagKind kind) {
  switch (kind) {
    case FlagKind::kCanonical:
      return "canonical";
    case FlagKind::kInterleaved:
      return "interleaved";
    case FlagKind::kCustom:
      return "custom";
  }
  return "custom";
}

FlagKind ParseFlagKind(std::string_view name) {
  if (name == "canonical") return FlagKind::kCanonical;
  if (name == "interleaved") return FlagKind::kInterleaved;
  throw DomainError("unknown flag '" + std::string(name) +
                    "' (expected canonical or interleaved)");
}

QuatRep SplitFullFlag::Partial(int k) const {
  QuatRep w(n);
  for (int i = 0; i < k; ++i) w = w + QuatRep::Irreducible(IrredQuat(n, indices[i]));
  return w;
}

SplitFullFlag CanonicalFlag(int n, int count) {
  SplitFullFlag flag{n, FlagKind::kCanonical, {}};
  for (int k = 0; k < count; ++k) flag.indices.push_back(CanonicalQuatIndex(k, n));
  return flag;
}

SplitFullFlag InterleavedFlag(int n, int count) {
  SplitFullFlag flag{n, FlagKind::kInterleaved, {}};
  const int period = n / 2 + 1;
  for (int k = 0; k < count; ++k) flag.indices.push_back(k % period);
  return flag;
}

SplitFullFlag MakeFlag(FlagKind kind, int n, int count) {
  if (count < 0) throw DomainError("negative flag length");
  switch (kind) {
    case FlagKind::kCanonical:
      return CanonicalFlag(n, count);
    case FlagKind::kInterleaved:
      return InterleavedFlag(n, count);
    case FlagKind::kCustom:
      break;
  }
  throw DomainError("custom flags must be given explicitly");
}

CellDescriptor MakeCellDescriptor(const SplitFullFlag& flag, int k) {
  if (k < 0) throw DomainError("cell ordinal must be non-negative");
  if (k > 0 && k >= flag.size()) {
    throw DomainError("cell " + std::to_string(k) +
                      " needs a flag prefix of length " +
                      std::to_string(k + 1) + ", have " +
                      std::to_string(flag.size()));
  }
  CellDescriptor cell;
  cell.k = k;
  if (k == 0) {
    cell.rep = ComplexRep(flag.n);
  } else {
    cell.rep = TensorPhi(-flag.indices[k], RestrictQuat(flag.Partial(k)));
  }
  cell.profile = FixedDimProfileOf(cell.rep);
  cell.total_dim = cell.rep.RealDimension();
  if (flag.n == 2) {
    // Phi_0 is two copies of the trivial real line, Phi_1 two of sigma.
    cell.c2_form = C2Degree{2 * cell.rep.multiplicity(0),
                            2 * cell.rep.multiplicity(1)};
  }
  return cell;
}

int FixedDimFormula(int n, int k) {
  if (n < 1 || k < 0) throw DomainError("need n >= 1 and k >= 0");
  const int q = k / n;
  const int rem = k - q * n;
  return 4 * q + 2 * ((2 * rem) / (n + 1));
}

bool MonotoneLess(const FixedDimProfile& w, const FixedDimProfile& v,
                  std::string* witness) {
  // Subgroup dC_n sits inside d'C_n exactly when d' divides d.
  for (const auto& [ds, ws] : w) {
    if (!(ws < v.at(ds))) continue;
    for (const auto& [dt, wt] : w) {
      if (ds % dt != 0) continue;
      if (wt > v.at(dt)) {
        if (witness != nullptr) {
          std::ostringstream out;
          out << "S=" << ds << "C_n (" << ws << " < " << v.at(ds)
              << "), T=" << dt << "C_n (" << wt << " > " << v.at(dt) << ")";
          *witness = out.str();
        }
        return false;
      }
    }
  }
  return true;
}

EvenVerdict CheckProperlyEven(const SplitFullFlag& flag, int prefix_len) {
  if (prefix_len < 2) throw DomainError("prefix length must be at least 2");
  if (prefix_len > flag.size()) {
    throw DomainError("prefix length exceeds flag length");
  }
  EvenVerdict verdict;
  auto fail = [&verdict](int first, int second, char condition,
                         std::string detail) {
    verdict.pass = false;
    verdict.first_k = first;
    verdict.second_k = second;
    verdict.condition = condition;
    verdict.detail = std::move(detail);
  };

  std::optional<CellDescriptor> previous;
  for (int k = 0; k < prefix_len; ++k) {
    CellDescriptor cell = MakeCellDescriptor(flag, k);
    for (const auto& [d, dim] : cell.profile) {
      if (dim % 2 != 0) {
        fail(k, k, 'a',
             "odd fixed dimension " + std::to_string(dim) + " at d=" +
                 std::to_string(d));
        return verdict;
      }
    }
    if (previous.has_value()) {
      std::string witness;
      if (!MonotoneLess(previous->profile, cell.profile, &witness)) {
        fail(k - 1, k, 'b', witness);
        return verdict;
      }
    }
    int min_dim = cell.total_dim;
    for (const auto& [d, dim] : cell.profile) min_dim = std::min(min_dim, dim);
    const int bound = 2 * (k / flag.n);
    if (min_dim < bound) {
      fail(k, k, 'c',
           "minimum fixed dimension " + std::to_string(min_dim) +
               " below growth bound " + std::to_string(bound));
      return verdict;
    }
    previous = std::move(cell);
  }
  return verdict;
}

CellComplexPlan MakeCellComplexPlan(const SplitFullFlag& flag, int count) {
  CellComplexPlan plan;
  plan.flag = flag;
  const int cells = std::max(count, 1);
  for (int k = 0; k < cells; ++k) plan.cells.push_back(MakeCellDescriptor(flag, k));
  if (count >= 2) plan.verdict = CheckProperlyEven(flag, count);
  return plan;
}

std::string_view ToString(ComponentKind kind) {
  return kind == ComponentKind::kQuaternionicProjective ? "HP" : "CP";
}

int FixedComponentReport::nonempty_count() const {
  return static_cast<int>(std::count_if(
      components.begin(), components.end(),
      [](const FixedComponent& c) { return !c.empty; }));
}

FixedComponentReport FixedComponents(const QuatRep& w) {
  FixedComponentReport report;
  report.n = w.order();
  for (int r = 0; r <= w.order() / 2; ++r) {
    FixedComponent piece;
    piece.r = r;
    if (Mod(2 * r, w.order()) == 0) {
      piece.kind = ComponentKind::kQuaternionicProjective;
      piece.ambient_dim = IsotypicalDimQuat(w, r);
      piece.projective_dim = piece.ambient_dim / 4 - 1;
    } else {
      piece.kind = ComponentKind::kComplexProjective;
      piece.ambient_dim = IsotypicalDimComplex(w, r);
      piece.projective_dim = piece.ambient_dim / 2 - 1;
    }
    piece.empty = piece.ambient_dim == 0;
    report.components.push_back(piece);
  }
  return report;
}

FixedCofiber CofiberOfFixedInclusion(const QuatRep& w, long long k,
                                     long long r) {
  const int n = w.order();
  if (Mod(k - r, n) != 0 && Mod(k + r, n) != 0) return {};
  return {true, IsotypicalDimComplex(w, r)};
}

}  // namespace eqhp
