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

// Cell structures on quaternionic projective spaces of C_n-universes.
//
// A split full flag orders the irreducible summands U_0, U_1, ... of a
// quaternionic universe. Adding U_k to U_0 + ... + U_{k-1} attaches one cell
// D(w_k) with w_k = Phi_{-r(k)} (x)_C (U_0 + ... + U_{k-1}), where
// U_k ~ Psi_{r(k)}. Cell 0 is the base point (w_0 = 0).

#ifndef EQHP_CELLGEN_H_
#define EQHP_CELLGEN_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqhp/rep_cn.h"

namespace eqhp {

// An element m + s*sigma of RO(C_2).
struct C2Degree {
  int m = 0;
  int s = 0;

  // |alpha^{C_2}| and |alpha|.
  int fixed_dim() const { return m; }
  int total_dim() const { return m + s; }

  friend bool operator==(const C2Degree&, const C2Degree&) = default;
  friend C2Degree operator+(C2Degree a, C2Degree b) {
    return {a.m + b.m, a.s + b.s};
  }
  friend C2Degree operator-(C2Degree a, C2Degree b) {
    return {a.m - b.m, a.s - b.s};
  }
};

std::string ToString(const C2Degree& degree);

enum class FlagKind { kCanonical, kInterleaved, kCustom };

std::string_view ToString(FlagKind kind);
// Throws DomainError on an unknown name.
FlagKind ParseFlagKind(std::string_view name);

// Finite prefix of a split full flag: indices[k] is the canonical index of
// the quaternionic irreducible U_k.
struct SplitFullFlag {
  int n = 1;
  FlagKind kind = FlagKind::kCustom;
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }

  // U_0 + ... + U_{k-1}.
  QuatRep Partial(int k) const;
};

// U_k = Psi_k.
SplitFullFlag CanonicalFlag(int n, int count);
// U_k = Psi_{k mod (floor(n/2) + 1)}.
SplitFullFlag InterleavedFlag(int n, int count);
SplitFullFlag MakeFlag(FlagKind kind, int n, int count);

struct CellDescriptor {
  int k = 0;
  ComplexRep rep{1};
  FixedDimProfile profile;
  int total_dim = 0;
  std::optional<C2Degree> c2_form;  // n == 2 only

  int fixed_dim() const { return profile.begin()->second; }
};

// Descriptor of cell k. Cell 0 is the base point; cell k >= 1 needs
// k < flag.size(). Throws DomainError otherwise.
CellDescriptor MakeCellDescriptor(const SplitFullFlag& flag, int k);

// Closed form of |w_k^{C_n}| for the canonical flag:
// 4 floor(k/n) + 2 floor(2 (k mod n) / (n + 1)).
int FixedDimFormula(int n, int k);

// W << V: whenever |W^S| < |V^S| then |W^T| <= |V^T| for all T >= S.
// On failure, *witness receives "S=..,T=.." in terms of divisors d (the
// subgroup dC_n).
bool MonotoneLess(const FixedDimProfile& w, const FixedDimProfile& v,
                  std::string* witness = nullptr);

struct EvenVerdict {
  bool pass = true;
  // On failure: the offending cell ordinals (second == first for
  // single-cell conditions) and the violated condition, 'a', 'b' or 'c'.
  int first_k = -1;
  int second_k = -1;
  char condition = 0;
  std::string detail;
};

// Checks cells 0..prefix_len-1 against the properly-even conditions:
//   (a) every fixed-point dimension is even;
//   (b) w_k << w_{k+1} for consecutive cells;
//   (c) growth certificate min_d |w_k^{dC_n}| >= 2 floor(k/n);
//   (d) holds by construction (one cell per step).
// Requires prefix_len >= 2 and prefix_len <= flag.size().
EvenVerdict CheckProperlyEven(const SplitFullFlag& flag, int prefix_len);

// Cells 0..count-1 of a flag plus the verdict.
struct CellComplexPlan {
  SplitFullFlag flag;
  std::vector<CellDescriptor> cells;
  std::optional<EvenVerdict> verdict;  // absent with fewer than two cells
};

CellComplexPlan MakeCellComplexPlan(const SplitFullFlag& flag, int count);

enum class ComponentKind { kQuaternionicProjective, kComplexProjective };

std::string_view ToString(ComponentKind kind);

struct FixedComponent {
  int r = 0;
  ComponentKind kind = ComponentKind::kQuaternionicProjective;
  bool empty = true;
  int projective_dim = -1;  // -1 when empty
  int ambient_dim = 0;      // real dimension of the isotypical piece
};

// The pieces P[r](W), r = 0..floor(n/2), of the fixed points P(W)^{C_n}.
struct FixedComponentReport {
  int n = 1;
  std::vector<FixedComponent> components;

  int nonempty_count() const;
};

FixedComponentReport FixedComponents(const QuatRep& w);

// Cofiber of P[r](W)_+ -> P[r](W + Psi_k)_+: the sphere S^{|W(r;C)|} when
// k = +-r mod n and a point otherwise.
struct FixedCofiber {
  bool is_sphere = false;
  int sphere_dim = 0;
};

FixedCofiber CofiberOfFixedInclusion(const QuatRep& w, long long k,
                                     long long r);

}  // namespace eqhp

#endif  // EQHP_CELLGEN_H_
