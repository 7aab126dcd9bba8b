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

// Additive structure of H^*_{C_n}(B_{C_n}SU(2)_+; A).
//
// For the orders where even-dimensional freeness is available (n prime, or a
// product of distinct odd primes) the cohomology is a free module over the
// cohomology of a point with one generator in each cell dimension w_k of the
// canonical flag. Only n = 2 is evaluated to concrete groups; for the other
// orders the summands are reported formally.

#ifndef EQHP_ADDITIVE_H_
#define EQHP_ADDITIVE_H_

#include <string>
#include <utility>
#include <vector>

#include "eqhp/cellgen.h"
#include "eqhp/mackey.h"

namespace eqhp {

enum class ScopeTag { kEvaluated, kFormal };

std::string_view ToString(ScopeTag tag);

// Empty string if n is supported, otherwise the reason it is not.
std::string UnsupportedOrderReason(int n);

struct AdditiveStructure {
  int n = 2;
  std::vector<CellDescriptor> generators;  // k = 0..N
  ScopeTag scope = ScopeTag::kFormal;
  std::optional<EvenVerdict> verdict;
};

// Generators for k = 0..max_k. Throws DomainError for unsupported n.
AdditiveStructure MakeAdditiveStructure(int n, int max_k);

// (|w_k^{C_n}|, |w_k|) for every generator.
using LatticePoint = std::pair<int, int>;
std::vector<LatticePoint> PlotGenerators(const AdditiveStructure& structure);

// ASCII staircase, one character per two real dimensions: 'o' marks a
// generator, '.' an empty lattice cell.
std::string RenderAsciiPlot(const std::vector<LatticePoint>& points);
std::string RenderSvgPlot(const std::vector<LatticePoint>& points, int n);

struct EvaluatedSummand {
  int k = 0;
  C2Degree shifted;  // alpha - w_k
  PointCohomClass point;
};

struct EvaluatedGroup {
  C2Degree alpha;
  int cutoff = 0;
  std::vector<EvaluatedSummand> summands;  // nonzero contributions only
  AbelianGroup top;
  AbelianGroup bottom;
};

// H^alpha_{C_2}(B_{C_2}SU(2)_+; A) for alpha = m + s sigma as the direct sum
// over k <= cutoff of H^{alpha - w_k}(S^0; A). The cutoff must certify that
// every later summand vanishes: |alpha| < 4 (cutoff + 1) and
// m < |w_{cutoff+1}^{C_2}|; otherwise DomainError.
EvaluatedGroup EvaluateGroupC2(C2Degree alpha, int cutoff);

// Smallest cutoff accepted by EvaluateGroupC2 for alpha.
int MinimalCutoff(C2Degree alpha);

// Rank of the free-orbit level, which agrees with H^{|alpha|}(HP^infty; Z).
int SunLevelRank(C2Degree alpha);

// Top and bottom values of a named functor's point class.
AbelianGroup TopValue(const PointCohomClass& point);
AbelianGroup BottomValue(const PointCohomClass& point);

}  // namespace eqhp

#endif  // EQHP_ADDITIVE_H_
