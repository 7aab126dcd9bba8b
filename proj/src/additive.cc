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

#include "eqhp/additive.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "eqhp/errors.h"

namespace eqhp {

std::string_view ToString(ScopeTag tag) {
  return tag == ScopeTag::kEvaluated ? "evaluated" : "formal";
}

std::string UnsupportedOrderReason(int n) {
  if (IsPrime(n)) return "";
  std::vector<int> primes;
  int rest = n;
  for (int d = 2; d * d <= rest; ++d) {
    while (rest % d == 0) {
      primes.push_back(d);
      rest /= d;
    }
  }
  if (rest > 1) primes.push_back(rest);
  const bool squarefree =
      std::adjacent_find(primes.begin(), primes.end()) == primes.end();
  const bool odd = std::none_of(primes.begin(), primes.end(),
                                [](int q) { return q == 2; });
  if (n > 1 && squarefree && odd) return "";
  return "n=" + std::to_string(n) +
         " is neither prime nor a product of distinct odd primes; the "
         "even-dimensional freeness theorem is only available for those orders";
}

AdditiveStructure MakeAdditiveStructure(int n, int max_k) {
  if (std::string reason = UnsupportedOrderReason(n); !reason.empty()) {
    throw DomainError(reason);
  }
  if (max_k < 0) throw DomainError("generator count must be non-negative");
  AdditiveStructure out;
  out.n = n;
  out.scope = n == 2 ? ScopeTag::kEvaluated : ScopeTag::kFormal;
  const SplitFullFlag flag = CanonicalFlag(n, max_k + 1);
  for (int k = 0; k <= max_k; ++k) out.generators.push_back(MakeCellDescriptor(flag, k));
  if (max_k >= 1) out.verdict = CheckProperlyEven(flag, max_k + 1);
  return out;
}

std::vector<LatticePoint> PlotGenerators(const AdditiveStructure& structure) {
  std::vector<LatticePoint> points;
  for (const CellDescriptor& cell : structure.generators) {
    points.emplace_back(cell.fixed_dim(), cell.total_dim);
  }
  return points;
}

std::string RenderAsciiPlot(const std::vector<LatticePoint>& points) {
  std::ostringstream out;
  out << "points:";
  for (const auto& [x, y] : points) out << " (" << x << "," << y << ")";
  out << "\n";
  if (points.empty()) return out.str();

  int max_x = 0;
  int max_y = 0;
  for (const auto& [x, y] : points) {
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  const int width = max_x / 2 + 1;
  for (int y = max_y; y >= 0; y -= 2) {
    std::string row(width, '.');
    for (const auto& [px, py] : points) {
      if (py == y) row[px / 2] = 'o';
    }
    char label[16];
    std::snprintf(label, sizeof(label), "%4d |", y);
    out << label << row << "\n";
  }
  out << "     +" << std::string(width, '-') << "\n";
  out << "      |alpha^G| = 0.." << max_x << " step 2, |alpha| step 2\n";
  return out.str();
}

std::string RenderSvgPlot(const std::vector<LatticePoint>& points, int n) {
  constexpr int kScale = 10;
  constexpr int kMargin = 20;
  int max_x = 0;
  int max_y = 0;
  for (const auto& [x, y] : points) {
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  const int w = max_x * kScale + 2 * kMargin;
  const int h = max_y * kScale + 2 * kMargin;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\">\n";
  out << "  <title>generators n=" << n << "</title>\n";
  out << "  <line x1=\"" << kMargin << "\" y1=\"" << h - kMargin << "\" x2=\""
      << w - kMargin / 2 << "\" y2=\"" << h - kMargin
      << "\" stroke=\"gray\"/>\n";
  out << "  <line x1=\"" << kMargin << "\" y1=\"" << h - kMargin << "\" x2=\""
      << kMargin << "\" y2=\"" << kMargin / 2 << "\" stroke=\"gray\"/>\n";
  for (const auto& [x, y] : points) {
    out << "  <circle cx=\"" << kMargin + x * kScale << "\" cy=\""
        << h - kMargin - y * kScale
        << "\" r=\"4\" fill=\"none\" stroke=\"red\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

int MinimalCutoff(C2Degree alpha) {
  int cutoff = 0;
  while (!(alpha.total_dim() < 4 * (cutoff + 1) &&
           alpha.m < FixedDimFormula(2, cutoff + 1))) {
    ++cutoff;
  }
  return cutoff;
}

AbelianGroup TopValue(const PointCohomClass& point) {
  if (point.label == MackeyLabel::kZero) return AbelianGroup::Zero();
  return NamedFunctor(point.label, point.p).top;
}

AbelianGroup BottomValue(const PointCohomClass& point) {
  if (point.label == MackeyLabel::kZero) return AbelianGroup::Zero();
  return NamedFunctor(point.label, point.p).bottom;
}

EvaluatedGroup EvaluateGroupC2(C2Degree alpha, int cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  if (!(alpha.total_dim() < 4 * (cutoff + 1))) {
    throw DomainError("cutoff " + std::to_string(cutoff) +
                      " too small: need |alpha| = " +
                      std::to_string(alpha.total_dim()) + " < " +
                      std::to_string(4 * (cutoff + 1)));
  }
  if (!(alpha.m < FixedDimFormula(2, cutoff + 1))) {
    throw DomainError("cutoff " + std::to_string(cutoff) +
                      " too small: need |alpha^C2| = " + std::to_string(alpha.m) +
                      " < " + std::to_string(FixedDimFormula(2, cutoff + 1)));
  }
  // Past the cutoff both coordinates of alpha - w_k are negative, where the
  // point cohomology vanishes.
  EvaluatedGroup out;
  out.alpha = alpha;
  out.cutoff = cutoff;
  const SplitFullFlag flag = CanonicalFlag(2, cutoff + 1);
  for (int k = 0; k <= cutoff; ++k) {
    const CellDescriptor cell = MakeCellDescriptor(flag, k);
    const C2Degree shifted = alpha - *cell.c2_form;
    const PointCohomClass point =
        PointCohomologyC2(shifted.fixed_dim(), shifted.total_dim());
    if (point.label == MackeyLabel::kZero) continue;
    out.summands.push_back({k, shifted, point});
    out.top = out.top + TopValue(point);
    out.bottom = out.bottom + BottomValue(point);
  }
  return out;
}

int SunLevelRank(C2Degree alpha) {
  const int total = alpha.total_dim();
  return total >= 0 && total % 4 == 0 ? 1 : 0;
}

}  // namespace eqhp
