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
// Brute-force reference computations used to cross-check the library. None
// of these call into the library.
#ifndef EQHP_TESTS_ORACLES_H_
#define EQHP_TESTS_ORACLES_H_

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

// Real dimension of the subspace of sum_i Phi_{indices[i]} fixed by the
// subgroup generated by g^step, by averaging the character over it.
inline int CharacterFixedDim(int n, const std::vector<long long>& indices, int step) {
  const int order = n / step;
  std::complex<double> total = 0;
  for (int h = 0; h < order; ++h) {
    const long long g = static_cast<long long>(h) * step;
    for (long long r : indices) {
      const double angle = 2 * std::numbers::pi * static_cast<double>((r * g) % n) / n;
      total += std::polar(1.0, angle);
    }
  }
  return 2 * static_cast<int>(std::lround(total.real() / order));
}

// Complex summands of Phi_{-u_k} (x) (Psi_{u_0} + ... + Psi_{u_{k-1}}),
// where Psi_u restricts to Phi_u + Phi_{-u}.
inline std::vector<long long> CellSummands(const std::vector<long long>& flag, int k) {
  std::vector<long long> out;
  const long long shift = -flag[k];
  for (int i = 0; i < k; ++i) {
    out.push_back(flag[i] + shift);
    out.push_back(-flag[i] + shift);
  }
  return out;
}

inline std::vector<long long> CanonicalIndices(int count) {
  std::vector<long long> flag;
  for (int k = 0; k < count; ++k) flag.push_back(k);
  return flag;
}

inline std::vector<long long> InterleavedIndices(int n, int count) {
  std::vector<long long> flag;
  for (int k = 0; k < count; ++k) flag.push_back(k % (n / 2 + 1));
  return flag;
}

// |w_k^{dC_n}| for every divisor d, with dC_n generated by g^d.
inline std::map<int, int> CellProfile(int n, const std::vector<long long>& flag, int k) {
  std::map<int, int> profile;
  const auto summands = CellSummands(flag, k);
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) profile[d] = CharacterFixedDim(n, summands, d);
  }
  return profile;
}

// The C_2 point-cohomology window x = -5..5, y = 4..-4, transcribed node by
// node from the printed figure. "." is a dot.
inline const std::vector<std::vector<std::string>>& C2Figure() {
  static const std::vector<std::vector<std::string>> rows = {
      {".", "Z2", ".", "Z2", ".", "Z", ".", ".", ".", ".", "."},
      {".", "Z2", ".", "Z2", ".", "Z", ".", ".", ".", ".", "."},
      {".", "Z2", ".", "Z2", ".", "Z", ".", ".", ".", ".", "."},
      {".", "Z2", ".", "Z2", ".", "Z", ".", ".", ".", ".", "."},
      {"R-", "R", "R-", "R", "R-", "A", "R-", "L", "L-", "L", "L-"},
      {".", ".", ".", ".", ".", "Z", ".", ".", "Z2", ".", "Z2"},
      {".", ".", ".", ".", ".", "Z", ".", ".", "Z2", ".", "Z2"},
      {".", ".", ".", ".", ".", "Z", ".", ".", "Z2", ".", "Z2"},
      {".", ".", ".", ".", ".", "Z", ".", ".", "Z2", ".", "Z2"},
  };
  return rows;
}

inline std::string C2FigureAt(int x, int y) { return C2Figure()[4 - y][x + 5]; }

// Drawn (non-dot) nodes of the odd-p figure in the same window.
inline const std::map<std::pair<int, int>, std::string>& OddFigure() {
  static const std::map<std::pair<int, int>, std::string> nodes = {
      {{-4, 4}, "Zp"}, {{-4, 2}, "Zp"}, {{-2, 4}, "Zp"}, {{-2, 2}, "Zp"},
      {{5, -3}, "Zp"}, {{5, -1}, "Zp"}, {{3, -3}, "Zp"}, {{3, -1}, "Zp"},
      {{-4, 0}, "R"},  {{-2, 0}, "R"},  {{0, 0}, "A[d]"}, {{2, 0}, "L"},
      {{4, 0}, "L"},   {{0, 4}, "Z"},   {{0, 2}, "Z"},   {{0, -4}, "Z"},
      {{0, -2}, "Z"},
  };
  return nodes;
}

// Polynomial in e, x and one further variable t over Z, with the mod-2
// collapse applied to monomials divisible by e*x. Used to recompute ring
// images by plain expansion.
struct Poly {
  std::map<std::tuple<int, int, int>, long long> terms;  // (e, x, t) -> coeff

  static Poly Mono(int e, int x, int t, long long c = 1) {
    Poly p;
    p.Add({e, x, t}, c);
    return p;
  }
  void Add(std::tuple<int, int, int> key, long long c) {
    long long& slot = terms[key];
    slot += c;
    if (std::get<0>(key) >= 1 && std::get<1>(key) >= 1) slot = ((slot % 2) + 2) % 2;
    if (slot == 0) terms.erase(key);
  }
  Poly operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [k, c] : o.terms) out.Add(k, c);
    return out;
  }
  Poly operator*(const Poly& o) const {
    Poly out;
    for (const auto& [k1, c1] : terms) {
      for (const auto& [k2, c2] : o.terms) {
        out.Add({std::get<0>(k1) + std::get<0>(k2), std::get<1>(k1) + std::get<1>(k2),
                 std::get<2>(k1) + std::get<2>(k2)},
                c1 * c2);
      }
    }
    return out;
  }
  Poly Truncate(int t_limit) const {
    Poly out;
    for (const auto& [k, c] : terms) {
      if (std::get<2>(k) < t_limit) out.terms[k] = c;
    }
    return out;
  }
  bool operator==(const Poly&) const = default;
};

}  // namespace oracle

#endif  // EQHP_TESTS_ORACLES_H_
