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

// C_p-Mackey functors given by finite presentations, and the cohomology of a
// point H^alpha_{C_p}(S^0; A) indexed by (|alpha^{C_p}|, |alpha|).
//
// A C_p-Mackey functor is determined by M(fixed orbit), M(free orbit), the
// restriction and transfer between them and the Weyl action on M(free orbit).
// All groups in scope are Z^k + (finite cyclic), so a group is a free rank
// plus a list of torsion orders and homomorphisms are integer matrices in
// the standard generators (free generators first).

#ifndef EQHP_MACKEY_H_
#define EQHP_MACKEY_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqhp {

struct AbelianGroup {
  int rank = 0;
  std::vector<int> torsion;  // orders > 1, sorted ascending

  static AbelianGroup Free(int rank) { return {rank, {}}; }
  static AbelianGroup Cyclic(int order);  // order 0 means Z
  static AbelianGroup Zero() { return {}; }

  int generator_count() const {
    return rank + static_cast<int>(torsion.size());
  }
  // Order of generator i; 0 for free generators.
  int generator_order(int i) const;
  bool is_zero() const { return rank == 0 && torsion.empty(); }

  AbelianGroup operator+(const AbelianGroup& other) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::string ToString(const AbelianGroup& group);

using IntMatrix = std::vector<std::vector<long long>>;

// A homomorphism between presented groups. matrix[i][j] is the image of
// domain generator j in codomain generator i.
struct GroupHom {
  AbelianGroup domain;
  AbelianGroup codomain;
  IntMatrix matrix;

  static GroupHom Identity(const AbelianGroup& group);
  static GroupHom ZeroMap(const AbelianGroup& from, const AbelianGroup& to);

  // Every torsion generator lands on an element of compatible order.
  bool WellDefined() const;
};

// g o f. Entries are reduced modulo the codomain generator orders.
GroupHom Compose(const GroupHom& g, const GroupHom& f);
GroupHom Add(const GroupHom& f, const GroupHom& g);
bool Equal(const GroupHom& f, const GroupHom& g);

enum class MackeyLabel {
  kA,
  kTwistedA,  // A[d]
  kR,
  kL,
  kRMinus,
  kLMinus,
  kBraketZ,
  kBraketZ2,
  kBraketZp,
  kZero,
};

std::string_view ToString(MackeyLabel label);
MackeyLabel ParseMackeyLabel(std::string_view name);

struct MackeyPresentation {
  MackeyLabel label = MackeyLabel::kZero;
  int p = 2;
  AbelianGroup top;     // M(C_p/C_p)
  AbelianGroup bottom;  // M(C_p/e)
  GroupHom res;
  GroupHom tr;
  GroupHom weyl;
  // For A[d]: the restriction entry (row, column) that is the opaque integer
  // d. It is stored as 0 in res.matrix and must never contribute to a
  // computed value.
  std::optional<std::pair<int, int>> symbolic_res_entry;
};

// Presentation of a named functor. Throws DomainError for invalid
// label/prime combinations (signed functors need p = 2, braket_Z2 needs
// p = 2, p must be prime).
MackeyPresentation NamedFunctor(MackeyLabel label, int p);

// res o tr as an endomorphism of the bottom group. Throws DomainError if a
// symbolic entry would contribute.
GroupHom RestrictionOfTransfer(const MackeyPresentation& m);

// sum_{i<p} weyl^i.
GroupHom WeylNorm(const MackeyPresentation& m);

// weyl^p == id and res o tr == sum weyl^i.
bool SatisfiesDoubleCoset(const MackeyPresentation& m);

struct PointCohomClass {
  MackeyLabel label = MackeyLabel::kZero;
  int x = 0;  // |alpha^{C_p}|
  int y = 0;  // |alpha|
  int p = 2;
};

// Label of H^alpha_{C_2}(S^0; A) at (x, y).
PointCohomClass PointCohomologyC2(int x, int y);

// Label of H^alpha_{C_p}(S^0; A) at (x, y) for odd p. The origin carries
// A[d_alpha] with d_alpha symbolic.
PointCohomClass PointCohomologyOdd(int x, int y, int p);

bool IsPrime(int n);

}  // namespace eqhp

#endif  // EQHP_MACKEY_H_
