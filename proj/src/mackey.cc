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

#include "eqhp/mackey.h"

#include <algorithm>
#include <sstream>

#include "eqhp/errors.h"

namespace eqhp {

namespace {

long long Reduce(long long value, int order) {
  if (order == 0) return value;
  long long r = value % order;
  return r < 0 ? r + order : r;
}

IntMatrix ZeroMatrix(int rows, int cols) {
  return IntMatrix(rows, std::vector<long long>(cols, 0));
}

GroupHom Normalized(GroupHom f) {
  for (int i = 0; i < f.codomain.generator_count(); ++i) {
    const int order = f.codomain.generator_order(i);
    for (auto& entry : f.matrix[i]) entry = Reduce(entry, order);
  }
  return f;
}

GroupHom MakeHom(const AbelianGroup& from, const AbelianGroup& to,
                 IntMatrix matrix) {
  return Normalized(GroupHom{from, to, std::move(matrix)});
}

}  // namespace

AbelianGroup AbelianGroup::Cyclic(int order) {
  if (order < 0) throw DomainError("negative cyclic order");
  if (order == 0) return Free(1);
  if (order == 1) return Zero();
  return {0, {order}};
}

int AbelianGroup::generator_order(int i) const {
  return i < rank ? 0 : torsion.at(i - rank);
}

AbelianGroup AbelianGroup::operator+(const AbelianGroup& other) const {
  AbelianGroup out{rank + other.rank, torsion};
  out.torsion.insert(out.torsion.end(), other.torsion.begin(),
                     other.torsion.end());
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

std::string ToString(const AbelianGroup& group) {
  if (group.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (group.rank > 0) {
    out << "Z";
    if (group.rank > 1) out << "^" << group.rank;
    first = false;
  }
  // Collapse repeated torsion orders into powers.
  for (std::size_t i = 0; i < group.torsion.size();) {
    std::size_t j = i;
    while (j < group.torsion.size() && group.torsion[j] == group.torsion[i]) ++j;
    if (!first) out << " + ";
    out << "Z/" << group.torsion[i];
    if (j - i > 1) out << "^" << (j - i);
    first = false;
    i = j;
  }
  return out.str();
}

GroupHom GroupHom::Identity(const AbelianGroup& group) {
  const int n = group.generator_count();
  IntMatrix m = ZeroMatrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return MakeHom(group, group, std::move(m));
}

GroupHom GroupHom::ZeroMap(const AbelianGroup& from, const AbelianGroup& to) {
  return {from, to, ZeroMatrix(to.generator_count(), from.generator_count())};
}

bool GroupHom::WellDefined() const {
  if (static_cast<int>(matrix.size()) != codomain.generator_count()) return false;
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != domain.generator_count()) return false;
  }
  for (int j = 0; j < domain.generator_count(); ++j) {
    const int source = domain.generator_order(j);
    if (source == 0) continue;
    for (int i = 0; i < codomain.generator_count(); ++i) {
      if (Reduce(source * matrix[i][j], codomain.generator_order(i)) != 0) {
        return false;
      }
    }
  }
  return true;
}

GroupHom Compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.codomain == g.domain)) throw DomainError("composition mismatch");
  const int rows = g.codomain.generator_count();
  const int inner = f.codomain.generator_count();
  const int cols = f.domain.generator_count();
  IntMatrix m = ZeroMatrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < inner; ++k) {
      for (int j = 0; j < cols; ++j) m[i][j] += g.matrix[i][k] * f.matrix[k][j];
    }
  }
  return MakeHom(f.domain, g.codomain, std::move(m));
}

GroupHom Add(const GroupHom& f, const GroupHom& g) {
  if (!(f.domain == g.domain) || !(f.codomain == g.codomain)) {
    throw DomainError("sum of homomorphisms with different signatures");
  }
  GroupHom out = f;
  for (std::size_t i = 0; i < out.matrix.size(); ++i) {
    for (std::size_t j = 0; j < out.matrix[i].size(); ++j) {
      out.matrix[i][j] += g.matrix[i][j];
    }
  }
  return Normalized(std::move(out));
}

bool Equal(const GroupHom& f, const GroupHom& g) {
  if (!(f.domain == g.domain) || !(f.codomain == g.codomain)) return false;
  return Normalized(f).matrix == Normalized(g).matrix;
}

std::string_view ToString(MackeyLabel label) {
  switch (label) {
    case MackeyLabel::kA:
      return "A";
    case MackeyLabel::kTwistedA:
      return "A[d]";
    case MackeyLabel::kR:
      return "R";
    case MackeyLabel::kL:
      return "L";
    case MackeyLabel::kRMinus:
      return "R_minus";
    case MackeyLabel::kLMinus:
      return "L_minus";
    case MackeyLabel::kBraketZ:
      return "braket_Z";
    case MackeyLabel::kBraketZ2:
      return "braket_Z2";
    case MackeyLabel::kBraketZp:
      return "braket_Zp";
    case MackeyLabel::kZero:
      return "zero";
  }
  return "zero";
}

MackeyLabel ParseMackeyLabel(std::string_view name) {
  for (MackeyLabel label :
       {MackeyLabel::kA, MackeyLabel::kTwistedA, MackeyLabel::kR,
        MackeyLabel::kL, MackeyLabel::kRMinus, MackeyLabel::kLMinus,
        MackeyLabel::kBraketZ, MackeyLabel::kBraketZ2, MackeyLabel::kBraketZp,
        MackeyLabel::kZero}) {
    if (ToString(label) == name) return label;
  }
  throw DomainError("unknown Mackey functor '" + std::string(name) + "'");
}

bool IsPrime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

MackeyPresentation NamedFunctor(MackeyLabel label, int p) {
  if (!IsPrime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const bool signed_label = label == MackeyLabel::kRMinus ||
                            label == MackeyLabel::kLMinus ||
                            label == MackeyLabel::kBraketZ2;
  if (signed_label && p != 2) {
    throw DomainError(std::string(ToString(label)) + " is only defined for p = 2");
  }

  const AbelianGroup z = AbelianGroup::Free(1);
  const AbelianGroup zero = AbelianGroup::Zero();
  MackeyPresentation m;
  m.label = label;
  m.p = p;
  auto set = [&m](AbelianGroup top, AbelianGroup bottom, IntMatrix res,
                  IntMatrix tr, IntMatrix weyl) {
    m.top = top;
    m.bottom = bottom;
    m.res = MakeHom(top, bottom, std::move(res));
    m.tr = MakeHom(bottom, top, std::move(tr));
    m.weyl = MakeHom(bottom, bottom, std::move(weyl));
  };

  switch (label) {
    case MackeyLabel::kA:
      set(AbelianGroup::Free(2), z, {{1, p}}, {{0}, {1}}, {{1}});
      break;
    case MackeyLabel::kTwistedA:
      set(AbelianGroup::Free(2), z, {{0, p}}, {{0}, {1}}, {{1}});
      m.symbolic_res_entry = std::make_pair(0, 0);
      break;
    case MackeyLabel::kR:
      set(z, z, {{1}}, {{p}}, {{1}});
      break;
    case MackeyLabel::kL:
      set(z, z, {{p}}, {{1}}, {{1}});
      break;
    case MackeyLabel::kRMinus:
      set(zero, z, {{}}, {}, {{-1}});
      break;
    case MackeyLabel::kLMinus:
      set(AbelianGroup::Cyclic(2), z, {{0}}, {{1}}, {{-1}});
      break;
    case MackeyLabel::kBraketZ:
      set(z, zero, {}, {{}}, {});
      break;
    case MackeyLabel::kBraketZ2:
      set(AbelianGroup::Cyclic(2), zero, {}, {{}}, {});
      break;
    case MackeyLabel::kBraketZp:
      set(AbelianGroup::Cyclic(p), zero, {}, {{}}, {});
      break;
    case MackeyLabel::kZero:
      set(zero, zero, {}, {}, {});
      break;
  }
  return m;
}

GroupHom RestrictionOfTransfer(const MackeyPresentation& m) {
  if (m.symbolic_res_entry.has_value()) {
    // The symbolic entry res[row][col] multiplies row col of tr.
    const int col = m.symbolic_res_entry->second;
    for (long long entry : m.tr.matrix[col]) {
      if (entry != 0) {
        throw DomainError("res o tr depends on the symbolic entry of " +
                          std::string(ToString(m.label)));
      }
    }
  }
  return Compose(m.res, m.tr);
}

GroupHom WeylNorm(const MackeyPresentation& m) {
  GroupHom power = GroupHom::Identity(m.bottom);
  GroupHom sum = power;
  for (int i = 1; i < m.p; ++i) {
    power = Compose(m.weyl, power);
    sum = Add(sum, power);
  }
  return sum;
}

bool SatisfiesDoubleCoset(const MackeyPresentation& m) {
  GroupHom power = GroupHom::Identity(m.bottom);
  for (int i = 0; i < m.p; ++i) power = Compose(m.weyl, power);
  if (!Equal(power, GroupHom::Identity(m.bottom))) return false;
  return Equal(RestrictionOfTransfer(m), WeylNorm(m));
}

PointCohomClass PointCohomologyC2(int x, int y) {
  PointCohomClass out{MackeyLabel::kZero, x, y, 2};
  if (y == 0) {
    if (x == 0) {
      out.label = MackeyLabel::kA;
    } else if (x < 0) {
      out.label = x % 2 == 0 ? MackeyLabel::kR : MackeyLabel::kRMinus;
    } else if (x == 1) {
      out.label = MackeyLabel::kRMinus;
    } else {
      out.label = x % 2 == 0 ? MackeyLabel::kL : MackeyLabel::kLMinus;
    }
  } else if (x == 0) {
    out.label = MackeyLabel::kBraketZ;
  } else if (x <= -2 && x % 2 == 0 && y > 0) {
    out.label = MackeyLabel::kBraketZ2;
  } else if (x >= 3 && x % 2 != 0 && y < 0) {
    out.label = MackeyLabel::kBraketZ2;
  }
  return out;
}

PointCohomClass PointCohomologyOdd(int x, int y, int p) {
  if (!IsPrime(p) || p == 2) {
    throw DomainError(std::to_string(p) + " is not an odd prime");
  }
  PointCohomClass out{MackeyLabel::kZero, x, y, p};
  const bool x_even = x % 2 == 0;
  const bool y_even = y % 2 == 0;
  if (x == 0 && y == 0) {
    out.label = MackeyLabel::kTwistedA;
  } else if (y == 0) {
    if (x_even) out.label = x < 0 ? MackeyLabel::kR : MackeyLabel::kL;
  } else if (x == 0) {
    if (y_even) out.label = MackeyLabel::kBraketZ;
  } else if (x <= -2 && x_even && y >= 2 && y_even) {
    out.label = MackeyLabel::kBraketZp;
  } else if (x >= 3 && !x_even && y <= -1 && !y_even) {
    out.label = MackeyLabel::kBraketZp;
  }
  return out;
}

}  // namespace eqhp
