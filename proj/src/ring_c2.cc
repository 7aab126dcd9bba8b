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

#include "eqhp/ring_c2.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "eqhp/errors.h"

namespace eqhp {

namespace {

Coeff CheckedAdd(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("coefficient overflow");
  return out;
}

Coeff CheckedMul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("coefficient overflow");
  return out;
}

Coeff ReduceCoeff(Coeff value, bool torsion) {
  if (!torsion) return value;
  return value % 2 == 0 ? 0 : 1;
}

std::string PositionString(C2Degree degree) {
  return ToString(degree) + " [position (" + std::to_string(degree.fixed_dim()) +
         "," + std::to_string(degree.total_dim()) + ")]";
}

void AppendPower(std::vector<std::string>& factors, const std::string& name,
                 int exponent) {
  if (exponent == 0) return;
  factors.push_back(exponent == 1 ? name : name + "^" + std::to_string(exponent));
}

std::string JoinFactors(const std::vector<std::string>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += "*";
    out += factors[i];
  }
  return out;
}

// Renders sum coeff*monomial in the given order.
template <typename Map, typename Render>
std::string RenderSum(const Map& terms, Render render_monomial) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [monomial, coeff] : terms) {
    const std::string body = render_monomial(monomial);
    const Coeff magnitude = coeff < 0 ? -coeff : coeff;
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (magnitude != 1) {
      out += std::to_string(magnitude);
      if (body != "1") out += "*" + body;
    } else {
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string ToString(const Monomial& monomial) {
  std::vector<std::string> factors;
  AppendPower(factors, "e", monomial.a);
  AppendPower(factors, "x", monomial.b);
  AppendPower(factors, "c", monomial.i);
  AppendPower(factors, "CC", monomial.j);
  return JoinFactors(factors);
}

RingElement RingElement::One() { return FromMonomial({}); }
RingElement RingElement::Epsilon() { return FromMonomial({1, 0, 0, 0}); }
RingElement RingElement::Xi() { return FromMonomial({0, 1, 0, 0}); }
RingElement RingElement::SmallC() { return FromMonomial({0, 0, 1, 0}); }
RingElement RingElement::BigC() { return FromMonomial({0, 0, 0, 1}); }

RingElement RingElement::Integer(Coeff value) {
  if (value == 0) return RingElement();
  return FromMonomial({}, value);
}

RingElement RingElement::FromMonomial(const Monomial& monomial, Coeff coeff) {
  if (monomial.a < 0 || monomial.b < 0 || monomial.i < 0 || monomial.j < 0) {
    throw DomainError("negative exponent in monomial");
  }
  RingElement out;
  out.degree_ = monomial.degree();
  out.AddTerm(monomial, coeff);
  return out;
}

RingElement RingElement::ZeroOfDegree(C2Degree degree) {
  RingElement out;
  out.degree_ = degree;
  return out;
}

Coeff RingElement::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? 0 : it->second;
}

void RingElement::AddTerm(const Monomial& monomial, Coeff coeff) {
  if (coeff == 0) return;
  if (monomial.i >= 2) {
    // c^2 = e^4 c + x^2 C
    AddTerm({monomial.a + 4, monomial.b, monomial.i - 1, monomial.j}, coeff);
    AddTerm({monomial.a, monomial.b + 2, monomial.i - 2, monomial.j + 1}, coeff);
    return;
  }
  Coeff& slot = terms_[monomial];
  slot = ReduceCoeff(CheckedAdd(slot, coeff), monomial.torsion());
  if (slot == 0) terms_.erase(monomial);
}

RingElement RingElement::operator+(const RingElement& other) const {
  if (degree_ && other.degree_ && !(*degree_ == *other.degree_)) {
    throw HomogeneityError("cannot add elements of degree " +
                           PositionString(*degree_) + " and " +
                           PositionString(*other.degree_));
  }
  RingElement out = *this;
  if (!out.degree_) out.degree_ = other.degree_;
  for (const auto& [monomial, coeff] : other.terms_) out.AddTerm(monomial, coeff);
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out;
  out.degree_ = degree_;
  for (const auto& [monomial, coeff] : terms_) out.AddTerm(monomial, -coeff);
  return out;
}

RingElement RingElement::operator-(const RingElement& other) const {
  return *this + (-other);
}

RingElement RingElement::operator*(const RingElement& other) const {
  RingElement out;
  if (degree_ && other.degree_) out.degree_ = *degree_ + *other.degree_;
  for (const auto& [lm, lc] : terms_) {
    for (const auto& [rm, rc] : other.terms_) {
      out.AddTerm({lm.a + rm.a, lm.b + rm.b, lm.i + rm.i, lm.j + rm.j},
                  CheckedMul(lc, rc));
    }
  }
  return out;
}

std::string RingElement::ToString() const {
  return RenderSum(terms_, [](const Monomial& m) { return eqhp::ToString(m); });
}

RingElement Multiply(const RingElement& u, const RingElement& v) { return u * v; }

RingElement Power(const RingElement& u, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  RingElement out = RingElement::One();
  for (int e = 0; e < exponent; ++e) out = out * u;
  return out;
}

SunElement SunElement::XPower(int power, Coeff coeff,
                              std::optional<int> truncation) {
  SunElement out(truncation);
  out.AddTerm(power, coeff);
  return out;
}

void SunElement::AddTerm(int power, Coeff coeff) {
  if (coeff == 0) return;
  if (truncation_ && power >= *truncation_) return;
  Coeff& slot = terms_[power];
  slot = CheckedAdd(slot, coeff);
  if (slot == 0) terms_.erase(power);
}

SunElement SunElement::operator+(const SunElement& other) const {
  SunElement out = *this;
  if (!out.truncation_) out.truncation_ = other.truncation_;
  for (const auto& [power, coeff] : other.terms_) out.AddTerm(power, coeff);
  return out;
}

SunElement SunElement::operator*(const SunElement& other) const {
  SunElement out(truncation_ ? truncation_ : other.truncation_);
  for (const auto& [lp, lc] : terms_) {
    for (const auto& [rp, rc] : other.terms_) out.AddTerm(lp + rp, CheckedMul(lc, rc));
  }
  return out;
}

std::string SunElement::ToString() const {
  return RenderSum(terms_, [](int power) {
    std::vector<std::string> factors;
    AppendPower(factors, "X", power);
    return JoinFactors(factors);
  });
}

FixedRingElement FixedRingElement::Term(int r, FixedMonomial monomial,
                                        Coeff coeff,
                                        std::optional<int> truncation) {
  FixedRingElement out(r, truncation);
  out.AddTerm(monomial, coeff);
  return out;
}

void FixedRingElement::AddTerm(const FixedMonomial& monomial, Coeff coeff) {
  if (coeff == 0) return;
  if (truncation_ && monomial.k >= *truncation_) return;
  Coeff& slot = terms_[monomial];
  slot = ReduceCoeff(CheckedAdd(slot, coeff), monomial.torsion());
  if (slot == 0) terms_.erase(monomial);
}

FixedRingElement FixedRingElement::operator+(const FixedRingElement& other) const {
  if (other.r_ != r_) throw DomainError("adding images of different components");
  FixedRingElement out = *this;
  if (!out.truncation_) out.truncation_ = other.truncation_;
  for (const auto& [monomial, coeff] : other.terms_) out.AddTerm(monomial, coeff);
  return out;
}

FixedRingElement FixedRingElement::operator*(const FixedRingElement& other) const {
  if (other.r_ != r_) throw DomainError("multiplying images of different components");
  FixedRingElement out(r_, truncation_ ? truncation_ : other.truncation_);
  for (const auto& [lm, lc] : terms_) {
    for (const auto& [rm, rc] : other.terms_) {
      out.AddTerm({lm.a + rm.a, lm.b + rm.b, lm.k + rm.k}, CheckedMul(lc, rc));
    }
  }
  return out;
}

std::string FixedRingElement::ToString() const {
  const std::string var = "x" + std::to_string(r_);
  return RenderSum(terms_, [&var](const FixedMonomial& m) {
    std::vector<std::string> factors;
    AppendPower(factors, "e", m.a);
    AppendPower(factors, "x", m.b);
    AppendPower(factors, var, m.k);
    return JoinFactors(factors);
  });
}

int FixedTruncationExponent(int r, int level) {
  if (level < 1) throw DomainError("filtration level must be positive");
  // [0]P(W_m) = HP^{ceil(m/2)-1}, [1]P(W_m) = HP^{floor(m/2)-1}.
  switch (r) {
    case 0:
      return (level + 1) / 2;
    case 1:
      return level / 2;
    default:
      throw DomainError("fixed component must be 0 or 1 for C_2");
  }
}

SunElement EvalSun(const RingElement& u, std::optional<int> level) {
  if (level && *level < 1) throw DomainError("filtration level must be positive");
  SunElement out(level);
  for (const auto& [m, coeff] : u.terms()) {
    if (m.a > 0) continue;  // restriction kills epsilon
    out.AddTerm(m.i + 2 * m.j, coeff);
  }
  return out;
}

FixedRingElement EvalFixed(const RingElement& u, int r, std::optional<int> level) {
  std::optional<int> truncation;
  if (level) truncation = FixedTruncationExponent(r, *level);
  if (r != 0 && r != 1) throw DomainError("fixed component must be 0 or 1 for C_2");

  FixedRingElement image_c = FixedRingElement::Term(r, {0, 2, 1}, 1, truncation);
  if (r == 1) image_c.AddTerm({4, 0, 0}, 1);
  FixedRingElement image_big_c = FixedRingElement::Term(r, {4, 0, 1}, 1, truncation);
  image_big_c.AddTerm({0, 2, 2}, 1);

  FixedRingElement out(r, truncation);
  for (const auto& [m, coeff] : u.terms()) {
    FixedRingElement term = FixedRingElement::Term(r, {m.a, m.b, 0}, coeff, truncation);
    for (int e = 0; e < m.i; ++e) term = term * image_c;
    for (int e = 0; e < m.j; ++e) term = term * image_big_c;
    out = out + term;
  }
  return out;
}

Images EvaluateAll(const RingElement& u, std::optional<int> level) {
  return {EvalSun(u, level), EvalFixed(u, 0, level), EvalFixed(u, 1, level)};
}

RingElement RelationRhs() {
  return RingElement::FromMonomial({4, 0, 1, 0}) +
         RingElement::FromMonomial({0, 2, 0, 1});
}

RelationCheck CheckRelation(const RingElement& rhs) {
  const C2Degree square_degree{0, 8};
  if (rhs.degree() && !(*rhs.degree() == square_degree)) {
    throw HomogeneityError("relation right-hand side must have degree " +
                           PositionString(square_degree));
  }
  const Images c = EvaluateAll(RingElement::SmallC());
  const Images image_rhs = EvaluateAll(rhs);

  RelationCheck check;
  auto compare = [&check](std::string name, const auto& lhs, const auto& rhs_image) {
    ImageComparison cmp{std::move(name), lhs.ToString(), rhs_image.ToString(),
                        lhs == rhs_image};
    if (!cmp.equal && check.first_failure.empty()) check.first_failure = cmp.map;
    check.comparisons.push_back(std::move(cmp));
  };
  compare("sun", c.sun * c.sun, image_rhs.sun);
  compare("fixed0", c.fixed0 * c.fixed0, image_rhs.fixed0);
  compare("fixed1", c.fixed1 * c.fixed1, image_rhs.fixed1);
  check.pass = check.first_failure.empty();
  return check;
}

NuRecord NuClass(int n) {
  if (n < 1) throw DomainError("nu is defined for n >= 1");
  NuRecord record;
  record.n = n;
  const bool even = n % 2 == 0;
  record.nu = even ? Power(RingElement::BigC(), n / 2)
                   : RingElement::SmallC() * Power(RingElement::BigC(), (n - 1) / 2);
  const int level = n + 1;
  record.images = EvaluateAll(record.nu, level);

  const int t0 = FixedTruncationExponent(0, level);
  const int t1 = FixedTruncationExponent(1, level);
  record.expected.sun = SunElement::XPower(n, 1, level);
  record.expected.fixed0 = even ? FixedRingElement::Term(0, {2 * n, 0, n / 2}, 1, t0)
                                : FixedRingElement(0, t0);
  record.expected.fixed1 = even
                               ? FixedRingElement(1, t1)
                               : FixedRingElement::Term(1, {2 * n + 2, 0, (n - 1) / 2}, 1, t1);
  record.matches = record.images == record.expected;
  return record;
}

std::vector<Monomial> MonomialBasis(C2Degree degree, int max_j) {
  std::vector<Monomial> basis;
  for (int j = 0; j <= max_j; ++j) {
    // m = -2b + 4j
    const int twice_b = 4 * j - degree.m;
    if (twice_b < 0 || twice_b % 2 != 0) continue;
    const int b = twice_b / 2;
    for (int i = 0; i <= 1; ++i) {
      // s = a + 2b + 4i + 4j
      const int a = degree.s - 2 * b - 4 * i - 4 * j;
      if (a >= 0) basis.push_back({a, b, i, j});
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

namespace {

int RankOverRationals(std::vector<std::vector<Coeff>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Coeff p = rows[rank][col];
      const Coeff q = rows[r][col];
      Coeff g = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        rows[r][c] = CheckedAdd(CheckedMul(rows[r][c], p), -CheckedMul(rows[rank][c], q));
        g = std::gcd(g, rows[r][c]);
      }
      if (g > 1) {
        for (auto& v : rows[r]) v /= g;
      }
    }
    ++rank;
  }
  return rank;
}

int RankOverF2(std::vector<std::vector<Coeff>> rows) {
  for (auto& row : rows) {
    for (auto& v : row) v &= 1;
  }
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] ^= rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// (target map, a, b, power): map 0 is the free-orbit level, 1 and 2 the
// fixed components.
using Coordinate = std::tuple<int, int, int, int>;

std::map<Coordinate, Coeff> Coordinates(const Images& images) {
  std::map<Coordinate, Coeff> out;
  for (const auto& [power, coeff] : images.sun.terms()) out[{0, 0, 0, power}] = coeff;
  for (const auto& [m, coeff] : images.fixed0.terms()) out[{1, m.a, m.b, m.k}] = coeff;
  for (const auto& [m, coeff] : images.fixed1.terms()) out[{2, m.a, m.b, m.k}] = coeff;
  return out;
}

bool IsTorsionCoordinate(const Coordinate& c) {
  return std::get<0>(c) != 0 && std::get<1>(c) >= 1 && std::get<2>(c) >= 1;
}

}  // namespace

InjectivityProbe ProbeInjectivity(C2Degree degree, int max_j) {
  if (degree.m % 2 != 0 || degree.total_dim() % 2 != 0) {
    throw DomainError("degree " + PositionString(degree) +
                      " is not even; the comparison map is only injective in "
                      "even degrees");
  }
  InjectivityProbe probe;
  probe.degree = degree;
  probe.basis = MonomialBasis(degree, max_j);

  std::vector<std::map<Coordinate, Coeff>> free_images;
  std::vector<std::map<Coordinate, Coeff>> torsion_images;
  std::map<Coordinate, int> free_columns;
  std::map<Coordinate, int> torsion_columns;
  for (const Monomial& m : probe.basis) {
    const auto coords = Coordinates(EvaluateAll(RingElement::FromMonomial(m)));
    // A Z/2 generator cannot reach the free coordinates, and the torsion
    // part of a free generator's image does not affect injectivity.
    auto& bucket = m.torsion() ? torsion_images : free_images;
    std::map<Coordinate, Coeff> kept;
    for (const auto& [c, v] : coords) {
      if (IsTorsionCoordinate(c) == m.torsion()) kept[c] = v;
    }
    auto& columns = m.torsion() ? torsion_columns : free_columns;
    for (const auto& [c, v] : kept) columns.emplace(c, 0);
    bucket.push_back(std::move(kept));
  }
  auto to_rows = [](const std::vector<std::map<Coordinate, Coeff>>& images,
                    std::map<Coordinate, int>& columns) {
    int next = 0;
    for (auto& [c, index] : columns) index = next++;
    std::vector<std::vector<Coeff>> rows;
    for (const auto& image : images) {
      std::vector<Coeff> row(columns.size(), 0);
      for (const auto& [c, v] : image) row[columns.at(c)] = v;
      rows.push_back(std::move(row));
    }
    return rows;
  };
  probe.free_generators = static_cast<int>(free_images.size());
  probe.torsion_generators = static_cast<int>(torsion_images.size());
  probe.free_rank = RankOverRationals(to_rows(free_images, free_columns));
  probe.torsion_rank = RankOverF2(to_rows(torsion_images, torsion_columns));
  probe.injective = probe.free_rank == probe.free_generators &&
                    probe.torsion_rank == probe.torsion_generators;
  return probe;
}

}  // namespace eqhp
