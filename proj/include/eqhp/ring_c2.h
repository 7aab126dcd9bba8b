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

// The ring H^*_{C_2}(B_{C_2}SU(2)_+; A) in normal form.
//
// Elements are Z-linear combinations of monomials e^a x^b c^i C^j with
// i in {0, 1}, where e = epsilon (degree sigma), x = xi (degree 2 sigma - 2),
// c (degree 4 sigma) and C (degree 4 + 4 sigma), subject to
//
//   c^2 = e^4 c + x^2 C.
//
// The coefficient of a monomial with a >= 1 and b >= 1 lives in Z/2 (its
// position lies in the Z/2 region of the point cohomology) and is stored as
// 0 or 1; every other coefficient is an integer. Sums must be homogeneous.
//
// Three ring maps detect elements in even degrees:
//   EvalSun:      e -> 0, x -> 1, c -> X, C -> X^2            (into Z[X])
//   EvalFixed(r): e -> e, x -> x, c -> delta_r + x^2 x_r,
//                 C -> x_r (e^4 + x^2 x_r)                    (into Z[e,x,x_r]/(2ex))
// with delta_0 = 0 and delta_1 = e^4. Truncation at filtration level m kills
// X^m, x_0^{ceil(m/2)} and x_1^{floor(m/2)}.

#ifndef EQHP_RING_C2_H_
#define EQHP_RING_C2_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "eqhp/cellgen.h"

namespace eqhp {

using Coeff = std::int64_t;

struct Monomial {
  int a = 0;  // epsilon
  int b = 0;  // xi
  int i = 0;  // c
  int j = 0;  // C

  C2Degree degree() const { return {-2 * b + 4 * j, a + 2 * b + 4 * i + 4 * j}; }
  bool torsion() const { return a >= 1 && b >= 1; }

  // Display order: by c-weight i + 2j, then xi, then epsilon.
  auto key() const { return std::make_tuple(i + 2 * j, b, a, i); }
  friend bool operator<(const Monomial& l, const Monomial& r) {
    return l.key() < r.key();
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::string ToString(const Monomial& monomial);

class RingElement {
 public:
  RingElement() = default;  // zero, no degree

  static RingElement One();
  static RingElement Epsilon();
  static RingElement Xi();
  static RingElement SmallC();
  static RingElement BigC();
  static RingElement Integer(Coeff value);
  // Any c-exponent is accepted and rewritten into normal form.
  static RingElement FromMonomial(const Monomial& monomial, Coeff coeff = 1);
  // Zero element carrying a degree.
  static RingElement ZeroOfDegree(C2Degree degree);

  std::optional<C2Degree> degree() const { return degree_; }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Monomial& monomial) const;

  // Throws HomogeneityError when both sides have different degrees.
  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& other) const;

  friend bool operator==(const RingElement& l, const RingElement& r) {
    return l.terms_ == r.terms_;
  }

  std::string ToString() const;

 private:
  void AddTerm(const Monomial& monomial, Coeff coeff);

  std::optional<C2Degree> degree_;
  std::map<Monomial, Coeff> terms_;
};

RingElement Multiply(const RingElement& u, const RingElement& v);
RingElement Power(const RingElement& u, int exponent);

// Polynomial in X (degree 4) over Z, optionally truncated at X^level.
class SunElement {
 public:
  SunElement() = default;
  explicit SunElement(std::optional<int> truncation)
      : truncation_(truncation) {}

  static SunElement XPower(int power, Coeff coeff = 1,
                           std::optional<int> truncation = std::nullopt);

  std::optional<int> truncation() const { return truncation_; }
  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void AddTerm(int power, Coeff coeff);
  SunElement operator+(const SunElement& other) const;
  SunElement operator*(const SunElement& other) const;

  friend bool operator==(const SunElement& l, const SunElement& r) {
    return l.terms_ == r.terms_;
  }

  std::string ToString() const;

 private:
  std::optional<int> truncation_;
  std::map<int, Coeff> terms_;
};

struct FixedMonomial {
  int a = 0;  // epsilon
  int b = 0;  // xi
  int k = 0;  // x_r

  bool torsion() const { return a >= 1 && b >= 1; }

  // Display order: by power of x_r, then xi, then epsilon.
  friend bool operator<(const FixedMonomial& l, const FixedMonomial& r) {
    return std::tie(l.k, l.b, l.a) < std::tie(r.k, r.b, r.a);
  }
  friend bool operator==(const FixedMonomial&, const FixedMonomial&) = default;
};

// Element of H^*(S^0; A) (x) Z[x_r] restricted to the e, x cone.
class FixedRingElement {
 public:
  explicit FixedRingElement(int r, std::optional<int> truncation = std::nullopt)
      : r_(r), truncation_(truncation) {}

  static FixedRingElement Term(int r, FixedMonomial monomial, Coeff coeff = 1,
                               std::optional<int> truncation = std::nullopt);

  int r() const { return r_; }
  std::optional<int> truncation() const { return truncation_; }
  const std::map<FixedMonomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void AddTerm(const FixedMonomial& monomial, Coeff coeff);
  FixedRingElement operator+(const FixedRingElement& other) const;
  FixedRingElement operator*(const FixedRingElement& other) const;

  friend bool operator==(const FixedRingElement& l, const FixedRingElement& r) {
    return l.r_ == r.r_ && l.terms_ == r.terms_;
  }

  std::string ToString() const;

 private:
  int r_;
  std::optional<int> truncation_;
  std::map<FixedMonomial, Coeff> terms_;
};

// Exponent e with x_r^e = 0 at filtration level m.
int FixedTruncationExponent(int r, int level);

SunElement EvalSun(const RingElement& u, std::optional<int> level = std::nullopt);
FixedRingElement EvalFixed(const RingElement& u, int r,
                           std::optional<int> level = std::nullopt);

// All three images at once.
struct Images {
  SunElement sun;
  FixedRingElement fixed0{0};
  FixedRingElement fixed1{1};

  friend bool operator==(const Images&, const Images&) = default;
};

Images EvaluateAll(const RingElement& u, std::optional<int> level = std::nullopt);

struct ImageComparison {
  std::string map;  // "sun", "fixed0", "fixed1"
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

struct RelationCheck {
  bool pass = false;
  std::vector<ImageComparison> comparisons;
  std::string first_failure;  // name of the first map that disagrees
};

// The right-hand side e^4 c + x^2 C.
RingElement RelationRhs();

// Compares the images of c^2 (squared in each target) with the images of
// rhs under all three maps.
RelationCheck CheckRelation(const RingElement& rhs = RelationRhs());

struct NuRecord {
  int n = 1;
  RingElement nu;
  Images images;
  Images expected;
  bool matches = false;
};

// nu = C^{n/2} (n even) or c C^{(n-1)/2} (n odd), checked at level n + 1
// against X^n, the x_0 image e^{2n} x_0^{n/2} or 0, and the x_1 image 0 or
// e^{2n+2} x_1^{(n-1)/2}.
NuRecord NuClass(int n);

// Normal-form monomials of a degree with C-exponent at most max_j.
std::vector<Monomial> MonomialBasis(C2Degree degree, int max_j);

struct InjectivityProbe {
  C2Degree degree;
  std::vector<Monomial> basis;
  int free_generators = 0;     // basis monomials with Z coefficients
  int torsion_generators = 0;  // basis monomials with Z/2 coefficients
  int free_rank = 0;           // rank over Q of their free image parts
  int torsion_rank = 0;        // rank over F_2 of the torsion images
  bool injective = false;
};

// Checks that (EvalSun, EvalFixed(0), EvalFixed(1)) is injective on the span
// of MonomialBasis(degree, max_j). Throws DomainError unless the degree is
// even (m and m + s even).
InjectivityProbe ProbeInjectivity(C2Degree degree, int max_j);

}  // namespace eqhp

#endif  // EQHP_RING_C2_H_
