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

// Representation theory of the cyclic group C_n over the complex numbers and
// the quaternions.
//
// The irreducible complex representations are Phi_r (generator acting by
// zeta_n^r), indexed by r mod n. The irreducible quaternionic ones are Psi_r,
// with Psi_r ~ Psi_s iff r = +-s mod n, indexed canonically by 0..floor(n/2).
// Every representation is stored as a dense multiplicity vector over the
// canonical indices; arbitrary integer indices are reduced on entry.

#ifndef EQHP_REP_CN_H_
#define EQHP_REP_CN_H_

#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace eqhp {

// Non-negative residue of a modulo n (n >= 1).
int Mod(long long a, int n);

// Positive divisors of n in ascending order.
std::vector<int> Divisors(int n);

// Canonical quaternionic index of r: the representative of {r, -r} mod n in
// [0, floor(n/2)].
int CanonicalQuatIndex(long long r, int n);

enum class RepType { kReal, kComplex, kQuaternionic };

std::string_view ToString(RepType type);

class IrredComplex {
 public:
  IrredComplex(int n, long long r);

  int order() const { return n_; }
  int index() const { return r_; }

  IrredComplex Conjugate() const { return IrredComplex(n_, -r_); }

  friend bool operator==(const IrredComplex&, const IrredComplex&) = default;

 private:
  int n_;
  int r_;
};

class IrredQuat {
 public:
  IrredQuat(int n, long long r);

  int order() const { return n_; }
  int index() const { return r_; }

  friend bool operator==(const IrredQuat&, const IrredQuat&) = default;

 private:
  int n_;
  int r_;
};

// A complex C_n-representation V = sum_r a_r Phi_r.
class ComplexRep {
 public:
  explicit ComplexRep(int n);
  ComplexRep(int n, std::vector<int> multiplicities);

  static ComplexRep Irreducible(const IrredComplex& phi, int count = 1);

  int order() const { return n_; }
  std::span<const int> multiplicities() const { return mult_; }
  int multiplicity(long long r) const { return mult_[Mod(r, n_)]; }

  // Real dimension |V| = 2 * sum a_r.
  int RealDimension() const;

  ComplexRep Conjugate() const;

  ComplexRep operator+(const ComplexRep& other) const;

  friend bool operator==(const ComplexRep&, const ComplexRep&) = default;

 private:
  int n_;
  std::vector<int> mult_;
};

// A quaternionic C_n-representation W = sum_r b_r Psi_r, r in 0..floor(n/2).
class QuatRep {
 public:
  explicit QuatRep(int n);
  QuatRep(int n, std::vector<int> multiplicities);

  static QuatRep Irreducible(const IrredQuat& psi, int count = 1);

  int order() const { return n_; }
  std::span<const int> multiplicities() const { return mult_; }
  int multiplicity(long long r) const {
    return mult_[CanonicalQuatIndex(r, n_)];
  }

  // Real dimension |W| = 4 * sum b_r.
  int RealDimension() const;

  QuatRep operator+(const QuatRep& other) const;

  friend bool operator==(const QuatRep&, const QuatRep&) = default;

 private:
  int n_;
  std::vector<int> mult_;
};

// (1/n) sum_g chi(g^2) for an irreducible complex representation, evaluated
// exactly: 1, 0 or -1 for real, complex or quaternionic type.
int FrobeniusSchurIndicator(const IrredComplex& phi);

RepType ClassifyType(const IrredComplex& phi);

// H (x)_C V: Phi_r goes to Psi_r.
QuatRep Extend(const ComplexRep& v);

// W viewed as a complex representation: Psi_r = Phi_r + Phi_{-r}.
ComplexRep RestrictQuat(const QuatRep& w);

// V restricted to the subgroup dC_n, viewed as a C_{n/d}-representation.
// Throws DomainError unless d divides n.
ComplexRep RestrictSubgroup(const ComplexRep& v, int d);

// |W(r;H)|.
int IsotypicalDimQuat(const QuatRep& w, long long r);

// |W(r;C)|: equal to |W(r;H)| when 2r = 0 mod n and half of it otherwise.
int IsotypicalDimComplex(const QuatRep& w, long long r);

// |V(r;C)| = 2 a_r.
int IsotypicalDimComplex(const ComplexRep& v, long long r);

// Phi_k (x)_C V. The multiplicity of Phi_r in the result is a_{r-k}.
ComplexRep TensorPhi(long long k, const ComplexRep& v);

// |(Phi_k (x)_C V)^{C_n}| = |V(-k;C)|.
int TensorPhiFixedDim(long long k, const ComplexRep& v);

// |V^{dC_n}| for a divisor d of n. d = 1 is the whole group, d = n the
// trivial subgroup.
int FixedDim(const ComplexRep& v, int d);

// Divisor d -> |V^{dC_n}| for every d | n.
using FixedDimProfile = std::map<int, int>;
FixedDimProfile FixedDimProfileOf(const ComplexRep& v);

}  // namespace eqhp

#endif  // EQHP_REP_CN_H_
