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

#include "eqhp/rep_cn.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "eqhp/errors.h"

namespace eqhp {

namespace {

void CheckOrder(int n) {
  if (n < 1) {
    throw DomainError("group order must be positive, got " +
                      std::to_string(n));
  }
}

void CheckMultiplicities(const std::vector<int>& mult, std::size_t expected,
                         const char* what) {
  if (mult.size() != expected) {
    throw DomainError(std::string(what) + " multiplicity vector has length " +
                      std::to_string(mult.size()) + ", expected " +
                      std::to_string(expected));
  }
  for (int m : mult) {
    if (m < 0) throw DomainError("multiplicities must be non-negative");
  }
}

}  // namespace

int Mod(long long a, int n) {
  long long r = a % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

std::vector<int> Divisors(int n) {
  CheckOrder(n);
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

int CanonicalQuatIndex(long long r, int n) {
  CheckOrder(n);
  int s = Mod(r, n);
  return std::min(s, n - s == n ? 0 : n - s);
}

std::string_view ToString(RepType type) {
  switch (type) {
    case RepType::kReal:
      return "real";
    case RepType::kComplex:
      return "complex";
    case RepType::kQuaternionic:
      return "quaternionic";
  }
  return "unknown";
}

IrredComplex::IrredComplex(int n, long long r) : n_(n), r_(0) {
  CheckOrder(n);
  r_ = Mod(r, n);
}

IrredQuat::IrredQuat(int n, long long r) : n_(n), r_(0) {
  CheckOrder(n);
  r_ = CanonicalQuatIndex(r, n);
}

ComplexRep::ComplexRep(int n) : n_(n) {
  CheckOrder(n);
  mult_.assign(n, 0);
}

ComplexRep::ComplexRep(int n, std::vector<int> multiplicities)
    : n_(n), mult_(std::move(multiplicities)) {
  CheckOrder(n);
  CheckMultiplicities(mult_, static_cast<std::size_t>(n), "complex");
}

ComplexRep ComplexRep::Irreducible(const IrredComplex& phi, int count) {
  ComplexRep v(phi.order());
  if (count < 0) throw DomainError("negative multiplicity");
  v.mult_[phi.index()] = count;
  return v;
}

int ComplexRep::RealDimension() const {
  return 2 * std::accumulate(mult_.begin(), mult_.end(), 0);
}

ComplexRep ComplexRep::Conjugate() const {
  ComplexRep out(n_);
  for (int r = 0; r < n_; ++r) out.mult_[Mod(-r, n_)] = mult_[r];
  return out;
}

ComplexRep ComplexRep::operator+(const ComplexRep& other) const {
  if (other.n_ != n_) throw DomainError("direct sum of different groups");
  ComplexRep out = *this;
  for (int r = 0; r < n_; ++r) out.mult_[r] += other.mult_[r];
  return out;
}

QuatRep::QuatRep(int n) : n_(n) {
  CheckOrder(n);
  mult_.assign(n / 2 + 1, 0);
}

QuatRep::QuatRep(int n, std::vector<int> multiplicities)
    : n_(n), mult_(std::move(multiplicities)) {
  CheckOrder(n);
  CheckMultiplicities(mult_, static_cast<std::size_t>(n / 2 + 1),
                      "quaternionic");
}

QuatRep QuatRep::Irreducible(const IrredQuat& psi, int count) {
  QuatRep w(psi.order());
  if (count < 0) throw DomainError("negative multiplicity");
  w.mult_[psi.index()] = count;
  return w;
}

int QuatRep::RealDimension() const {
  return 4 * std::accumulate(mult_.begin(), mult_.end(), 0);
}

QuatRep QuatRep::operator+(const QuatRep& other) const {
  if (other.n_ != n_) throw DomainError("direct sum of different groups");
  QuatRep out = *this;
  for (std::size_t r = 0; r < mult_.size(); ++r) out.mult_[r] += other.mult_[r];
  return out;
}

int FrobeniusSchurIndicator(const IrredComplex& phi) {
  // sum_{k<n} zeta^{2rk}: the exponents 2rk run over the subgroup of Z/n
  // generated by 2r, each hit equally often, and the roots of unity in a
  // nontrivial subgroup sum to zero.
  const int n = phi.order();
  const int step = Mod(2LL * phi.index(), n);
  const int subgroup_order = n / std::gcd(step, n);
  const int character_sum = subgroup_order == 1 ? n : 0;
  return character_sum / n;
}

RepType ClassifyType(const IrredComplex& phi) {
  switch (FrobeniusSchurIndicator(phi)) {
    case 1:
      return RepType::kReal;
    case -1:
      return RepType::kQuaternionic;
    default:
      return RepType::kComplex;
  }
}

QuatRep Extend(const ComplexRep& v) {
  const int n = v.order();
  std::vector<int> mult(n / 2 + 1, 0);
  for (int r = 0; r < n; ++r) mult[CanonicalQuatIndex(r, n)] += v.multiplicity(r);
  return QuatRep(n, std::move(mult));
}

ComplexRep RestrictQuat(const QuatRep& w) {
  const int n = w.order();
  std::vector<int> mult(n, 0);
  auto b = w.multiplicities();
  for (int r = 0; r <= n / 2; ++r) {
    mult[r] += b[r];
    mult[Mod(-r, n)] += b[r];
  }
  return ComplexRep(n, std::move(mult));
}

ComplexRep RestrictSubgroup(const ComplexRep& v, int d) {
  const int n = v.order();
  if (d < 1 || n % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide " +
                      std::to_string(n));
  }
  const int m = n / d;
  std::vector<int> mult(m, 0);
  for (int r = 0; r < n; ++r) mult[r % m] += v.multiplicity(r);
  return ComplexRep(m, std::move(mult));
}

int IsotypicalDimQuat(const QuatRep& w, long long r) {
  return 4 * w.multiplicity(r);
}

int IsotypicalDimComplex(const QuatRep& w, long long r) {
  const int quat_dim = IsotypicalDimQuat(w, r);
  return Mod(2 * r, w.order()) == 0 ? quat_dim : quat_dim / 2;
}

int IsotypicalDimComplex(const ComplexRep& v, long long r) {
  return 2 * v.multiplicity(r);
}

ComplexRep TensorPhi(long long k, const ComplexRep& v) {
  const int n = v.order();
  std::vector<int> mult(n, 0);
  for (int r = 0; r < n; ++r) mult[r] = v.multiplicity(r - k);
  return ComplexRep(n, std::move(mult));
}

int TensorPhiFixedDim(long long k, const ComplexRep& v) {
  return IsotypicalDimComplex(v, -k);
}

int FixedDim(const ComplexRep& v, int d) {
  const int n = v.order();
  if (d < 1 || n % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide " +
                      std::to_string(n));
  }
  // The subgroup dC_n is generated by d * 1_n, acting on Phi_r by
  // zeta_n^{rd}; it fixes Phi_r exactly when n/d divides r.
  const int quotient = n / d;
  int dim = 0;
  for (int r = 0; r < n; r += quotient) dim += 2 * v.multiplicity(r);
  return dim;
}

FixedDimProfile FixedDimProfileOf(const ComplexRep& v) {
  FixedDimProfile profile;
  for (int d : Divisors(v.order())) profile[d] = FixedDim(v, d);
  return profile;
}

}  // namespace eqhp
