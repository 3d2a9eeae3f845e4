// Copyright 2026 The ultra authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ultra/cyclotomic.hpp"

#include <numeric>

namespace ultra {

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  unsigned long r = n;
  for (unsigned long p : prime_factors(n)) r -= r / p;
  return r;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
  if (n == 0) throw std::invalid_argument("divisors_of: n must be positive");
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Exact division of integer polynomials, ascending coefficients; the divisor
// must be monic and must divide evenly.
std::vector<Int> div_exact(std::vector<Int> a, const std::vector<Int>& b) {
  if (b.empty() || b.back() != 1)
    throw std::logic_error("div_exact: divisor must be monic");
  if (a.size() < b.size()) throw std::logic_error("div_exact: degree underflow");
  std::vector<Int> q(a.size() - b.size() + 1);
  for (size_t qi = q.size(); qi-- > 0;) {
    Int f = a[qi + b.size() - 1];
    q[qi] = f;
    if (sgn(f) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) a[qi + j] -= f * b[j];
  }
  for (const Int& c : a)
    if (sgn(c) != 0) throw std::logic_error("div_exact: nonzero remainder");
  return q;
}

}  // namespace

std::vector<Int> cyclo_poly(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclo_poly: n must be positive");
  // X^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Int> acc(n + 1, 0);
  acc[0] = -1;
  acc[n] = 1;
  for (unsigned long d : divisors_of(n)) {
    if (d == n) continue;
    acc = div_exact(std::move(acc), cyclo_poly(d));
  }
  return acc;
}

std::shared_ptr<const CycRing> CycRing::make(unsigned long n) {
  return std::shared_ptr<const CycRing>(new CycRing(n));
}

CycRing::CycRing(unsigned long n) : n_(n), phi_(cyclo_poly(n)), deg_(phi_.size() - 1) {
  xpow_.reserve(n);
  std::vector<Rat> cur(deg_, Rat(0));
  if (deg_ > 0) cur[0] = 1;
  // deg_ == 0 cannot happen: phi has degree phi(n) >= 1.
  xpow_.push_back(cur);
  for (unsigned long e = 1; e < n; ++e) {
    std::vector<Rat> next(deg_, Rat(0));
    for (size_t i = 0; i + 1 < deg_; ++i) next[i + 1] = cur[i];
    const Rat& top = cur[deg_ - 1];
    if (sgn(top) != 0) {
      for (size_t i = 0; i < deg_; ++i) next[i] -= top * phi_[i];
    }
    xpow_.push_back(next);
    cur = std::move(next);
  }
}

CycElem::CycElem(std::shared_ptr<const CycRing> ring, std::vector<Rat> c)
    : ring_(std::move(ring)), c_(std::move(c)) {}

CycElem CycRing::zero() const {
  return CycElem(shared_from_this(), std::vector<Rat>(deg_, Rat(0)));
}

CycElem CycRing::one() const {
  std::vector<Rat> c(deg_, Rat(0));
  c[0] = 1;
  return CycElem(shared_from_this(), std::move(c));
}

CycElem CycRing::root_power(const Int& e) const {
  Int r = e % static_cast<long>(n_);
  if (sgn(r) < 0) r += static_cast<long>(n_);
  return CycElem(shared_from_this(), xpow_[r.get_ui()]);
}

CycElem CycRing::from_coords(std::vector<Rat> c) const {
  if (c.size() != deg_) throw std::invalid_argument("CycRing::from_coords: wrong length");
  return CycElem(shared_from_this(), std::move(c));
}

bool CycElem::is_zero() const {
  for (const Rat& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycElem::is_one() const {
  if (sgn(c_[0] - 1) != 0) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

namespace {
void check_same_ring(const CycElem& a, const CycElem& b) {
  if (a.ring().level() != b.ring().level())
    throw std::invalid_argument("CycElem: operands from different levels");
}
}  // namespace

CycElem operator+(const CycElem& a, const CycElem& b) {
  check_same_ring(a, b);
  std::vector<Rat> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return CycElem(a.ring_, std::move(c));
}

CycElem operator-(const CycElem& a, const CycElem& b) {
  check_same_ring(a, b);
  std::vector<Rat> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
  return CycElem(a.ring_, std::move(c));
}

CycElem operator*(const CycElem& a, const CycElem& b) {
  check_same_ring(a, b);
  const auto& phi = a.ring_->modulus();
  size_t deg = a.c_.size();
  std::vector<Rat> prod(2 * deg, Rat(0));
  for (size_t i = 0; i < deg; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < deg; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  // Reduce by the monic modulus from the top down.
  for (size_t k = prod.size(); k-- > deg;) {
    Rat f = prod[k];
    if (sgn(f) == 0) continue;
    prod[k] = 0;
    for (size_t j = 0; j < deg; ++j) prod[k - deg + j] -= f * phi[j];
  }
  prod.resize(deg);
  return CycElem(a.ring_, std::move(prod));
}

CycElem CycElem::scaled(const Rat& r) const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * r;
  return CycElem(ring_, std::move(c));
}

CycElem CycElem::pow(const Int& e) const {
  if (sgn(e) < 0) throw std::invalid_argument("CycElem::pow: negative exponent");
  CycElem acc = ring_->one();
  CycElem base = *this;
  Int k = e;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    k >>= 1;
    if (sgn(k) > 0) base = base * base;
  }
  return acc;
}

bool operator==(const CycElem& a, const CycElem& b) {
  check_same_ring(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::optional<unsigned long> is_root_of_unity_cyc(const CycElem& x) {
  if (x.is_zero()) throw std::invalid_argument("is_root_of_unity_cyc: zero element");
  unsigned long n = x.ring().level();
  unsigned long bound = std::lcm(2UL, n);
  if (!x.pow(Int(bound)).is_one()) return std::nullopt;
  unsigned long ord = bound;
  for (unsigned long l : prime_factors(bound)) {
    while (ord % l == 0 && x.pow(Int(ord / l)).is_one()) ord /= l;
  }
  return ord;
}

}  // namespace ultra
