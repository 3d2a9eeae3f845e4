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

#include "ultra/finite_field.hpp"

namespace ultra {

namespace {

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) {
  FpPoly q(m.p()), r(m.p());
  FpPoly::divrem(a * b, m, q, r);
  return r;
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
  FpPoly acc = FpPoly::constant(m.p(), 1);
  FpPoly b(m.p()), r(m.p());
  FpPoly::divrem(base, m, b, r);
  b = r;
  Int k = e;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = mulmod(acc, b, m);
    k >>= 1;
    if (sgn(k) > 0) b = mulmod(b, b, m);
  }
  return acc;
}

std::vector<unsigned long> prime_factors_ulong(unsigned long n) {
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

}  // namespace

bool is_irreducible(const FpPoly& m) {
  long d = m.degree();
  if (d < 1) return false;
  unsigned long p = m.p();
  FpPoly x = FpPoly::var(p);
  // x^(p^d) == x (mod m), and x^(p^(d/l)) - x coprime to m for prime l | d.
  FpPoly q(p), xr(p);
  FpPoly::divrem(x, m, q, xr);
  if (powmod(x, pow_int(Int(p), static_cast<unsigned long>(d)), m) != xr) return false;
  for (unsigned long l : prime_factors_ulong(static_cast<unsigned long>(d))) {
    FpPoly y = powmod(x, pow_int(Int(p), static_cast<unsigned long>(d) / l), m) - xr;
    if (FpPoly::gcd(y, m).degree() != 0) return false;
  }
  return true;
}

Tower build_tower(unsigned long p, unsigned s) {
  if (s < 1 || s > 24) throw std::invalid_argument("build_tower: s must be in [1, 24]");
  // Candidates are monic of degree s; the lower coefficients count up like an
  // odometer with the constant term fastest.
  std::vector<unsigned long> low(s, 0);
  while (true) {
    std::vector<unsigned long> c(low);
    c.push_back(1);
    FpPoly m(p, std::move(c));
    if (is_irreducible(m)) return Tower{p, s, m};
    size_t i = 0;
    while (i < s && ++low[i] == p) low[i++] = 0;
    if (i == s)
      throw std::logic_error("build_tower: no irreducible polynomial found");
  }
}

FFElem::FFElem(Tower tower, FpPoly value) : tower_(std::move(tower)), value_(tower_.p) {
  if (value.p() != tower_.p)
    throw std::invalid_argument("FFElem: value over a different prime field");
  FpPoly q(tower_.p), r(tower_.p);
  FpPoly::divrem(value, tower_.modulus, q, r);
  value_ = r;
}

FFElem FFElem::zero(const Tower& t) { return FFElem(t, FpPoly(t.p)); }

FFElem FFElem::one(const Tower& t) { return FFElem(t, FpPoly::constant(t.p, 1)); }

FFElem FFElem::from_constant(const Tower& t, unsigned long a) {
  return FFElem(t, FpPoly::constant(t.p, a));
}

bool FFElem::is_one() const { return value_ == FpPoly::constant(tower_.p, 1); }

namespace {
void check_same_tower(const FFElem& a, const FFElem& b) {
  if (a.tower() != b.tower())
    throw std::invalid_argument("FFElem: operands from different towers");
}
}  // namespace

FFElem operator+(const FFElem& a, const FFElem& b) {
  check_same_tower(a, b);
  return FFElem(a.tower_, a.value_ + b.value_);
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  check_same_tower(a, b);
  return FFElem(a.tower_, a.value_ - b.value_);
}

FFElem operator*(const FFElem& a, const FFElem& b) {
  check_same_tower(a, b);
  return FFElem(a.tower_, mulmod(a.value_, b.value_, a.tower_.modulus));
}

bool operator==(const FFElem& a, const FFElem& b) {
  return a.tower_ == b.tower_ && a.value_ == b.value_;
}

FFElem FFElem::pow(const Int& e) const {
  if (sgn(e) < 0) throw std::invalid_argument("FFElem::pow: negative exponent");
  return FFElem(tower_, powmod(value_, e, tower_.modulus));
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw std::domain_error("FFElem::inverse: zero element");
  return pow(group_order(tower_) - 1);
}

FFElem FFElem::scaled(unsigned long c) const {
  return FFElem(tower_, value_ * FpPoly::constant(tower_.p, c));
}

std::string FFElem::str() const {
  if (value_.is_zero()) return "0";
  std::string out;
  for (long i = value_.degree(); i >= 0; --i) {
    unsigned long c = value_.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Int group_order(const Tower& t) { return pow_int(Int(t.p), static_cast<unsigned long>(t.s)) - 1; }

Int multiplicative_order(const FFElem& x) {
  if (x.is_zero()) throw std::domain_error("multiplicative_order: zero element");
  Int n = group_order(x.tower());
  if (!n.fits_ulong_p())
    throw std::overflow_error("multiplicative_order: tower too large");
  unsigned long nn = n.get_ui();
  Int ord = n;
  for (unsigned long l : prime_factors_ulong(nn)) {
    while (ord % l == 0 && x.pow(ord / l).is_one()) ord /= l;
  }
  return ord;
}

}  // namespace ultra
