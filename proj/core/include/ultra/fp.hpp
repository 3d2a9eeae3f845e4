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

#pragma once

#include <string>
#include <vector>

#include "ultra/ints.hpp"
#include "ultra/valuation.hpp"

namespace ultra {

/* Dense polynomials over the prime field F_p, p a small prime. Coefficient
 * vector is stored lowest degree first with no trailing zeros; the zero
 * polynomial is the empty vector. All operands of a binary operation must
 * share the same p. */
class FpPoly {
 public:
  explicit FpPoly(unsigned long p);
  FpPoly(unsigned long p, std::vector<unsigned long> coeffs);

  static FpPoly constant(unsigned long p, unsigned long a);
  static FpPoly var(unsigned long p);

  unsigned long p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  // Index of the lowest nonzero coefficient; rejects the zero polynomial.
  long ord() const;
  unsigned long coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  unsigned long leading() const;
  bool is_monic() const;
  const std::vector<unsigned long>& coeffs() const { return c_; }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly operator-() const;
  friend bool operator==(const FpPoly& a, const FpPoly& b);
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

  // Quotient and remainder; the divisor must be nonzero.
  static void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
  FpPoly shifted(long by) const;  // multiply by t^by, by >= 0

  // Monic gcd; gcd(0, 0) = 0.
  static FpPoly gcd(const FpPoly& a, const FpPoly& b);
  FpPoly made_monic() const;

  FpPoly pow(const Int& e) const;
  // a(t)^q for q a power of p: spreads exponents by q, since the prime-field
  // coefficients are Frobenius-fixed.
  FpPoly frobenius_pow(const Int& q) const;

  std::string str() const;  // e.g. "t^3 + 2t + 1", zero prints "0"
  static FpPoly parse(unsigned long p, const std::string& text);

 private:
  void trim();
  unsigned long p_;
  std::vector<unsigned long> c_;
};

unsigned long inv_mod(unsigned long a, unsigned long p);

/* Rational functions over F_p in the uniformizer t, kept reduced: gcd of
 * numerator and denominator is 1, the denominator is monic, zero is 0/1. */
class RatFun {
 public:
  explicit RatFun(unsigned long p);
  RatFun(FpPoly num, FpPoly den);

  static RatFun constant(unsigned long p, unsigned long a);
  static RatFun t(unsigned long p);

  unsigned long p() const { return num_.p(); }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun operator-() const;
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun pow(const Int& e) const;  // e >= 0
  RatFun frobenius_pow(const Int& q) const;

  std::string str() const;  // "num" or "(num)/(den)"
  // Grammar: poly or poly "/" poly, each optionally parenthesized; terms are
  // digit coefficients (< p), "t", and "^" powers joined by "+".
  static RatFun parse(unsigned long p, const std::string& text);

 private:
  void normalize();
  FpPoly num_, den_;
};

// t-adic valuation: ord(num) - ord(den), infinity for 0.
Valuation vt(const RatFun& x);

}  // namespace ultra
