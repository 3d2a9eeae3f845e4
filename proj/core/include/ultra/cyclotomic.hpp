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

#include <memory>
#include <optional>
#include <vector>

#include "ultra/ints.hpp"

namespace ultra {

unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors_of(unsigned long n);
std::vector<unsigned long> prime_factors(unsigned long n);

// Coefficients of the N-th cyclotomic polynomial, ascending degree, computed
// by exact division of X^N - 1 by the lower-level cyclotomic polynomials.
std::vector<Int> cyclo_poly(unsigned long n);

class CycElem;

// Q(zeta_N) presented as Q[X]/(Phi_N), with a precomputed table of the
// reductions of X^e for 0 <= e < N so that series evaluation only reduces
// exponents mod N and sums table rows.
class CycRing : public std::enable_shared_from_this<CycRing> {
 public:
  static std::shared_ptr<const CycRing> make(unsigned long n);

  unsigned long level() const { return n_; }
  size_t degree() const { return deg_; }
  const std::vector<Int>& modulus() const { return phi_; }

  CycElem zero() const;
  CycElem one() const;
  CycElem root_power(const Int& e) const;  // class of X^(e mod N)
  CycElem from_coords(std::vector<Rat> c) const;

 private:
  explicit CycRing(unsigned long n);
  friend class CycElem;
  unsigned long n_;
  std::vector<Int> phi_;
  size_t deg_;
  std::vector<std::vector<Rat>> xpow_;
};

class CycElem {
 public:
  const CycRing& ring() const { return *ring_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  friend CycElem operator+(const CycElem& a, const CycElem& b);
  friend CycElem operator-(const CycElem& a, const CycElem& b);
  friend CycElem operator*(const CycElem& a, const CycElem& b);
  CycElem scaled(const Rat& r) const;
  CycElem pow(const Int& e) const;  // e >= 0
  friend bool operator==(const CycElem& a, const CycElem& b);
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

 private:
  friend class CycRing;
  CycElem(std::shared_ptr<const CycRing> ring, std::vector<Rat> c);
  std::shared_ptr<const CycRing> ring_;
  std::vector<Rat> c_;
};

// Exact multiplicative order of x when x is a root of unity, nullopt
// otherwise. Torsion of Q(zeta_N) has order dividing lcm(2, N), so one power
// decides membership. x = 0 is rejected.
std::optional<unsigned long> is_root_of_unity_cyc(const CycElem& x);

}  // namespace ultra
