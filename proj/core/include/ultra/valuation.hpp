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

#include "ultra/ints.hpp"

namespace ultra {

// Additive valuation value: an exact rational or +infinity (the valuation of
// zero). Infinity compares greater than every finite value and absorbs
// addition, matching v(0) = inf and v(xy) = v(x) + v(y).
class Valuation {
 public:
  Valuation() : finite_(false) {}
  explicit Valuation(Rat v) : finite_(true), v_(std::move(v)) {}
  static Valuation infinity() { return Valuation(); }

  bool is_finite() const { return finite_; }
  const Rat& value() const {
    if (!finite_) throw std::domain_error("Valuation: value() of infinity");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Valuation(a.v_ + b.v_);
  }

  std::string str() const { return finite_ ? to_string(v_) : std::string("inf"); }

 private:
  bool finite_;
  Rat v_;
};

// p-adic valuation of an exact rational, by exact extraction of powers of p
// from numerator and denominator. p must be a prime >= 2 (checked for >= 2
// here; primality is enforced where field specs are built).
Valuation vp(const Rat& x, const Int& p);

}  // namespace ultra
