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

#include <optional>

#include "ultra/classify.hpp"

namespace ultra {

// Disagreement between the structural classifier and an identity it should
// match; always a defect, never a data condition.
struct inconsistency_error : std::logic_error {
  explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

// Cap on the p-part of torsion orders: cap = (2*cf*e)^4 and k is minimal with
// p^(k+1) > cap. cf = 0 collapses both to zero.
struct PPartCap {
  Int cap;
  unsigned long k = 0;
};

PPartCap p_part_cap(const Int& cf, unsigned long ram_index, const Int& p);

// Newton data of the characteristic-zero auxiliary series
// A = f(X)^(q*p^k) - f(X^q)^(p^k) at slope 0. When vmin(f) != 0 one side
// dominates coefficientwise and vmin/kidx/Kidx follow from the power and
// substitution rules without expansion; the dominant set then carries the two
// provable endpoints only, and shortcut is set.
struct AuxSeries {
  NewtonData newton;
  bool shortcut = false;
  std::optional<Laurent<Rat>> series;  // expansion path only
};

AuxSeries aux_series_char0(const Laurent<Rat>& f, const Int& q, unsigned long k, Budget& budget);

// g = f(X)^q - f(X^q) over F_p(t), built from the Frobenius power.
Laurent<RatFun> aux_series_charp(const Laurent<RatFun>& f, const Int& q);

template <class C>
struct BoundReport {
  CfReport<C> cf_report;
  Int p_part_cap = 0;     // (2*cf*e)^4, characteristic zero only
  unsigned long k = 0;    // p-part exponent, characteristic zero only
  std::optional<NewtonData> aux_newton;
  std::optional<Int> m;       // unit-sphere zero count of the auxiliary series
  std::optional<Int> bound;   // p^k * m (char 0), m (char p); absent if expansion failed
  bool shortcut_used = false;
  bool expand_failed = false;
  std::string error;  // set when expand_failed
};

// Effective torsion bounds for non-special f. cf = 0 short-circuits to
// bound 0 in both characteristics: the unit-sphere minimum is then attained
// at a single index away from level zero, so |f(zeta)| != 1 on the sphere.
BoundReport<RatFun> bound_charp(const Laurent<RatFun>& f);
BoundReport<Rat> bound_char0(const Laurent<Rat>& f, Budget* budget = nullptr);

// Closed-form bound for integer Laurent polynomials scaled off the unit ball:
// 2^8 * e^8 * p * n^9.
Int cor_example_bound(const Int& p, unsigned long ram_index, const Int& n);

}  // namespace ultra
