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

#include <map>
#include <string>

#include "ultra/fp.hpp"
#include "ultra/ints.hpp"
#include "ultra/valuation.hpp"

namespace ultra {

// The ground field: a non-archimedean local field given by residue
// characteristic p, residue degree f (residue cardinality q = p^f) and, in
// characteristic zero, ramification index e. Characteristic p fields are
// F_p(t) with the t-adic valuation and have no ramification parameter.
struct FieldSpec {
  unsigned long characteristic = 0;  // 0, or p in characteristic p
  Int p = 2;
  unsigned residue_deg = 1;
  unsigned ram_index = 1;

  static FieldSpec char0(const Int& p, unsigned residue_deg = 1, unsigned ram_index = 1);
  static FieldSpec charp(unsigned long p, unsigned residue_deg = 1);

  Int q() const { return pow_int(p, static_cast<unsigned long>(residue_deg)); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.characteristic == b.characteristic && a.p == b.p &&
           a.residue_deg == b.residue_deg && a.ram_index == b.ram_index;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct spec_mismatch_error : std::invalid_argument {
  explicit spec_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

// Expansion budget shared across the multiplications of one computation.
// Charged one unit per coefficient product; exceeding the limit throws.
struct Budget {
  Int limit;
  Int used = 0;

  explicit Budget(Int l) : limit(std::move(l)) {}
  void charge(const Int& ops) {
    used += ops;
    if (used > limit)
      throw budget_error("expansion budget exceeded (" + to_string(used) + " > " +
                         to_string(limit) + " coefficient products)");
  }
};

inline constexpr long kDefaultExpansionBudget = 2000000;

// Coefficient-domain glue shared by the two instantiations.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rat> {
  static constexpr unsigned long field_characteristic = 0;
  static bool is_zero(const Rat& c) { return sgn(c) == 0; }
  static Rat zero(const FieldSpec&) { return Rat(0); }
  static Rat one(const FieldSpec&) { return Rat(1); }
  static Valuation val(const FieldSpec& ks, const Rat& c) { return vp(c, ks.p); }
  static void check_compatible(const FieldSpec& ks, const Rat&) {
    if (ks.characteristic != 0)
      throw spec_mismatch_error("rational coefficients require a characteristic-zero field");
  }
  static std::string str(const Rat& c) { return to_string(c); }
};

template <>
struct coeff_traits<RatFun> {
  static constexpr unsigned long field_characteristic = 1;  // nonzero marker
  static bool is_zero(const RatFun& c) { return c.is_zero(); }
  static RatFun zero(const FieldSpec& ks) { return RatFun(ks.characteristic); }
  static RatFun one(const FieldSpec& ks) { return RatFun::constant(ks.characteristic, 1); }
  static Valuation val(const FieldSpec&, const RatFun& c) { return vt(c); }
  static void check_compatible(const FieldSpec& ks, const RatFun& c) {
    if (ks.characteristic == 0)
      throw spec_mismatch_error("rational-function coefficients require characteristic p");
    if (c.p() != ks.characteristic)
      throw spec_mismatch_error("coefficient prime differs from the field characteristic");
  }
  static std::string str(const RatFun& c) { return c.str(); }
};

/* Finite-support Laurent polynomial over the field described by a FieldSpec.
 * Exponents are arbitrary-precision integers, the table stores only nonzero
 * coefficients, and every mutation revalidates domain compatibility. */
template <class C>
class Laurent {
 public:
  explicit Laurent(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.characteristic == 0 && coeff_traits<C>::field_characteristic != 0)
      throw spec_mismatch_error("Laurent: coefficient domain does not match field");
    if (spec_.characteristic != 0 && coeff_traits<C>::field_characteristic == 0)
      throw spec_mismatch_error("Laurent: coefficient domain does not match field");
  }

  const FieldSpec& field() const { return spec_; }
  const std::map<Int, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  void set(const Int& n, C c) {
    if (coeff_traits<C>::is_zero(c)) {
      terms_.erase(n);
      return;
    }
    coeff_traits<C>::check_compatible(spec_, c);
    terms_.insert_or_assign(n, std::move(c));
  }

  void add_to(const Int& n, const C& c) {
    if (coeff_traits<C>::is_zero(c)) return;
    coeff_traits<C>::check_compatible(spec_, c);
    auto it = terms_.find(n);
    if (it == terms_.end()) {
      terms_.emplace(n, c);
    } else {
      it->second = it->second + c;
      if (coeff_traits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const Int& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? coeff_traits<C>::zero(spec_) : it->second;
  }

  const Int& min_exp() const {
    if (terms_.empty()) throw std::domain_error("Laurent::min_exp: zero series");
    return terms_.begin()->first;
  }
  const Int& max_exp() const {
    if (terms_.empty()) throw std::domain_error("Laurent::max_exp: zero series");
    return terms_.rbegin()->first;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    check_same_spec(a, b, "Laurent::operator+");
    Laurent r = a;
    for (const auto& [n, c] : b.terms_) r.add_to(n, c);
    return r;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  Laurent operator-() const {
    Laurent r(spec_);
    for (const auto& [n, c] : terms_) r.terms_.emplace(n, negate(c));
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    check_same_spec(a, b, "Laurent::operator*");
    Laurent r(a.spec_);
    for (const auto& [n, cn] : a.terms_)
      for (const auto& [m, cm] : b.terms_) r.add_to(n + m, cn * cm);
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

 private:
  static C negate(const C& c) { return -c; }
  static void check_same_spec(const Laurent& a, const Laurent& b, const char* what) {
    if (a.spec_ != b.spec_)
      throw spec_mismatch_error(std::string(what) + ": field specs differ");
  }

  FieldSpec spec_;
  std::map<Int, C> terms_;
};

using LaurentQ = Laurent<Rat>;
using LaurentF = Laurent<RatFun>;

template <class C>
Laurent<C> constant_series(const FieldSpec& spec, const C& c) {
  Laurent<C> r(spec);
  r.set(0, c);
  return r;
}

template <class C>
Laurent<C> monomial(const FieldSpec& spec, const Int& n, const C& c) {
  Laurent<C> r(spec);
  r.set(n, c);
  return r;
}

// f(X^k) for k != 0; an exact relabeling n -> n*k of the support.
template <class C>
Laurent<C> substitute_power(const Laurent<C>& f, const Int& k) {
  if (sgn(k) == 0)
    throw std::invalid_argument("substitute_power: k must be nonzero");
  Laurent<C> r(f.field());
  for (const auto& [n, c] : f.terms()) r.set(n * k, c);
  return r;
}

template <class C>
Laurent<C> mul_budgeted(const Laurent<C>& a, const Laurent<C>& b, Budget& budget) {
  budget.charge(Int(a.support_size()) * Int(b.support_size()));
  return a * b;
}

// f^m by binary exponentiation, m >= 0; pow(f, 0) = 1 including f = 0. Each
// constituent multiplication charges |support(a)| * |support(b)| against the
// budget.
template <class C>
Laurent<C> pow(const Laurent<C>& f, const Int& m, Budget& budget) {
  if (sgn(m) < 0) throw std::invalid_argument("pow: negative exponent");
  Laurent<C> acc = constant_series(f.field(), coeff_traits<C>::one(f.field()));
  if (sgn(m) == 0) return acc;
  Laurent<C> base = f;
  Int k = m;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = mul_budgeted(acc, base, budget);
    k >>= 1;
    if (sgn(k) > 0) base = mul_budgeted(base, base, budget);
  }
  return acc;
}

template <class C>
Laurent<C> pow(const Laurent<C>& f, const Int& m) {
  Budget budget{Int(kDefaultExpansionBudget)};
  return pow(f, m, budget);
}

// f(X)^q for q a power of the characteristic, computed without expansion:
// coefficients are raised to the q and exponents multiplied by q.
Laurent<RatFun> frobenius_pow(const Laurent<RatFun>& f, const Int& q);

}  // namespace ultra
