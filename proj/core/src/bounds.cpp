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

#include "ultra/bounds.hpp"

namespace ultra {

PPartCap p_part_cap(const Int& cf, unsigned long ram_index, const Int& p) {
  if (cf < 0) throw std::invalid_argument("p_part_cap: negative cf");
  if (p < 2) throw std::invalid_argument("p_part_cap: p must be at least 2");
  PPartCap out;
  if (cf == 0) {
    out.cap = 0;
    out.k = 0;
    return out;
  }
  Int base = 2 * cf * Int(ram_index);
  out.cap = pow_int(base, 4);
  // smallest k with p^(k+1) > cap
  Int pk = p;
  unsigned long k = 0;
  while (pk <= out.cap) {
    pk *= p;
    ++k;
  }
  out.k = k;
  return out;
}

Laurent<RatFun> aux_series_charp(const Laurent<RatFun>& f, const Int& q) {
  return frobenius_pow(f, q) - substitute_power(f, q);
}

AuxSeries aux_series_char0(const Laurent<Rat>& f, const Int& q, unsigned long k, Budget& budget) {
  if (f.is_zero()) throw std::invalid_argument("aux_series_char0: zero series");
  const FieldSpec& ks = f.field();
  Int pk = pow_int(ks.p, k);
  Int e1 = q * pk;  // exponent on the plain power side
  AuxSeries out;

  NewtonData base = newton_at(f, Rat(0));
  if (base.vmin != Valuation(Rat(0))) {
    // One side dominates every coefficient of the other: the plain power has
    // uniform level e1*vmin, the substituted one pk*vmin. Endpoint indices
    // scale by e1 on the dominant side either way, since substitution by q
    // multiplies exponents by q before the pk-th power.
    Rat vm = base.vmin.value();
    Rat v1 = Rat(e1) * vm;
    Rat v2 = Rat(pk) * vm;
    Rat dom = std::min(v1, v2);
    out.shortcut = true;
    out.newton.vmin = Valuation(dom);
    out.newton.kidx = e1 * base.kidx;
    out.newton.Kidx = e1 * base.Kidx;
    out.newton.dominant.push_back(out.newton.kidx);
    if (out.newton.Kidx != out.newton.kidx) out.newton.dominant.push_back(out.newton.Kidx);
    return out;
  }

  Laurent<Rat> lhs = pow(f, e1, budget);
  Laurent<Rat> rhs = pow(substitute_power(f, q), pk, budget);
  Laurent<Rat> a = lhs - rhs;
  if (a.is_zero()) {
    throw inconsistency_error("aux_series_char0: auxiliary series vanished for non-special input");
  }
  out.newton = newton_at(a, Rat(0));
  out.series = std::move(a);
  return out;
}

BoundReport<RatFun> bound_charp(const Laurent<RatFun>& f) {
  auto verdict = is_special(f);
  if (verdict.verdict != Speciality::NotSpecial) {
    throw std::invalid_argument("bound_charp: input is special, no finite bound applies");
  }
  BoundReport<RatFun> rep;
  rep.cf_report = compute_cf(f);
  if (rep.cf_report.cf == 0) {
    rep.m = Int(0);
    rep.bound = Int(0);
    return rep;
  }
  Int q = f.field().q();
  Laurent<RatFun> g = aux_series_charp(f, q);
  if (g.is_zero()) {
    throw inconsistency_error("bound_charp: residual vanished but classifier reported not-special");
  }
  rep.aux_newton = newton_at(g, Rat(0));
  rep.m = rep.aux_newton->width();
  rep.bound = *rep.m;
  return rep;
}

BoundReport<Rat> bound_char0(const Laurent<Rat>& f, Budget* budget) {
  auto verdict = is_special(f);
  if (verdict.verdict != Speciality::NotSpecial) {
    throw std::invalid_argument("bound_char0: input is special, no finite bound applies");
  }
  BoundReport<Rat> rep;
  rep.cf_report = compute_cf(f);
  const FieldSpec& ks = f.field();
  PPartCap cap = p_part_cap(rep.cf_report.cf, ks.ram_index, ks.p);
  rep.p_part_cap = cap.cap;
  rep.k = cap.k;
  if (rep.cf_report.cf == 0) {
    rep.m = Int(0);
    rep.bound = Int(0);
    return rep;
  }
  Budget local{Int(kDefaultExpansionBudget)};
  Budget& bud = budget ? *budget : local;
  try {
    AuxSeries aux = aux_series_char0(f, ks.q(), cap.k, bud);
    rep.aux_newton = aux.newton;
    rep.shortcut_used = aux.shortcut;
    rep.m = aux.newton.width();
    rep.bound = pow_int(ks.p, cap.k) * *rep.m;
  } catch (const budget_error& e) {
    rep.expand_failed = true;
    rep.error = e.what();
  }
  return rep;
}

Int cor_example_bound(const Int& p, unsigned long ram_index, const Int& n) {
  if (p < 2 || !is_probable_prime(p)) {
    throw std::invalid_argument("cor_example_bound: p must be prime");
  }
  if (ram_index < 1) throw std::invalid_argument("cor_example_bound: e must be positive");
  if (n < 1) throw std::invalid_argument("cor_example_bound: n must be positive");
  return Int(256) * pow_int(Int(ram_index), 8) * p * pow_int(n, 9);
}

}  // namespace ultra
