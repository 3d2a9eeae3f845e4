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

#include "ultra/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "ultra/bounds.hpp"

namespace ultra {

EnumerationP enumerate_charp(const Laurent<RatFun>& f, unsigned long smax) {
  const FieldSpec& ks = f.field();
  if (ks.characteristic == 0)
    throw std::invalid_argument("enumerate_charp: characteristic-zero input");
  if (smax < 1) throw std::invalid_argument("enumerate_charp: smax must be >= 1");
  if (pow_int(ks.p, smax) > (Int(1) << 24))
    throw std::invalid_argument("enumerate_charp: p^smax beyond the 2^24 horizon");
  unsigned long p = ks.characteristic;

  EnumerationP out;
  out.p = ks.p;
  out.smax = smax;
  if (f.is_zero()) return out;

  // Clear denominators once: f = (sum_n P_n(t) X^n) / den with den the monic
  // lcm of the coefficient denominators. f(z) is then a constant c exactly
  // when the numerator polynomial evaluates to c * den coefficientwise.
  FpPoly den = FpPoly::constant(p, 1);
  for (const auto& [n, c] : f.terms()) {
    FpPoly g = FpPoly::gcd(den, c.den());
    FpPoly q(p), r(p);
    FpPoly::divrem(den, g, q, r);
    den = (q * c.den()).made_monic();
  }
  struct Term {
    Int n;
    FpPoly poly;
  };
  std::vector<Term> terms;
  long degmax = -1;
  for (const auto& [n, c] : f.terms()) {
    FpPoly q(p), r(p);
    FpPoly::divrem(den, c.den(), q, r);
    if (!r.is_zero()) throw std::logic_error("enumerate_charp: denominator lcm failed");
    terms.push_back({n, c.num() * q});
    degmax = std::max(degmax, terms.back().poly.degree());
  }

  for (unsigned long s = 1; s <= smax; ++s) {
    Tower tw = build_tower(p, static_cast<unsigned>(s));
    Int ord = group_order(tw);
    std::vector<Int> red(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
      Int r = terms[i].n % ord;
      if (r < 0) r += ord;
      red[i] = r;
    }
    // z has minimal field F_{p^s} iff no maximal proper subfield fixes it.
    std::vector<Int> frob;
    for (unsigned long l : prime_factors(s)) frob.push_back(pow_int(Int(p), s / l));

    std::vector<unsigned long> vec(s, 0);
    while (true) {
      size_t i = 0;
      while (i < s && ++vec[i] == p) vec[i++] = 0;
      if (i == s) break;
      FFElem z(tw, FpPoly(p, vec));
      bool exact = true;
      for (const Int& e : frob) {
        if (z.pow(e) == z) {
          exact = false;
          break;
        }
      }
      if (!exact) continue;

      std::vector<FFElem> acc(static_cast<size_t>(std::max(degmax, 0L)) + 1, FFElem::zero(tw));
      for (size_t idx = 0; idx < terms.size(); ++idx) {
        FFElem zp = z.pow(red[idx]);
        const FpPoly& num = terms[idx].poly;
        for (long j = 0; j <= num.degree(); ++j) {
          unsigned long cj = num.coeff(static_cast<size_t>(j));
          if (cj) acc[static_cast<size_t>(j)] = acc[static_cast<size_t>(j)] + zp.scaled(cj);
        }
      }
      long degnum = -1;
      for (long j = static_cast<long>(acc.size()) - 1; j >= 0; --j) {
        if (!acc[static_cast<size_t>(j)].is_zero()) {
          degnum = j;
          break;
        }
      }
      if (degnum < 0) continue;             // f(z) = 0
      if (degnum != den.degree()) continue; // degree mismatch with c * den
      FFElem c = acc[static_cast<size_t>(degnum)];
      bool constant = true;
      for (long j = 0; j <= degnum; ++j) {
        if (acc[static_cast<size_t>(j)] != c.scaled(den.coeff(static_cast<size_t>(j)))) {
          constant = false;
          break;
        }
      }
      if (!constant) continue;

      out.records.push_back(TorsionRecordP{
          s, z.value(), to_ulong(multiplicative_order(z)), c.value(),
          to_ulong(multiplicative_order(c))});
      ++out.per_level[s];
    }
  }
  return out;
}

Int Enumeration0::total() const {
  Int t = 0;
  for (const auto& r : records) t += Int(r.multiplicity);
  return t;
}

namespace {

unsigned long p_part_of(unsigned long n, const Int& p) {
  if (p > Int(n)) return 1;
  unsigned long pl = to_ulong(p);
  unsigned long part = 1;
  while (n % pl == 0) {
    n /= pl;
    part *= pl;
  }
  return part;
}

}  // namespace

Enumeration0 enumerate_char0(const Laurent<Rat>& f, unsigned long nmax, const Int& pk_cap,
                             unsigned long phi_ceiling) {
  const FieldSpec& ks = f.field();
  if (ks.characteristic != 0)
    throw std::invalid_argument("enumerate_char0: positive-characteristic input");
  if (nmax < 1) throw std::invalid_argument("enumerate_char0: nmax must be >= 1");
  if (pk_cap < 1) throw std::invalid_argument("enumerate_char0: pk_cap must be >= 1");

  Enumeration0 out;
  out.nmax = nmax;
  out.pk_cap = pk_cap;

  // The memory guard runs before any ring is built, so an oversized horizon
  // fails fast instead of mid-enumeration.
  std::vector<unsigned long> levels;
  for (unsigned long n = 1; n <= nmax; ++n) {
    if (Int(p_part_of(n, ks.p)) > pk_cap) continue;
    if (euler_phi(n) > phi_ceiling)
      throw std::invalid_argument("enumerate_char0: phi(" + std::to_string(n) +
                                  ") exceeds the ceiling " + std::to_string(phi_ceiling));
    levels.push_back(n);
  }
  if (f.is_zero()) return out;

  for (unsigned long n : levels) {
    auto ring = CycRing::make(n);
    CycElem val = ring->zero();
    for (const auto& [e, c] : f.terms()) val = val + ring->root_power(e).scaled(c);
    if (val.is_zero()) continue;
    if (auto ord = is_root_of_unity_cyc(val)) {
      TorsionRecord0 rec;
      rec.n = n;
      rec.j = 1;
      rec.value_order = *ord;
      rec.multiplicity = euler_phi(n);
      out.records.push_back(rec);
    }
  }
  return out;
}

namespace {

// Inverse of a mod m by the extended Euclidean algorithm; gcd(a, m) must
// be 1. m = 1 returns 0.
unsigned long egcd_inv(unsigned long a, unsigned long m) {
  if (m == 1) return 0;
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
  }
  if (r != 1) throw std::logic_error("egcd_inv: arguments not coprime");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<unsigned long>(t);
}

// Residue of smallest absolute value; the tie at m/2 resolves positive.
long minimal_rep(unsigned long r, unsigned long m) {
  if (m == 1) return 0;
  return (2 * r <= m) ? static_cast<long>(r) : static_cast<long>(r) - static_cast<long>(m);
}

struct SearchPlan {
  unsigned long n = 1;
  unsigned long long n3 = 1;               // n^3, the box bound (e*|k|)^4 <= n^3
  std::vector<unsigned long> divisors;     // ascending, pre-filtered to e^4 <= n^3
  std::vector<unsigned long> units;        // u in [1, n], gcd(u, n) = 1
  std::vector<unsigned long> unit_inv_n;   // u^-1 mod n, aligned with units
};

SearchPlan make_plan(unsigned long n) {
  SearchPlan plan;
  plan.n = n;
  plan.n3 = 1ull * n * n * n;
  for (unsigned long e : divisors_of(n)) {
    unsigned long long e4 = 1ull * e * e * e * e;
    if (e4 <= plan.n3) plan.divisors.push_back(e);
  }
  for (unsigned long u = 1; u <= n; ++u) {
    if (std::gcd(u, n) == 1) {
      plan.units.push_back(u);
      plan.unit_inv_n.push_back(egcd_inv(u, n));
    }
  }
  return plan;
}

std::optional<RouDecomposition> search_witness(const SearchPlan& plan, unsigned long a1,
                                               unsigned long a2) {
  unsigned long n = plan.n;
  for (unsigned long e : plan.divisors) {
    unsigned long m = n / e;
    bool found = false;
    unsigned long long best_score = std::numeric_limits<unsigned long long>::max();
    unsigned long best_u = 0;
    long best_k1 = 0, best_k2 = 0;
    for (size_t i = 0; i < plan.units.size(); ++i) {
      unsigned long u = plan.units[i];
      unsigned long uinv = (e == 1) ? plan.unit_inv_n[i] : egcd_inv(u % m, m);
      unsigned long r1 = (m == 1) ? 0 : (a1 * uinv) % m;
      unsigned long r2 = (m == 1) ? 0 : (a2 * uinv) % m;
      long k1 = minimal_rep(r1, m);
      long k2 = minimal_rep(r2, m);
      unsigned long long ke1 = 1ull * std::labs(k1) * e;
      unsigned long long ke2 = 1ull * std::labs(k2) * e;
      if (ke1 * ke1 * ke1 * ke1 > plan.n3 || ke2 * ke2 * ke2 * ke2 > plan.n3) continue;
      unsigned long long score =
          static_cast<unsigned long long>(std::labs(k1)) + std::labs(k2);
      if (score < best_score) {
        best_score = score;
        best_u = u;
        best_k1 = k1;
        best_k2 = k2;
        found = true;
      }
    }
    if (found) {
      RouDecomposition d;
      d.n = n;
      d.e = e;
      d.u = best_u;
      d.k1 = best_k1;
      d.k2 = best_k2;
      auto leftover = [&](unsigned long a, long k) {
        long long v = static_cast<long long>(a) - static_cast<long long>(best_u) * k;
        v %= static_cast<long long>(n);
        if (v < 0) v += static_cast<long long>(n);
        if (v % static_cast<long long>(m) != 0)
          throw std::logic_error("decompose_pair: congruence residue not divisible");
        return static_cast<unsigned long>(v / static_cast<long long>(m));
      };
      d.t1 = leftover(a1, best_k1);
      d.t2 = leftover(a2, best_k2);
      return d;
    }
  }
  return std::nullopt;
}

}  // namespace

RouDecomposition decompose_pair(long a1, long a2, unsigned long n) {
  if (n < 1) throw std::invalid_argument("decompose_pair: n must be >= 1");
  if (n > 65535) throw std::invalid_argument("decompose_pair: n beyond desk scale");
  long long nn = static_cast<long long>(n);
  unsigned long aa1 = static_cast<unsigned long>(((a1 % nn) + nn) % nn);
  unsigned long aa2 = static_cast<unsigned long>(((a2 % nn) + nn) % nn);
  if (std::gcd(std::gcd(aa1, aa2), n) != 1)
    throw std::invalid_argument("decompose_pair: pair must have order exactly n");
  SearchPlan plan = make_plan(n);
  auto d = search_witness(plan, aa1, aa2);
  if (!d)
    throw inconsistency_error("decompose_pair: no witness in the Lemma box for (" +
                              std::to_string(a1) + ", " + std::to_string(a2) + ", " +
                              std::to_string(n) + ")");
  return *d;
}

DecompositionSweep verify_decomposition_exhaustive(unsigned long nmax) {
  if (nmax < 1 || nmax > 300)
    throw std::invalid_argument("verify_decomposition_exhaustive: nmax must be in [1, 300]");
  DecompositionSweep sweep;
  sweep.nmax = nmax;
  // Exact maximization of e / n^{3/4} and |k_i|e / n^{3/4} by cross-
  // multiplied fourth powers; doubles only at the very end.
  unsigned long long be4 = 0, ben3 = 1;
  unsigned long long bk4 = 0, bkn3 = 1;
  for (unsigned long n = 1; n <= nmax && sweep.pass; ++n) {
    SearchPlan plan = make_plan(n);
    for (unsigned long a1 = 0; a1 < n && sweep.pass; ++a1) {
      for (unsigned long a2 = 0; a2 < n; ++a2) {
        if (std::gcd(std::gcd(a1, a2), n) != 1) continue;
        ++sweep.pairs;
        auto d = search_witness(plan, a1, a2);
        bool ok = d.has_value();
        if (ok) {
          unsigned long m = n / d->e;
          auto congruent = [&](unsigned long a, long k, unsigned long t) {
            long long v = static_cast<long long>(d->u) * k +
                          static_cast<long long>(m) * static_cast<long long>(t) -
                          static_cast<long long>(a);
            return v % static_cast<long long>(n) == 0;
          };
          ok = n % d->e == 0 && d->t1 < d->e && d->t2 < d->e &&
               congruent(a1, d->k1, d->t1) && congruent(a2, d->k2, d->t2);
        }
        if (!ok) {
          sweep.pass = false;
          sweep.failure = DecompositionFailure{static_cast<long>(a1), static_cast<long>(a2), n};
          break;
        }
        unsigned long long e4 = 1ull * d->e * d->e * d->e * d->e;
        if (e4 * ben3 > be4 * plan.n3) {
          be4 = e4;
          ben3 = plan.n3;
        }
        unsigned long long kmax = static_cast<unsigned long long>(
            std::max(std::labs(d->k1), std::labs(d->k2)));
        unsigned long long ke = kmax * d->e;
        unsigned long long ke4 = ke * ke * ke * ke;
        if (ke4 * bkn3 > bk4 * plan.n3) {
          bk4 = ke4;
          bkn3 = plan.n3;
        }
      }
    }
  }
  sweep.max_e_ratio = std::pow(static_cast<double>(be4) / static_cast<double>(ben3), 0.25);
  sweep.max_k_ratio = std::pow(static_cast<double>(bk4) / static_cast<double>(bkn3), 0.25);
  return sweep;
}

}  // namespace ultra
