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

#include <initializer_list>
#include <random>
#include <utility>

#include "ultra/laurent.hpp"

namespace ultra_test {

using namespace ultra;

// f over Q with the p-adic valuation, from (exponent, "a/b") pairs.
inline Laurent<Rat> qser(long p, std::initializer_list<std::pair<long, const char*>> terms,
                         unsigned residue_deg = 1, unsigned ram_index = 1) {
  Laurent<Rat> f(FieldSpec::char0(Int(p), residue_deg, ram_index));
  for (const auto& [n, c] : terms) f.set(Int(n), parse_rat(c));
  return f;
}

// f over F_p(t), from (exponent, coefficient-text) pairs.
inline Laurent<RatFun> fser(unsigned long p,
                            std::initializer_list<std::pair<long, const char*>> terms,
                            unsigned residue_deg = 1) {
  Laurent<RatFun> f(FieldSpec::charp(p, residue_deg));
  for (const auto& [n, c] : terms) f.set(Int(n), RatFun::parse(p, c));
  return f;
}

// Random nonzero rational with a controlled p-power factor, so draws spread
// across valuations instead of clustering at 0.
inline Rat random_rat(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> dnum(-20, 20);
  std::uniform_int_distribution<long> dden(1, 20);
  std::uniform_int_distribution<long> dpow(-3, 3);
  long a = 0;
  while (a == 0) a = dnum(rng);
  Rat r(Int(a), Int(dden(rng)));
  r.canonicalize();
  long e = dpow(rng);
  Rat pe = Rat(Int(p));
  for (long i = 0; i < (e < 0 ? -e : e); ++i) {
    if (e < 0) r = r / pe;
    else r = r * pe;
  }
  return r;
}

inline FpPoly random_fp_poly(std::mt19937_64& rng, unsigned long p, long maxdeg,
                             bool nonzero) {
  std::uniform_int_distribution<long> ddeg(0, maxdeg);
  std::uniform_int_distribution<unsigned long> dc(0, p - 1);
  for (;;) {
    std::vector<unsigned long> c(static_cast<size_t>(ddeg(rng)) + 1);
    for (auto& x : c) x = dc(rng);
    FpPoly g(p, std::move(c));
    if (!nonzero || !g.is_zero()) return g;
  }
}

inline RatFun random_ratfun(std::mt19937_64& rng, unsigned long p) {
  FpPoly num = random_fp_poly(rng, p, 2, true);
  FpPoly den = random_fp_poly(rng, p, 2, true);
  // A stray power of t moves the valuation off zero now and then.
  std::uniform_int_distribution<long> dpow(-2, 2);
  long e = dpow(rng);
  if (e > 0) num = num.shifted(e);
  if (e < 0) den = den.shifted(-e);
  return RatFun(num, den);
}

inline Laurent<Rat> random_qser(std::mt19937_64& rng, long p, int max_support = 6,
                                long max_exp = 5) {
  Laurent<Rat> f(FieldSpec::char0(Int(p)));
  std::uniform_int_distribution<int> dsize(1, max_support);
  std::uniform_int_distribution<long> dexp(-max_exp, max_exp);
  int size = dsize(rng);
  while (f.support_size() < static_cast<size_t>(size))
    f.set(Int(dexp(rng)), random_rat(rng, p));
  return f;
}

inline Laurent<RatFun> random_fser(std::mt19937_64& rng, unsigned long p,
                                   int max_support = 6, long max_exp = 5) {
  Laurent<RatFun> f(FieldSpec::charp(p));
  std::uniform_int_distribution<int> dsize(1, max_support);
  std::uniform_int_distribution<long> dexp(-max_exp, max_exp);
  int size = dsize(rng);
  while (f.support_size() < static_cast<size_t>(size))
    f.set(Int(dexp(rng)), random_ratfun(rng, p));
  return f;
}

}  // namespace ultra_test
