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

#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ultra/torsion.hpp"

using namespace ultra;
using ultra_test::fser;
using ultra_test::qser;

namespace {

CycElem eval_root(const std::shared_ptr<const CycRing>& ring, const LaurentQ& f,
                  unsigned long j) {
  CycElem acc = ring->zero();
  for (const auto& [n, c] : f.terms())
    acc = acc + ring->root_power(Int(j) * n).scaled(c);
  return acc;
}

// Jordan totient J_2(n): pairs (a1, a2) mod n with gcd(a1, a2, n) = 1.
unsigned long long jordan2(unsigned long n) {
  unsigned long long out = static_cast<unsigned long long>(n) * n;
  for (unsigned long p : prime_factors(n)) out = out / (p * p) * (p * p - 1);
  return out;
}

}  // namespace

TEST_CASE("identity map hits every torsion point") {
  LaurentF f = fser(2, {{1, "1"}});
  EnumerationP e3 = enumerate_charp(f, 3);
  CHECK(e3.records.size() == 9);
  CHECK(e3.per_level == std::map<unsigned long, unsigned long>{{1, 1}, {2, 2}, {3, 6}});

  EnumerationP e6 = enumerate_charp(f, 6);
  CHECK(e6.records.size() == 105);
  CHECK(e6.per_level ==
        std::map<unsigned long, unsigned long>{{1, 1}, {2, 2}, {3, 6}, {4, 12}, {5, 30}, {6, 54}});
  for (const TorsionRecordP& r : e6.records) {
    CHECK(r.value == r.zeta);
    CHECK(r.value_order == r.zeta_order);
  }
}

TEST_CASE("odd polynomial with a kernel at the identity") {
  LaurentF f = fser(2, {{1, "1"}, {3, "1"}});
  EnumerationP e3 = enumerate_charp(f, 3);
  // f(1) = 0 drops the level-1 point; levels 2 and 3 survive whole.
  CHECK(e3.records.size() == 8);
  CHECK(e3.per_level == std::map<unsigned long, unsigned long>{{2, 2}, {3, 6}});
  CHECK(enumerate_charp(f, 6).records.size() == 104);
}

TEST_CASE("t-dependent values are never torsion") {
  CHECK(enumerate_charp(fser(2, {{0, "t"}, {1, "1"}}), 8).records.empty());

  EnumerationP one = enumerate_charp(fser(2, {{1, "t+1"}, {2, "t"}}), 8);
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].s == 1);
  CHECK(one.records[0].zeta == FpPoly::constant(2, 1));
  CHECK(one.records[0].zeta_order == 1);
  CHECK(one.records[0].value == FpPoly::constant(2, 1));
  CHECK(one.records[0].value_order == 1);
  CHECK(one.per_level == std::map<unsigned long, unsigned long>{{1, 1}});
}

TEST_CASE("enumeration horizon and argument guards") {
  LaurentF f = fser(2, {{1, "1"}});
  CHECK_THROWS_AS(enumerate_charp(f, 25), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_charp(fser(3, {{1, "1"}}), 16), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_charp(f, 0), std::invalid_argument);
}

TEST_CASE("char-0 enumeration of X + 2") {
  Enumeration0 e = enumerate_char0(qser(2, {{0, "2"}, {1, "1"}}), 100, Int(256));
  REQUIRE(e.records.size() == 1);
  CHECK(e.records[0].n == 2);
  CHECK(e.records[0].j == 1);
  CHECK(e.records[0].value_order == 1);
  CHECK(e.records[0].multiplicity == 1);
  CHECK(e.total() == Int(1));

  // An aggressive p-part cap keeps even levels out and with them the one hit.
  Enumeration0 odd = enumerate_char0(qser(2, {{0, "2"}, {1, "1"}}), 100, Int(1));
  CHECK(odd.records.empty());
}

TEST_CASE("unit-coefficient monomial maps levels onto levels") {
  Enumeration0 e = enumerate_char0(qser(2, {{3, "-1"}}), 12, Int(4096));
  CHECK(e.records.size() == 12);
  Int total(0);
  for (const TorsionRecord0& r : e.records) {
    CHECK(r.multiplicity == euler_phi(r.n));
    total += Int(r.multiplicity);
  }
  CHECK(e.total() == total);
  CHECK(e.total() == Int(46));
  for (const TorsionRecord0& r : e.records)
    if (r.n == 5) CHECK(r.value_order == 10);  // -zeta^3 pairs the signs in
}

TEST_CASE("series off the unit sphere never record") {
  CHECK(enumerate_char0(qser(2, {{1, "1/2"}}), 60, Int(64)).records.empty());
  CHECK(enumerate_char0(LaurentQ(FieldSpec::char0(Int(2))), 60, Int(64)).records.empty());
}

TEST_CASE("the phi ceiling trips before any ring is built") {
  LaurentQ f = qser(2, {{0, "2"}, {1, "1"}});
  CHECK_THROWS_AS(enumerate_char0(f, 263, Int(256)), std::invalid_argument);
  CHECK(enumerate_char0(f, 263, Int(256), 512).records.size() == 1);
  // The prescan also covers the zero series.
  CHECK_THROWS_AS(enumerate_char0(LaurentQ(FieldSpec::char0(Int(2))), 263, Int(256)),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_char0(f, 0, Int(4)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_char0(f, 10, Int(0)), std::invalid_argument);
}

TEST_CASE("one evaluation per level speaks for the whole orbit") {
  // Rational coefficients commute with the Galois action, so the records at
  // j = 1 must replicate across every primitive j with equal value orders.
  for (const LaurentQ& f :
       {qser(2, {{3, "-1"}}), qser(2, {{0, "2"}, {1, "1"}}), qser(3, {{-1, "1"}, {2, "1"}})}) {
    Enumeration0 e = enumerate_char0(f, 30, pow_int(Int(2), 20ul));
    std::map<unsigned long, unsigned long> recorded;
    for (const TorsionRecord0& r : e.records) recorded[r.n] = r.value_order;

    for (unsigned long n = 1; n <= 30; ++n) {
      auto ring = CycRing::make(n);
      for (unsigned long j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        CycElem v = eval_root(ring, f, j);
        bool hit = false;
        unsigned long ord = 0;
        if (!v.is_zero()) {
          if (auto o = is_root_of_unity_cyc(v)) {
            hit = true;
            ord = *o;
          }
        }
        CHECK(hit == (recorded.count(n) == 1));
        if (hit) CHECK(ord == recorded.at(n));
      }
    }
  }
}

TEST_CASE("pigeonhole witnesses for simple pairs") {
  RouDecomposition d = decompose_pair(1, 0, 5);
  CHECK(d.e == 1);
  CHECK(d.u == 1);
  CHECK(d.k1 == 1);
  CHECK(d.k2 == 0);
  CHECK(d.t1 == 0);
  CHECK(d.t2 == 0);

  d = decompose_pair(1, 3, 16);
  CHECK(d.e == 1);
  CHECK(d.u == 1);
  CHECK(d.k1 == 1);
  CHECK(d.k2 == 3);

  // Deterministic: the search order fixes the witness.
  RouDecomposition d1 = decompose_pair(7, 11, 36);
  RouDecomposition d2 = decompose_pair(7, 11, 36);
  CHECK(d1.e == d2.e);
  CHECK(d1.u == d2.u);
  CHECK(d1.k1 == d2.k1);
  CHECK(d1.k2 == d2.k2);
  CHECK(d1.t1 == d2.t1);
  CHECK(d1.t2 == d2.t2);
}

TEST_CASE("witnesses satisfy the congruences and the box") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<unsigned long> dn(1, 2000);
  int done = 0;
  while (done < 120) {
    unsigned long n = dn(rng);
    std::uniform_int_distribution<long> da(-3000, 3000);
    long a1 = da(rng), a2 = da(rng);
    long long nn = n;
    unsigned long r1 = static_cast<unsigned long>(((a1 % nn) + nn) % nn);
    unsigned long r2 = static_cast<unsigned long>(((a2 % nn) + nn) % nn);
    if (std::gcd(std::gcd(r1, r2), n) != 1) continue;
    ++done;

    RouDecomposition d = decompose_pair(a1, a2, n);
    CHECK(d.n == n);
    CHECK(n % d.e == 0);
    CHECK(std::gcd(d.u, n) == 1ul);

    // e^4 <= n^3 and (|k_i| e)^4 <= n^3, exactly.
    unsigned long long n3 = static_cast<unsigned long long>(n) * n * n;
    auto fourth = [](unsigned long long x) { return x * x * x * x; };
    CHECK(fourth(d.e) <= n3);
    CHECK(fourth(static_cast<unsigned long long>(std::labs(d.k1)) * d.e) <= n3);
    CHECK(fourth(static_cast<unsigned long long>(std::labs(d.k2)) * d.e) <= n3);

    // zeta^(a_i) = (zeta^u)^(k_i) * omega^(t_i) with omega = zeta^(n/e).
    long long w = static_cast<long long>(n / d.e);
    long long lhs1 = ((a1 - (static_cast<long long>(d.u) * d.k1 + w * static_cast<long long>(d.t1))) % nn + nn) % nn;
    long long lhs2 = ((a2 - (static_cast<long long>(d.u) * d.k2 + w * static_cast<long long>(d.t2))) % nn + nn) % nn;
    CHECK(lhs1 == 0);
    CHECK(lhs2 == 0);
    CHECK(d.t1 < d.e);
    CHECK(d.t2 < d.e);
  }
}

TEST_CASE("pair preconditions are enforced") {
  CHECK_THROWS_AS(decompose_pair(2, 4, 8), std::invalid_argument);
  CHECK_THROWS_AS(decompose_pair(0, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(decompose_pair(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(decompose_pair(1, 1, 70000), std::invalid_argument);
  CHECK(decompose_pair(3, 5, 1).e == 1);  // n = 1 is trivial but legal
}

TEST_CASE("exhaustive sweep stays inside the lemma box") {
  DecompositionSweep sw = verify_decomposition_exhaustive(30);
  CHECK(sw.pass);
  CHECK(!sw.failure.has_value());
  CHECK(sw.nmax == 30);
  CHECK(sw.max_e_ratio <= 1.0);
  CHECK(sw.max_k_ratio <= 1.0);

  unsigned long long expect = 0;
  for (unsigned long n = 1; n <= 30; ++n) expect += jordan2(n);
  CHECK(expect == 7776);
  CHECK(sw.pairs == expect);
}
