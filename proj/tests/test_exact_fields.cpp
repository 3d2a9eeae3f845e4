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

#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ultra/cyclotomic.hpp"
#include "ultra/finite_field.hpp"
#include "ultra/fp.hpp"
#include "ultra/valuation.hpp"

using namespace ultra;

TEST_CASE("p-adic valuation on rationals") {
  CHECK(vp(Rat(3, 4), Int(2)) == Valuation(Rat(-2)));
  CHECK(vp(Rat(0), Int(5)) == Valuation::infinity());
  CHECK(vp(Rat(50, 9), Int(5)) == Valuation(Rat(2)));
  CHECK(vp(Rat(50, 9), Int(3)) == Valuation(Rat(-2)));
  CHECK(vp(Rat(7), Int(7)) == Valuation(Rat(1)));
  CHECK(vp(Rat(1), Int(2)) == Valuation(Rat(0)));
}

TEST_CASE("valuation ordering and addition") {
  Valuation inf = Valuation::infinity();
  CHECK(Valuation(Rat(3)) < inf);
  CHECK(!(inf < inf));
  CHECK(inf + Valuation(Rat(-5)) == inf);
  CHECK(Valuation(Rat(1, 2)) + Valuation(Rat(1, 3)) == Valuation(Rat(5, 6)));
  CHECK(inf.str() == "inf");
  CHECK(Valuation(Rat(-1, 2)).str() == "-1/2");
  CHECK_THROWS_AS(inf.value(), std::domain_error);
}

TEST_CASE("vp is additive and ultrametric on random pairs") {
  std::mt19937_64 rng(11);
  for (long p : {2L, 3L, 5L}) {
    Int ip(p);
    for (int i = 0; i < 300; ++i) {
      Rat x = ultra_test::random_rat(rng, p);
      Rat y = ultra_test::random_rat(rng, p);
      CHECK(vp(x * y, ip) == vp(x, ip) + vp(y, ip));
      Valuation lo = std::min(vp(x, ip), vp(y, ip));
      CHECK(vp(x + y, ip) >= lo);
      if (vp(x, ip) != vp(y, ip)) CHECK(vp(x + y, ip) == lo);
    }
  }
}

TEST_CASE("t-adic valuation on rational functions") {
  CHECK(vt(RatFun::parse(2, "t^2 + t")) == Valuation(Rat(1)));
  CHECK(vt(RatFun::parse(2, "1/t")) == Valuation(Rat(-1)));
  CHECK(vt(RatFun::parse(2, "(t^3 + t^4)/(t + 1)")) == Valuation(Rat(3)));
  CHECK(vt(RatFun(2)) == Valuation::infinity());
  CHECK(vt(RatFun::constant(3, 2)) == Valuation(Rat(0)));
}

TEST_CASE("vt is additive and ultrametric on random pairs") {
  std::mt19937_64 rng(12);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int i = 0; i < 300; ++i) {
      RatFun x = ultra_test::random_ratfun(rng, p);
      RatFun y = ultra_test::random_ratfun(rng, p);
      CHECK(vt(x * y) == vt(x) + vt(y));
      Valuation lo = std::min(vt(x), vt(y));
      CHECK(vt(x + y) >= lo);
      if (vt(x) != vt(y)) CHECK(vt(x + y) == lo);
    }
  }
}

TEST_CASE("FpPoly arithmetic and normalization") {
  FpPoly a = FpPoly::parse(2, "t^2 + 1");
  FpPoly b = FpPoly::parse(2, "t + 1");
  CHECK(a == b * b);  // (t+1)^2 over F_2
  CHECK(FpPoly::gcd(a, b) == b);

  FpPoly q(3), r(3);
  FpPoly::divrem(FpPoly::parse(3, "t^3 + 2t + 1"), FpPoly::parse(3, "t + 2"), q, r);
  CHECK(FpPoly::parse(3, "t^3 + 2t + 1") == q * FpPoly::parse(3, "t + 2") + r);
  CHECK(r.degree() < 1);

  CHECK(FpPoly::parse(5, "3t^2 + t").str() == "3t^2 + t");
  CHECK(FpPoly(7).str() == "0");
  CHECK(FpPoly::parse(2, "t^3 + t").ord() == 1);
}

TEST_CASE("RatFun stays reduced with monic denominator") {
  RatFun x = RatFun::parse(3, "(t^2 + 2t)/(2t)");
  CHECK(x.den().is_monic());
  CHECK(FpPoly::gcd(x.num(), x.den()).degree() == 0);
  // (t^2+2t)/(2t) = (t+2)/2 = 2(t+2) = 2t+4 = 2t+1 over F_3
  CHECK(x == RatFun::parse(3, "2t + 1"));
  CHECK(RatFun::parse(3, "(t+1)/(t+1)") == RatFun::constant(3, 1));
  CHECK(RatFun::parse(2, "t").str() == "t");

  RatFun y = RatFun::parse(2, "(t^2+1)/(t^3+t)");
  std::string s = y.str();
  CHECK(RatFun::parse(2, s) == y);
}

TEST_CASE("deterministic tower moduli") {
  CHECK(build_tower(2, 1).modulus == FpPoly::parse(2, "t"));
  CHECK(build_tower(2, 2).modulus == FpPoly::parse(2, "t^2 + t + 1"));
  // First irreducible quadratic over F_3 in lexicographic coefficient order.
  CHECK(build_tower(3, 2).modulus == FpPoly::parse(3, "t^2 + 1"));
  CHECK(build_tower(2, 4).modulus.degree() == 4);
  CHECK(is_irreducible(build_tower(5, 3).modulus));
  // Same arguments, same modulus.
  CHECK(build_tower(3, 5).modulus == build_tower(3, 5).modulus);
}

TEST_CASE("finite field inverse and multiplicative order") {
  Tower t8 = build_tower(2, 3);
  FFElem g(t8, FpPoly::parse(2, "t"));
  CHECK((g * g.inverse()).is_one());
  CHECK(group_order(t8) == 7);
  // F_8^x is cyclic of prime order 7, so every non-identity element generates.
  CHECK(multiplicative_order(g) == 7);
  CHECK(multiplicative_order(FFElem::one(t8)) == 1);

  Tower t9 = build_tower(3, 2);
  Int seen_max(0);
  for (unsigned long a = 0; a < 3; ++a)
    for (unsigned long b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      FFElem x(t9, FpPoly(3, {a, b}));
      Int ord = multiplicative_order(x);
      CHECK(x.pow(ord).is_one());
      seen_max = std::max(seen_max, ord);
    }
  CHECK(seen_max == 8);  // F_9^x is cyclic of order 8
}

TEST_CASE("x^(p^s) = x holds across whole towers") {
  // Exhaustive sweep of every element for a spread of (p, s) with p^s up to
  // 2^16; the largest cases are the interesting ones.
  struct Case {
    unsigned long p;
    unsigned s;
  };
  for (Case c : {Case{2, 16}, Case{3, 10}, Case{5, 6}, Case{7, 5}, Case{13, 4},
                 Case{251, 2}, Case{2, 1}, Case{65521, 1}}) {
    Tower tw = build_tower(c.p, c.s);
    Int q = pow_int(Int(c.p), static_cast<unsigned long>(c.s));
    REQUIRE(q <= Int(1) << 16);
    std::vector<unsigned long> vec(c.s, 0);
    unsigned long checked = 0;
    for (;;) {
      FFElem x(tw, FpPoly(c.p, vec));
      CHECK(x.pow(q) == x);
      ++checked;
      size_t i = 0;
      while (i < c.s && ++vec[i] == c.p) vec[i++] = 0;
      if (i == c.s) break;
    }
    CHECK(Int(checked) == q);
  }
}

TEST_CASE("cyclotomic polynomial table") {
  CHECK(cyclo_poly(1) == std::vector<Int>{-1, 1});
  CHECK(cyclo_poly(2) == std::vector<Int>{1, 1});
  CHECK(cyclo_poly(4) == std::vector<Int>{1, 0, 1});
  CHECK(cyclo_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
  CHECK(cyclo_poly(7) == std::vector<Int>{1, 1, 1, 1, 1, 1, 1});
  CHECK(cyclo_poly(105).size() == 49);  // first index with coefficient -2
}

TEST_CASE("arithmetic helpers") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(divisors_of(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
  CHECK(prime_factors(60) == std::vector<unsigned long>{2, 3, 5});
  CHECK(prime_factors(1).empty());
}

TEST_CASE("roots of unity inside cyclotomic rings") {
  auto r4 = CycRing::make(4);
  auto zeta4 = r4->root_power(Int(1));
  CHECK(is_root_of_unity_cyc(zeta4) == 4ul);

  auto two = r4->from_coords({Rat(2), Rat(0)});
  CHECK(!is_root_of_unity_cyc(two).has_value());

  auto r3 = CycRing::make(3);
  auto minus_zeta3 = r3->root_power(Int(1)).scaled(Rat(-1));
  CHECK(is_root_of_unity_cyc(minus_zeta3) == 6ul);

  auto r1 = CycRing::make(1);
  CHECK(is_root_of_unity_cyc(r1->one().scaled(Rat(-1))) == 2ul);
  CHECK_THROWS(is_root_of_unity_cyc(r1->zero()));
}

TEST_CASE("the class of X has exact order N for all N up to 200") {
  for (unsigned long n = 1; n <= 200; ++n) {
    auto ring = CycRing::make(n);
    auto x = ring->root_power(Int(1));
    CHECK(x.pow(Int(n)).is_one());
    for (unsigned long d : divisors_of(n)) {
      if (d == n) continue;
      CHECK(!x.pow(Int(d)).is_one());
    }
  }
}

TEST_CASE("certified orders match gcd arithmetic") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<unsigned long> dn(1, 40);
  for (int i = 0; i < 60; ++i) {
    unsigned long n = dn(rng);
    std::uniform_int_distribution<unsigned long> dj(0, n - 1);
    unsigned long j = dj(rng);
    auto ring = CycRing::make(n);
    auto x = ring->root_power(Int(j));
    auto ord = is_root_of_unity_cyc(x);
    REQUIRE(ord.has_value());
    unsigned long expect = n / std::gcd(n, j);
    CHECK(*ord == expect);
    CHECK(x.pow(Int(*ord)).is_one());
    for (unsigned long l : prime_factors(*ord)) CHECK(!x.pow(Int(*ord / l)).is_one());
  }
}
