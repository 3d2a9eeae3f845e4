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
//
// Release gate: one line of verdict per criterion, wall-clock enforced.
// Exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ultra/bounds.hpp"
#include "ultra/torsion.hpp"

using namespace ultra;
using ultra_test::fser;
using ultra_test::qser;

namespace {

int failures = 0;

struct check_failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw check_failure{what};
}

template <class Body>
void criterion(int number, double limit_seconds, Body body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string message;
  bool ok = true;
  try {
    body();
  } catch (const check_failure& f) {
    ok = false;
    message = f.what;
  } catch (const std::exception& e) {
    ok = false;
    message = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && seconds > limit_seconds) {
    ok = false;
    message = "time limit exceeded";
  }
  if (ok) {
    std::printf("PASS criterion %d (%.2fs)\n", number, seconds);
  } else {
    std::printf("FAIL criterion %d (%.2fs): %s\n", number, seconds, message.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

void criterion_1() {
  require(zeros_on_sphere(qser(3, {{0, "-1"}, {2, "1"}}), Rat(0)) == Int(2),
          "X^2 - 1 must have two unit-sphere zeros");
  require(zeros_on_sphere(qser(3, {{0, "-1"}, {1, "3"}}), Rat(0)) == Int(0),
          "3X - 1 must have none");
  NewtonPolygon poly = newton_polygon(qser(5, {{0, "125"}, {1, "5"}, {2, "1"}}));
  require(poly.vertices.size() == 3, "quadratic polygon must keep three vertices");
  require(poly.vertices[0] == PolygonVertex{Int(0), Rat(3)} &&
              poly.vertices[1] == PolygonVertex{Int(1), Rat(1)} &&
              poly.vertices[2] == PolygonVertex{Int(2), Rat(0)},
          "quadratic polygon vertices are (0,3),(1,1),(2,0)");
}

void criterion_2() {
  const std::vector<Rat> slopes = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2)};
  std::mt19937_64 rng(1002);
  const long primes[] = {2, 3, 5};
  for (int i = 0; i < 1000; ++i) {
    long p = primes[i % 3];
    LaurentQ a = ultra_test::random_qser(rng, p, 5, 4);
    LaurentQ b = ultra_test::random_qser(rng, p, 5, 4);
    if (a.is_zero() || b.is_zero()) continue;
    for (const Rat& s : slopes)
      require(zeros_on_sphere(a * b, s) == zeros_on_sphere(a, s) + zeros_on_sphere(b, s),
              "multiplicativity over Q failed");
  }
  for (int i = 0; i < 1000; ++i) {
    unsigned long p = static_cast<unsigned long>(primes[i % 3]);
    LaurentF a = ultra_test::random_fser(rng, p, 4, 4);
    LaurentF b = ultra_test::random_fser(rng, p, 4, 4);
    if (a.is_zero() || b.is_zero()) continue;
    for (const Rat& s : slopes)
      require(zeros_on_sphere(a * b, s) == zeros_on_sphere(a, s) + zeros_on_sphere(b, s),
              "multiplicativity over F_p(t) failed");
  }
}

void criterion_3() {
  std::mt19937_64 rng(1003);
  const unsigned long primes[] = {2, 3, 5};
  for (int i = 0; i < 500; ++i) {
    unsigned long p = primes[i % 3];
    Int q = (i % 5 == 0) ? Int(p * p) : Int(p);
    LaurentF f = ultra_test::random_fser(rng, p, 4, 3);
    require(frobenius_pow(f, q) == pow(f, q), "frobenius_pow disagrees with pow");
  }
}

void criterion_4() {
  std::vector<LaurentQ> over_q = {
      qser(2, {{0, "-1/2"}, {1, "1/2"}}),          // i
      qser(2, {{0, "1/2"}, {1, "1/2"}, {2, "1/2"}}),  // i, width 2
      qser(2, {{0, "4"}, {1, "2"}}),               // ii
      qser(2, {{-1, "2"}, {1, "8"}}),              // ii
      qser(3, {{-1, "1"}, {1, "1"}}),              // iii
      qser(3, {{-1, "1"}, {2, "1"}}),              // iii, asymmetric
      qser(2, {{0, "2"}, {1, "1"}}),               // iv-a
      qser(2, {{0, "4"}, {1, "1"}, {3, "2"}}),     // iv-a, wide tilde
      qser(3, {{0, "3"}, {1, "1"}}),               // iv-a over Q_3
  };
  std::vector<LaurentF> over_f = {
      fser(2, {{0, "t"}, {1, "1"}}),               // iv-a
      fser(2, {{1, "t+1"}}),                       // iv-zero-tilde, not special
      fser(2, {{1, "t"}, {2, "1"}}),               // iv-a, shifted kernel
      fser(2, {{1, "t"}, {3, "t"}}),               // ii
      fser(2, {{-1, "1/t"}, {1, "1/t"}}),          // i
  };
  require(over_q.size() + over_f.size() >= 10, "need at least ten curated series");

  std::set<std::string> tags;
  std::uint64_t seed = 1004;
  for (const LaurentQ& f : over_q) {
    require(is_special(f).verdict != Speciality::Special, "curated series must not be special");
    tags.insert(to_string(compute_cf(f).tag));
    for (long B : {1L, 2L, 3L}) {
      CfValidation val = validate_cf(f, 200, Int(B), seed++);
      require(val.pass, "validation failed over Q at B = " + std::to_string(B));
      require(val.draws == 200, "short validation run");
    }
  }
  for (const LaurentF& f : over_f) {
    require(is_special(f).verdict == Speciality::NotSpecial, "curated series must not be special");
    tags.insert(to_string(compute_cf(f).tag));
    for (long B : {1L, 2L, 3L}) {
      CfValidation val = validate_cf(f, 200, Int(B), seed++);
      require(val.pass, "validation failed over F_p(t) at B = " + std::to_string(B));
    }
  }
  for (const char* tag : {"i", "ii", "iii", "iv-a", "iv-zero-tilde"})
    require(tags.count(tag) == 1, std::string("curated set misses case ") + tag);
}

void criterion_5() {
  LaurentF f = fser(2, {{1, "t+1"}, {2, "t"}});  // X + t(X^2 + X)
  BoundReport<RatFun> rep = bound_charp(f);
  require(rep.m.has_value() && *rep.m == Int(2), "M(X + t(X^2+X)) must be 2");
  EnumerationP oracle = enumerate_charp(f, 8);
  require(oracle.records.size() == 1, "exactly one torsion point expected");
  require(oracle.records[0].s == 1 && oracle.records[0].zeta == FpPoly::constant(2, 1) &&
              oracle.records[0].value == FpPoly::constant(2, 1),
          "the torsion point is zeta = 1 with value 1");
  require(Int(oracle.records.size()) <= *rep.bound, "count must respect the bound");

  BoundReport<RatFun> flat = bound_charp(fser(2, {{0, "t"}, {1, "1"}}));
  require(flat.m.has_value() && *flat.m == Int(0), "M(X + t) must be 0");
  require(enumerate_charp(fser(2, {{0, "t"}, {1, "1"}}), 8).records.empty(),
          "X + t must have no torsion points");
}

void criterion_6() {
  BoundReport<Rat> rep = bound_char0(qser(2, {{0, "-1/2"}, {1, "1/2"}}));
  require(rep.cf_report.cf == Int(1), "c_f must be 1");
  require(rep.k == 4, "k must be 4");
  require(rep.m.has_value() && *rep.m == Int(32), "M must be 32");
  require(rep.bound.has_value() && *rep.bound == Int(512), "bound must be 512");
  require(*rep.bound == cor_example_bound(Int(2), 1, Int(1)),
          "bound must equal the closed-form example");
}

void criterion_7() {
  LaurentQ f = qser(2, {{0, "2"}, {1, "1"}});
  BoundReport<Rat> rep = bound_char0(f);
  require(!rep.expand_failed, "expansion must fit the default budget");
  PPartCap cap = p_part_cap(rep.cf_report.cf, 1, Int(2));
  require(cap.cap == Int(256) && cap.k == 8, "p-part cap for X + 2 is 256 at k = 8");
  Enumeration0 oracle = enumerate_char0(f, 100, pow_int(Int(2), cap.k));
  require(oracle.records.size() == 1, "exactly one torsion level expected");
  require(oracle.records[0].n == 2 && oracle.records[0].j == 1 &&
              oracle.records[0].value_order == 1,
          "the record is zeta = -1 mapping to 1");
  require(oracle.total() <= *rep.bound, "oracle count must respect the bound");
}

void criterion_8() {
  DecompositionSweep sw = verify_decomposition_exhaustive(200);
  require(sw.pass, "sweep reported a failure");
  require(!sw.failure.has_value(), "sweep carries a counterexample");
  require(sw.max_e_ratio <= 1.0, "e escaped the pigeonhole box");
  require(sw.max_k_ratio <= 1.0, "k escaped the pigeonhole box");
  require(sw.pairs > 0, "sweep did no work");
}

void criterion_9() {
  LaurentF special = fser(2, {{1, "1"}, {3, "1"}});  // X^3 + X in F_2[X]
  require(is_special(special).verdict == Speciality::Special, "X^3 + X is special");
  require(q_identity_residual(special, Int(2)).is_zero(), "special residual must vanish");
  size_t c3 = enumerate_charp(special, 3).records.size();
  size_t c6 = enumerate_charp(special, 6).records.size();
  require(c6 > c3, "special enumeration must keep growing");

  LaurentF curved = fser(2, {{1, "t+1"}, {2, "t"}});
  require(is_special(curved).verdict == Speciality::NotSpecial, "curated series is not special");
  require(!q_identity_residual(curved, Int(2)).is_zero(), "non-special residual must not vanish");
  size_t c8 = enumerate_charp(curved, 8).records.size();
  size_t c12 = enumerate_charp(curved, 12).records.size();
  require(c8 == c12, "non-special count must stabilize by smax = 8");
}

}  // namespace

int main() {
  criterion(1, 1.0, criterion_1);
  criterion(2, 30.0, criterion_2);
  criterion(3, 30.0, criterion_3);
  criterion(4, 60.0, criterion_4);
  criterion(5, 60.0, criterion_5);
  criterion(6, 1.0, criterion_6);
  criterion(7, 600.0, criterion_7);
  criterion(8, 600.0, criterion_8);
  criterion(9, 120.0, criterion_9);
  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
