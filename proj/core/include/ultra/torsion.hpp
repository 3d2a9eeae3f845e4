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
// Brute-force enumeration of torsion points on the graph of f, and the
// pigeonhole decomposition of a pair of exponents against a common root of
// unity. This is the ground truth the bound pipeline is checked against.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "ultra/cyclotomic.hpp"
#include "ultra/finite_field.hpp"
#include "ultra/laurent.hpp"

namespace ultra {

// One torsion hit in characteristic p: zeta generates F_{p^s} over F_p and
// f(zeta) is a nonzero constant of the residue tower.
struct TorsionRecordP {
  unsigned long s = 1;
  FpPoly zeta;
  unsigned long zeta_order = 1;
  FpPoly value;
  unsigned long value_order = 1;
};

struct EnumerationP {
  Int p;
  unsigned long smax = 0;
  std::vector<TorsionRecordP> records;
  std::map<unsigned long, unsigned long> per_level;  // s -> records at that level
};

// Walks every element of F_{p^s}^x whose minimal field is exactly F_{p^s},
// for s = 1..smax, and records those where f evaluates to a nonzero
// constant. Each torsion point of degree <= smax is visited exactly once.
// The horizon is capped at p^smax <= 2^24.
EnumerationP enumerate_charp(const Laurent<RatFun>& f, unsigned long smax);

// One torsion hit in characteristic zero: zeta = zeta_n^j primitive of
// order n; the whole Galois orbit (phi(n) points) behaves identically since
// f has rational coefficients.
struct TorsionRecord0 {
  unsigned long n = 1;
  unsigned long j = 1;
  unsigned long value_order = 1;
  unsigned long multiplicity = 1;
};

struct Enumeration0 {
  unsigned long nmax = 0;
  Int pk_cap;
  std::vector<TorsionRecord0> records;
  Int total() const;  // torsion points counted with orbit multiplicity
};

// Evaluates f at one primitive root per order n <= nmax whose p-part does
// not exceed pk_cap, testing the value for torsion inside Q(zeta_n). Levels
// needing a cyclotomic ring of degree above phi_ceiling abort up front.
Enumeration0 enumerate_char0(const Laurent<Rat>& f, unsigned long nmax, const Int& pk_cap,
                             unsigned long phi_ceiling = 256);

/* Witness that zeta^{a_i} = (zeta^u)^{k_i} * omega^{t_i} for a primitive
 * n-th root zeta and omega = zeta^{n/e}, with e | n small and the k_i in a
 * box: e <= n^{3/4} and |k_i| * e <= n^{3/4}. */
struct RouDecomposition {
  unsigned long n = 1;
  unsigned long e = 1;
  unsigned long u = 1;
  long k1 = 0;
  long k2 = 0;
  unsigned long t1 = 0;
  unsigned long t2 = 0;
};

// Searches divisors e of n in increasing order, then minimizes |k1|+|k2|
// over units u (smallest u breaking ties). Requires gcd(a1, a2, n) = 1.
// Existence is guaranteed; a fruitless search is an internal inconsistency.
RouDecomposition decompose_pair(long a1, long a2, unsigned long n);

struct DecompositionFailure {
  long a1 = 0;
  long a2 = 0;
  unsigned long n = 0;
};

struct DecompositionSweep {
  bool pass = true;
  unsigned long nmax = 0;
  unsigned long long pairs = 0;
  double max_e_ratio = 0.0;  // largest e / n^{3/4} seen
  double max_k_ratio = 0.0;  // largest |k_i| * e / n^{3/4} seen
  std::optional<DecompositionFailure> failure;
};

// Runs decompose_pair over every (a1, a2) with gcd(a1, a2, n) = 1 for all
// n <= nmax and re-checks the congruences on each witness.
DecompositionSweep verify_decomposition_exhaustive(unsigned long nmax);

}  // namespace ultra
