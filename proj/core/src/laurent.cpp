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

#include "ultra/laurent.hpp"

namespace ultra {

FieldSpec FieldSpec::char0(const Int& p, unsigned residue_deg, unsigned ram_index) {
  if (!is_probable_prime(p) || p < 2)
    throw std::invalid_argument("FieldSpec: p must be prime");
  if (residue_deg < 1 || ram_index < 1)
    throw std::invalid_argument("FieldSpec: residue degree and ramification index must be >= 1");
  FieldSpec ks;
  ks.characteristic = 0;
  ks.p = p;
  ks.residue_deg = residue_deg;
  ks.ram_index = ram_index;
  return ks;
}

FieldSpec FieldSpec::charp(unsigned long p, unsigned residue_deg) {
  if (!is_probable_prime(Int(p)))
    throw std::invalid_argument("FieldSpec: characteristic must be prime");
  if (residue_deg < 1)
    throw std::invalid_argument("FieldSpec: residue degree must be >= 1");
  FieldSpec ks;
  ks.characteristic = p;
  ks.p = Int(p);
  ks.residue_deg = residue_deg;
  ks.ram_index = 1;
  return ks;
}

Laurent<RatFun> frobenius_pow(const Laurent<RatFun>& f, const Int& q) {
  const FieldSpec& ks = f.field();
  Int rest;
  unsigned long steps =
      mpz_remove(rest.get_mpz_t(), q.get_mpz_t(), ks.p.get_mpz_t());
  if (rest != 1 || steps == 0)
    throw std::invalid_argument("frobenius_pow: q must be a positive power of the characteristic");
  Laurent<RatFun> r(ks);
  for (const auto& [n, c] : f.terms()) r.set(n * q, c.frobenius_pow(q));
  return r;
}

}  // namespace ultra
