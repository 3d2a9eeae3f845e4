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

#include "ultra/valuation.hpp"

namespace ultra {

namespace {

// Number of factors p in n, n != 0. mpz_remove is repeated exact division.
unsigned long p_multiplicity(const Int& n, const Int& p) {
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

}  // namespace

Valuation vp(const Rat& x, const Int& p) {
  if (p < 2) throw std::invalid_argument("vp: p must be a prime >= 2");
  if (sgn(x) == 0) return Valuation::infinity();
  long num = static_cast<long>(p_multiplicity(x.get_num(), p));
  long den = static_cast<long>(p_multiplicity(x.get_den(), p));
  return Valuation(Rat(num - den));
}

}  // namespace ultra
