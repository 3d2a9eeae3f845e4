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

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ultra {

// Exact arbitrary-precision integers and rationals. Rationals are kept
// canonical (reduced, positive denominator, zero as 0/1); parse_rat and
// arithmetic on canonical inputs preserve this.
using Int = mpz_class;
using Rat = mpq_class;

Int pow_int(const Int& base, unsigned long e);
Int pow_int(const Int& base, const Int& e);

// Parses "a" or "a/b" with optional leading minus and surrounding spaces.
// Rejects zero denominators and anything outside that grammar.
Rat parse_rat(const std::string& text);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

bool fits_long(const Int& x);
long to_long(const Int& x);
unsigned long to_ulong(const Int& x);

bool is_probable_prime(const Int& x);

}  // namespace ultra
