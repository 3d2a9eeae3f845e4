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

#include <string>
#include <vector>

#include "ultra/fp.hpp"
#include "ultra/ints.hpp"

namespace ultra {

// F_{p^s} presented as F_p[x]/(modulus). The modulus is pinned
// deterministically: the first irreducible monic polynomial of degree s in
// the lexicographic coefficient order (constant coefficient varying fastest),
// so repeated builds agree exactly.
struct Tower {
  unsigned long p = 2;
  unsigned s = 1;
  FpPoly modulus{2};

  friend bool operator==(const Tower& a, const Tower& b) {
    return a.p == b.p && a.s == b.s && a.modulus == b.modulus;
  }
  friend bool operator!=(const Tower& a, const Tower& b) { return !(a == b); }
};

bool is_irreducible(const FpPoly& m);
Tower build_tower(unsigned long p, unsigned s);  // 1 <= s <= 24

class FFElem {
 public:
  FFElem(Tower tower, FpPoly value);
  static FFElem zero(const Tower& t);
  static FFElem one(const Tower& t);
  static FFElem from_constant(const Tower& t, unsigned long a);

  const Tower& tower() const { return tower_; }
  const FpPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const;

  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend bool operator==(const FFElem& a, const FFElem& b);
  friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

  FFElem pow(const Int& e) const;  // e >= 0
  FFElem inverse() const;          // via x^(p^s - 2)
  FFElem scaled(unsigned long c) const;

  std::string str() const;

 private:
  Tower tower_;
  FpPoly value_;
};

// Order of the multiplicative group, p^s - 1.
Int group_order(const Tower& t);
// Multiplicative order of a nonzero element.
Int multiplicative_order(const FFElem& x);

}  // namespace ultra
