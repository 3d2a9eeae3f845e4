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

#include "ultra/ints.hpp"

#include <cctype>

namespace ultra {

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int pow_int(const Int& base, const Int& e) {
  if (sgn(e) < 0) throw std::invalid_argument("pow_int: negative exponent");
  if (!e.fits_ulong_p()) throw std::invalid_argument("pow_int: exponent too large");
  return pow_int(base, e.get_ui());
}

Rat parse_rat(const std::string& text) {
  size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string s = text.substr(a, b - a);
  if (s.empty()) throw std::invalid_argument("parse_rat: empty input");
  auto is_int = [](const std::string& t) {
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  // Tolerate spaces around the slash, nothing else.
  auto trim = [](std::string t) {
    size_t x = 0, y = t.size();
    while (x < y && t[x] == ' ') ++x;
    while (y > x && t[y - 1] == ' ') --y;
    return t.substr(x, y - x);
  };
  num = trim(num);
  den = trim(den);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
  Int n(num), d(den);
  if (sgn(d) == 0)
    throw std::invalid_argument("parse_rat: zero denominator in '" + text + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool fits_long(const Int& x) { return x.fits_slong_p(); }

long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return x.get_si();
}

unsigned long to_ulong(const Int& x) {
  if (sgn(x) < 0 || !x.fits_ulong_p()) throw std::overflow_error("to_ulong: out of range");
  return x.get_ui();
}

bool is_probable_prime(const Int& x) {
  return mpz_probab_prime_p(x.get_mpz_t(), 30) != 0;
}

}  // namespace ultra
