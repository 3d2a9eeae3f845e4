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

#include "ultra/classify.hpp"

#include <algorithm>

namespace ultra {

std::string to_string(Speciality v) {
  switch (v) {
    case Speciality::NotSpecial: return "not-special";
    case Speciality::Special: return "special";
    case Speciality::SpecialOverExtension: return "special-over-extension";
  }
  return "?";
}

std::string to_string(SpecialReason r) {
  switch (r) {
    case SpecialReason::MonomialUnitRoot: return "monomial-unit-root";
    case SpecialReason::ConstantFieldCoefficients: return "constant-field-coefficients";
    case SpecialReason::QIdentity: return "q-identity";
    case SpecialReason::Negative: return "negative";
    case SpecialReason::ZeroSeries: return "zero-series";
  }
  return "?";
}

std::string to_string(CfCase c) {
  switch (c) {
    case CfCase::I: return "i";
    case CfCase::II: return "ii";
    case CfCase::III: return "iii";
    case CfCase::IvA: return "iv-a";
    case CfCase::IvB: return "iv-b";
    case CfCase::IvC: return "iv-c";
    case CfCase::IvZeroTilde: return "iv-zero-tilde";
  }
  return "?";
}

std::string to_string(DrawRoute r) {
  switch (r) {
    case DrawRoute::CaseDirect: return "case-direct";
    case DrawRoute::ViaIii: return "via-iii";
    case DrawRoute::IvA: return "iv-a";
    case DrawRoute::IvB: return "iv-b";
    case DrawRoute::IvC: return "iv-c";
    case DrawRoute::MonomialResidual: return "monomial-residual";
    case DrawRoute::ZeroSeries: return "zero-series";
  }
  return "?";
}

SpecialityVerdict is_special(const Laurent<Rat>& f) {
  if (f.is_zero()) return {Speciality::NotSpecial, SpecialReason::ZeroSeries};
  if (f.support_size() == 1) {
    const Rat& c = f.terms().begin()->second;
    if (c == 1 || c == -1)
      return {Speciality::Special, SpecialReason::MonomialUnitRoot};
    if (vp(c, f.field().p) == Valuation(Rat(0)))
      return {Speciality::SpecialOverExtension, SpecialReason::MonomialUnitRoot};
  }
  return {Speciality::NotSpecial, SpecialReason::Negative};
}

SpecialityVerdict is_special(const Laurent<RatFun>& f) {
  if (f.is_zero()) return {Speciality::NotSpecial, SpecialReason::ZeroSeries};
  for (const auto& [n, c] : f.terms())
    if (!c.is_constant()) return {Speciality::NotSpecial, SpecialReason::Negative};
  return {Speciality::Special, SpecialReason::ConstantFieldCoefficients};
}

Laurent<Rat> q_identity_residual(const Laurent<Rat>& f, const Int& q) {
  if (q < 1) throw std::invalid_argument("q_identity_residual: q must be >= 1");
  return pow(f, q) - substitute_power(f, q);
}

Laurent<RatFun> q_identity_residual(const Laurent<RatFun>& f, const Int& q) {
  if (f.is_zero()) return f;
  return frobenius_pow(f, q) - substitute_power(f, q);
}

template <class C>
CfReport<C> compute_cf(const Laurent<C>& f) {
  if (f.is_zero()) throw std::invalid_argument("compute_cf: zero series");
  CfReport<C> r;
  r.unit_newton = newton_at(f, Rat(0));
  const Valuation level{Rat(0)};
  if (r.unit_newton.vmin < level) {
    r.tag = CfCase::I;
    r.cf = r.unit_newton.width();
  } else if (r.unit_newton.vmin > level) {
    r.tag = CfCase::II;
    r.cf = 0;
  } else if (r.unit_newton.kidx != r.unit_newton.Kidx) {
    r.tag = CfCase::III;
    r.cf = 2 * std::max(Int(abs(r.unit_newton.Kidx)), Int(abs(r.unit_newton.kidx)));
  } else {
    Laurent<C> tilde = f;
    tilde.set(r.unit_newton.kidx, coeff_traits<C>::zero(f.field()));
    if (tilde.is_zero()) {
      r.tag = CfCase::IvZeroTilde;
      r.tilde_zero = true;
      r.cf = 2 * std::max(Int(abs(r.unit_newton.Kidx)), Int(1));
    } else {
      r.tag = CfCase::IvA;
      NewtonData nd = newton_at(tilde, Rat(0));
      r.tilde_newton = nd;
      r.cf = 2 * std::max({Int(abs(r.unit_newton.Kidx)), Int(abs(nd.Kidx)),
                           Int(abs(nd.kidx)), Int(1)});
    }
    r.ftilde = std::move(tilde);
  }
  return r;
}

namespace {

// Deterministic seeded unit draws: fixed palettes of valuation-zero elements.
std::vector<Rat> unit_palette(const Laurent<Rat>& f) {
  const Int& p = f.field().p;
  Rat u1(1), u2(1 + p), u3(1 + p + p * p);
  return {u1, -u1, u2, -u2, u3, -u3};
}

std::vector<RatFun> unit_palette(const Laurent<RatFun>& f) {
  unsigned long p = f.field().characteristic;
  std::vector<RatFun> out;
  for (unsigned long a = 1; a < p; ++a) out.push_back(RatFun::constant(p, a));
  return out;
}

template <class C>
C sum_of_coefficients(const Laurent<C>& f) {
  C s = coeff_traits<C>::zero(f.field());
  for (const auto& [n, c] : f.terms()) s = s + c;
  return s;
}

}  // namespace

template <class C>
CfValidation validate_cf(const Laurent<C>& f, size_t trials, const Int& B, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("validate_cf: zero series");
  if (B < 1) throw std::invalid_argument("validate_cf: B must be >= 1");
  if (is_special(f).verdict == Speciality::Special)
    throw std::domain_error("validate_cf: special input");
  CfReport<C> cf = compute_cf(f);
  Int limit = cf.cf * B;
  bool case_iv = cf.tag == CfCase::IvA || cf.tag == CfCase::IvZeroTilde;
  C unit_coeff = f.coeff(cf.unit_newton.kidx);

  std::mt19937_64 rng(seed);
  auto palette = unit_palette(f);
  long bmax = to_long(B);
  std::uniform_int_distribution<long> dk(-bmax, bmax);
  std::uniform_int_distribution<size_t> db(0, palette.size() - 1);

  CfValidation out;
  out.draws = trials;
  for (size_t t = 0; t < trials; ++t) {
    long k1, k2;
    do {
      k1 = dk(rng);
      k2 = dk(rng);
    } while (k1 == 0 && k2 == 0);
    const C& b = palette[db(rng)];

    Laurent<C> a(f.field());
    if (k1 == 0)
      a = constant_series(f.field(), sum_of_coefficients(f));
    else
      a = substitute_power(f, Int(k1));
    a.add_to(Int(k2), -b);

    CfDraw draw;
    draw.k1 = k1;
    draw.k2 = k2;
    draw.b = coeff_traits<C>::str(b);
    draw.limit = limit;

    double ratio = 0.0;
    if (a.is_zero()) {
      draw.zero_count = 0;
      draw.route = DrawRoute::ZeroSeries;
      ++out.zero_series_draws;
    } else {
      draw.zero_count = zeros_on_sphere(a, Rat(0));
      draw.ok = draw.zero_count <= limit;
      if (sgn(limit) > 0)
        ratio = draw.zero_count.get_d() / limit.get_d();
      else if (sgn(draw.zero_count) > 0)
        ratio = 1e18;
      if (case_iv) {
        if (Int(k1) * cf.unit_newton.kidx != Int(k2)) {
          draw.route = DrawRoute::ViaIii;
        } else if (cf.tilde_zero) {
          draw.route = DrawRoute::MonomialResidual;
        } else {
          Valuation w = coeff_traits<C>::val(f.field(), unit_coeff - b);
          const Valuation& tv = cf.tilde_newton->vmin;
          if (w < tv)
            draw.route = DrawRoute::IvA;
          else if (w == tv)
            draw.route = DrawRoute::IvB;
          else
            draw.route = DrawRoute::IvC;
        }
      }
    }
    ++out.route_counts[to_string(draw.route)];
    if (!draw.ok) out.pass = false;
    if (ratio >= out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst = draw;
    }
  }
  return out;
}

template CfReport<Rat> compute_cf<Rat>(const Laurent<Rat>&);
template CfReport<RatFun> compute_cf<RatFun>(const Laurent<RatFun>&);
template CfValidation validate_cf<Rat>(const Laurent<Rat>&, size_t, const Int&, std::uint64_t);
template CfValidation validate_cf<RatFun>(const Laurent<RatFun>&, size_t, const Int&,
                                          std::uint64_t);

}  // namespace ultra
