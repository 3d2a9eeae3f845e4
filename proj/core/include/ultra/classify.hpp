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

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ultra/newton.hpp"

namespace ultra {

enum class Speciality { NotSpecial, Special, SpecialOverExtension };

enum class SpecialReason {
  MonomialUnitRoot,
  ConstantFieldCoefficients,
  QIdentity,
  Negative,
  ZeroSeries,
};

struct SpecialityVerdict {
  Speciality verdict = Speciality::NotSpecial;
  SpecialReason reason = SpecialReason::Negative;
};

std::string to_string(Speciality v);
std::string to_string(SpecialReason r);

// Characteristic zero: special means a single-term series eta*X^m with eta a
// root of unity; over Q the representable unit roots are exactly +-1. A
// single term whose coefficient is a non-(+-1) unit cannot be settled inside
// Q and is reported as special over an extension.
SpecialityVerdict is_special(const Laurent<Rat>& f);

// Characteristic p: special means every coefficient is a constant (the
// reduced rational function has numerator degree <= 0 and denominator 1).
SpecialityVerdict is_special(const Laurent<RatFun>& f);

// g = f(X)^q - f(X^q); identically zero exactly on special inputs (within
// each representable coefficient domain). Characteristic p uses the
// expansion-free Frobenius power.
Laurent<Rat> q_identity_residual(const Laurent<Rat>& f, const Int& q);
Laurent<RatFun> q_identity_residual(const Laurent<RatFun>& f, const Int& q);

enum class CfCase { I, II, III, IvA, IvB, IvC, IvZeroTilde };

std::string to_string(CfCase c);

/* The unit-sphere zero-capacity constant of f. Cases follow the unit-sphere
 * Newton data: (i) vmin < 0, (ii) vmin > 0, (iii) vmin = 0 with K != k,
 * (iv) vmin = 0 with K = k, where the summand at the dominant index is
 * removed to form ftilde. A nonzero ftilde in case (iv) sits strictly
 * below the unit sphere, so the statically reported tag is iv-a (or
 * iv-zero-tilde); draws can land in iv-b / iv-c depending on the unit b. */
template <class C>
struct CfReport {
  CfCase tag = CfCase::II;
  Int cf = 0;
  NewtonData unit_newton;
  std::optional<Laurent<C>> ftilde;        // case iv only
  std::optional<NewtonData> tilde_newton;  // case iv with ftilde != 0
  bool tilde_zero = false;                 // case iv with ftilde = 0
};

template <class C>
CfReport<C> compute_cf(const Laurent<C>& f);

// Per-draw route through the case-(iv) analysis, for diagnostics.
enum class DrawRoute { CaseDirect, ViaIii, IvA, IvB, IvC, MonomialResidual, ZeroSeries };

std::string to_string(DrawRoute r);

struct CfDraw {
  Int k1, k2;
  std::string b;
  Int zero_count;
  Int limit;
  DrawRoute route = DrawRoute::CaseDirect;
  bool ok = true;
};

struct CfValidation {
  bool pass = true;
  size_t draws = 0;
  size_t zero_series_draws = 0;
  double worst_ratio = 0.0;
  std::map<std::string, size_t> route_counts;
  std::optional<CfDraw> worst;
};

/* Draws seeded units b and exponents |k1|,|k2| <= B (not both zero) and
 * checks zeros_on_sphere(f(X^k1) - b*X^k2, 0) <= cf*B for every draw. A zero
 * residual series is a pass but is flagged, since it forces f to be a
 * monomial. Requires f != 0 and not special. */
template <class C>
CfValidation validate_cf(const Laurent<C>& f, size_t trials, const Int& B, std::uint64_t seed);

extern template CfReport<Rat> compute_cf<Rat>(const Laurent<Rat>&);
extern template CfReport<RatFun> compute_cf<RatFun>(const Laurent<RatFun>&);
extern template CfValidation validate_cf<Rat>(const Laurent<Rat>&, size_t, const Int&,
                                              std::uint64_t);
extern template CfValidation validate_cf<RatFun>(const Laurent<RatFun>&, size_t, const Int&,
                                                 std::uint64_t);

}  // namespace ultra
