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
// Wire formats: the canonical JSON series form, JSON report objects for
// every pipeline stage, a flat text rendering of the same objects, and the
// SVG polygon plot. Key insertion order is preserved so output bytes are
// stable run to run.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ultra/bounds.hpp"
#include "ultra/classify.hpp"
#include "ultra/newton.hpp"
#include "ultra/torsion.hpp"

namespace ultra {

using Json = nlohmann::ordered_json;

// Integers render as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that; parsing accepts both forms.
Json int_json(const Int& v);
Int int_from_json(const Json& v, const std::string& what);

Json field_to_json(const FieldSpec& ks);
FieldSpec field_from_json(const Json& j);

using AnySeries = std::variant<Laurent<Rat>, Laurent<RatFun>>;

Json series_to_json(const Laurent<Rat>& f);
Json series_to_json(const Laurent<RatFun>& f);
AnySeries series_from_json(const Json& j);

Json newton_to_json(const NewtonData& nd);
Json polygon_to_json(const NewtonPolygon& poly);
Json verdict_to_json(const SpecialityVerdict& v);

template <class C>
Json cf_to_json(const CfReport<C>& r);

Json validation_to_json(const CfValidation& v);

template <class C>
Json bound_to_json(const BoundReport<C>& r);

Json enumeration_to_json(const EnumerationP& e);
Json enumeration_to_json(const Enumeration0& e);
Json decomposition_to_json(const RouDecomposition& d);
Json sweep_to_json(const DecompositionSweep& s);

std::string render_json(const Json& doc);
// Flat "dotted.path = value" lines over the identical report object.
std::string render_text(const Json& doc);

// Display-only plot of the support points and their lower hull.
std::string polygon_svg(const std::vector<PolygonVertex>& points, const NewtonPolygon& poly);

extern template Json cf_to_json<Rat>(const CfReport<Rat>&);
extern template Json cf_to_json<RatFun>(const CfReport<RatFun>&);
extern template Json bound_to_json<Rat>(const BoundReport<Rat>&);
extern template Json bound_to_json<RatFun>(const BoundReport<RatFun>&);

}  // namespace ultra
