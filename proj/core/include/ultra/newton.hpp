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

#include <vector>

#include "ultra/laurent.hpp"

namespace ultra {

/* Sup-norm data of f on the sphere of radius p^(-s): the minimum of
 * v(f_n) + s*n over the support, together with every index attaining it.
 * kidx/Kidx are the smallest and largest dominant indices; for the zero
 * series vmin is infinity and the dominant set is empty. */
struct NewtonData {
  Valuation vmin;
  Int kidx = 0;
  Int Kidx = 0;
  std::vector<Int> dominant;  // ascending

  bool trivial() const { return dominant.empty(); }
  Int width() const { return Kidx - kidx; }

  friend bool operator==(const NewtonData& a, const NewtonData& b) {
    return a.vmin == b.vmin && a.kidx == b.kidx && a.Kidx == b.Kidx && a.dominant == b.dominant;
  }
  friend bool operator!=(const NewtonData& a, const NewtonData& b) { return !(a == b); }
};

template <class C>
NewtonData newton_at(const Laurent<C>& f, const Rat& slope) {
  NewtonData nd;
  nd.vmin = Valuation::infinity();
  for (const auto& [n, c] : f.terms()) {
    Valuation v = coeff_traits<C>::val(f.field(), c) + Valuation(slope * Rat(n));
    if (v < nd.vmin) {
      nd.vmin = v;
      nd.dominant.clear();
    }
    if (v == nd.vmin) nd.dominant.push_back(n);
  }
  if (!nd.dominant.empty()) {
    nd.kidx = nd.dominant.front();
    nd.Kidx = nd.dominant.back();
  }
  return nd;
}

// Number of zeros of absolute value p^(-s), counted with multiplicity:
// the horizontal extent of the dominant set. Rejects the zero series.
template <class C>
Int zeros_on_sphere(const Laurent<C>& f, const Rat& slope) {
  if (f.is_zero())
    throw std::invalid_argument("zeros_on_sphere: zero series has no zero count");
  return newton_at(f, slope).width();
}

struct PolygonVertex {
  Int n;
  Rat v;

  friend bool operator==(const PolygonVertex& a, const PolygonVertex& b) {
    return a.n == b.n && a.v == b.v;
  }
};

// A maximal straight face of the lower hull; a series with zeros at radius
// p^(-s) shows a face of slope -s whose horizontal length is the zero count.
struct PolygonSegment {
  Rat slope;
  Int length;
};

struct NewtonPolygon {
  std::vector<PolygonVertex> vertices;  // strictly increasing n, slopes strictly increasing
  std::vector<PolygonSegment> segments() const {
    std::vector<PolygonSegment> out;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
      Rat run(vertices[i + 1].n - vertices[i].n);
      out.push_back({(vertices[i + 1].v - vertices[i].v) / run, vertices[i + 1].n - vertices[i].n});
    }
    return out;
  }
};

// Lower convex hull of the points (n, v(f_n)). Collinear interior points are
// dropped, so consecutive slopes strictly increase. Rejects the zero series.
template <class C>
NewtonPolygon newton_polygon(const Laurent<C>& f) {
  if (f.is_zero())
    throw std::invalid_argument("newton_polygon: zero series has no polygon");
  std::vector<PolygonVertex> hull;
  for (const auto& [n, c] : f.terms()) {
    PolygonVertex pt{n, coeff_traits<C>::val(f.field(), c).value()};
    while (hull.size() >= 2) {
      const PolygonVertex& a = hull[hull.size() - 2];
      const PolygonVertex& b = hull[hull.size() - 1];
      // cross <= 0: b on or above segment a->pt, so it is not a lower vertex.
      Rat cross = Rat(b.n - a.n) * (pt.v - a.v) - (b.v - a.v) * Rat(pt.n - a.n);
      if (sgn(cross) <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(std::move(pt));
  }
  return NewtonPolygon{std::move(hull)};
}

}  // namespace ultra
