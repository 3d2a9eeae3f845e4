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

#include "ultra/io.hpp"

#include <cstdio>

namespace ultra {

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

Int int_from_json(const Json& v, const std::string& what) {
  if (v.is_number_unsigned()) return Int(static_cast<unsigned long>(v.get<unsigned long long>()));
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      return Int(s);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(what + ": '" + s + "' is not an integer");
    }
  }
  throw std::invalid_argument(what + ": expected an integer or integer string");
}

namespace {

unsigned long ulong_field(const Json& j, const std::string& key, unsigned long fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw std::invalid_argument("field." + key + ": expected an integer");
  long long raw = v.get<long long>();
  if (raw < 1) throw std::invalid_argument("field." + key + ": must be positive");
  return static_cast<unsigned long>(raw);
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* a : allowed) {
      if (item.key() == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw std::invalid_argument(where + ": unknown key '" + item.key() + "'");
  }
}

}  // namespace

Json field_to_json(const FieldSpec& ks) {
  Json j;
  if (ks.characteristic == 0) {
    j["char"] = 0;
    j["p"] = int_json(ks.p);
    j["residue_deg"] = ks.residue_deg;
    j["ram_index"] = ks.ram_index;
  } else {
    j["char"] = ks.characteristic;
    j["residue_deg"] = ks.residue_deg;
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("field: expected an object");
  if (!j.contains("char")) throw std::invalid_argument("field: missing 'char'");
  Int ch = int_from_json(j.at("char"), "field.char");
  if (ch < 0) throw std::invalid_argument("field.char: must be 0 or a prime");
  if (ch == 0) {
    reject_unknown_keys(j, {"char", "p", "residue_deg", "ram_index"}, "field");
    if (!j.contains("p")) throw std::invalid_argument("field: char 0 requires 'p'");
    Int p = int_from_json(j.at("p"), "field.p");
    return FieldSpec::char0(p, ulong_field(j, "residue_deg", 1), ulong_field(j, "ram_index", 1));
  }
  // char p: the prime is the characteristic itself and there is no
  // ramification index to declare.
  reject_unknown_keys(j, {"char", "p", "residue_deg"}, "field");
  if (j.contains("p") && int_from_json(j.at("p"), "field.p") != ch)
    throw std::invalid_argument("field: 'p' disagrees with 'char'");
  if (!ch.fits_ulong_p()) throw std::invalid_argument("field.char: prime too large");
  return FieldSpec::charp(to_ulong(ch), ulong_field(j, "residue_deg", 1));
}

namespace {

template <class C>
Json series_to_json_impl(const Laurent<C>& f) {
  Json j;
  j["field"] = field_to_json(f.field());
  Json coeffs = Json::array();
  for (const auto& [n, c] : f.terms())
    coeffs.push_back(Json::array({int_json(n), coeff_traits<C>::str(c)}));
  j["coeffs"] = coeffs;
  return j;
}

template <class C, class ParseCoeff>
Laurent<C> fill_series(const FieldSpec& ks, const Json& coeffs, ParseCoeff parse_coeff) {
  Laurent<C> f(ks);
  bool have_prev = false;
  Int prev;
  for (const Json& entry : coeffs) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("coeffs: each entry must be [exponent, \"coefficient\"]");
    Int n = int_from_json(entry[0], "coeffs exponent");
    if (have_prev) {
      if (n == prev)
        throw std::invalid_argument("coeffs: duplicate exponent " + to_string(n));
      if (n < prev) throw std::invalid_argument("coeffs: exponents must be ascending");
    }
    prev = n;
    have_prev = true;
    if (!entry[1].is_string())
      throw std::invalid_argument("coeffs: coefficient at exponent " + to_string(n) +
                                  " must be a string");
    C c = parse_coeff(entry[1].template get<std::string>());
    if (coeff_traits<C>::is_zero(c))
      throw std::invalid_argument("coeffs: zero coefficient at exponent " + to_string(n));
    f.set(n, c);
  }
  return f;
}

}  // namespace

Json series_to_json(const Laurent<Rat>& f) { return series_to_json_impl(f); }
Json series_to_json(const Laurent<RatFun>& f) { return series_to_json_impl(f); }

AnySeries series_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("series: expected an object");
  reject_unknown_keys(j, {"field", "coeffs"}, "series");
  if (!j.contains("field") || !j.contains("coeffs"))
    throw std::invalid_argument("series: requires 'field' and 'coeffs'");
  FieldSpec ks = field_from_json(j.at("field"));
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) throw std::invalid_argument("coeffs: expected an array");
  if (ks.characteristic == 0)
    return fill_series<Rat>(ks, coeffs, [](const std::string& s) { return parse_rat(s); });
  unsigned long p = ks.characteristic;
  return fill_series<RatFun>(ks, coeffs,
                             [p](const std::string& s) { return RatFun::parse(p, s); });
}

Json newton_to_json(const NewtonData& nd) {
  Json j;
  j["vmin"] = nd.vmin.str();
  j["kidx"] = int_json(nd.kidx);
  j["Kidx"] = int_json(nd.Kidx);
  Json dom = Json::array();
  for (const Int& d : nd.dominant) dom.push_back(int_json(d));
  j["dominant_set"] = dom;
  return j;
}

Json polygon_to_json(const NewtonPolygon& poly) {
  Json verts = Json::array();
  for (const PolygonVertex& v : poly.vertices)
    verts.push_back(Json::array({int_json(v.n), to_string(v.v)}));
  Json segs = Json::array();
  for (const PolygonSegment& s : poly.segments()) {
    Json e;
    e["slope"] = to_string(s.slope);
    e["length"] = int_json(s.length);
    segs.push_back(e);
  }
  Json j;
  j["vertices"] = verts;
  j["segments"] = segs;
  return j;
}

Json verdict_to_json(const SpecialityVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["reason"] = to_string(v.reason);
  return j;
}

template <class C>
Json cf_to_json(const CfReport<C>& r) {
  Json j;
  j["case_tag"] = to_string(r.tag);
  j["c_f"] = int_json(r.cf);
  j["newton"] = newton_to_json(r.unit_newton);
  if (r.ftilde) j["ftilde"] = series_to_json(*r.ftilde);
  if (r.tilde_newton) j["ftilde_newton"] = newton_to_json(*r.tilde_newton);
  return j;
}

Json validation_to_json(const CfValidation& v) {
  Json j;
  j["pass"] = v.pass;
  j["draws"] = v.draws;
  j["zero_series_draws"] = v.zero_series_draws;
  j["worst_ratio"] = v.worst_ratio;
  Json routes;
  for (const auto& [route, count] : v.route_counts) routes[route] = count;
  j["routes"] = routes;
  if (v.worst) {
    Json w;
    w["k1"] = int_json(v.worst->k1);
    w["k2"] = int_json(v.worst->k2);
    w["b"] = v.worst->b;
    w["zero_count"] = int_json(v.worst->zero_count);
    w["limit"] = int_json(v.worst->limit);
    w["route"] = to_string(v.worst->route);
    w["ok"] = v.worst->ok;
    j["worst"] = w;
  }
  return j;
}

template <class C>
Json bound_to_json(const BoundReport<C>& r) {
  Json j;
  j["cf_report"] = cf_to_json(r.cf_report);
  if constexpr (std::is_same_v<C, Rat>) {
    j["p_part_cap"] = int_json(r.p_part_cap);
    j["k"] = r.k;
  }
  if (r.aux_newton) j["aux_newton"] = newton_to_json(*r.aux_newton);
  if (r.m) j["M"] = int_json(*r.m);
  if (r.bound) j["bound"] = int_json(*r.bound);
  j["shortcut_used"] = r.shortcut_used;
  j["expand_failed"] = r.expand_failed;
  if (r.expand_failed) j["error"] = r.error;
  return j;
}

namespace {

// Tower elements print in the generator variable x (t is the uniformizer).
std::string poly_str_x(const FpPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (long i = a.degree(); i >= 0; --i) {
    unsigned long c = a.coeff(static_cast<size_t>(i));
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

Json enumeration_to_json(const EnumerationP& e) {
  Json j;
  j["char"] = int_json(e.p);
  j["smax"] = e.smax;
  j["count"] = e.records.size();
  Json per;
  for (const auto& [s, c] : e.per_level) per[std::to_string(s)] = c;
  j["per_level"] = per;
  Json recs = Json::array();
  for (const TorsionRecordP& r : e.records) {
    Json x;
    x["s"] = r.s;
    x["zeta"] = poly_str_x(r.zeta);
    x["zeta_order"] = r.zeta_order;
    x["value"] = poly_str_x(r.value);
    x["value_order"] = r.value_order;
    recs.push_back(x);
  }
  j["records"] = recs;
  return j;
}

Json enumeration_to_json(const Enumeration0& e) {
  Json j;
  j["nmax"] = e.nmax;
  j["pk_cap"] = int_json(e.pk_cap);
  j["count"] = int_json(e.total());
  j["distinct_levels"] = e.records.size();
  Json recs = Json::array();
  for (const TorsionRecord0& r : e.records) {
    Json x;
    x["N"] = r.n;
    x["j"] = r.j;
    x["value_order"] = r.value_order;
    x["multiplicity"] = r.multiplicity;
    recs.push_back(x);
  }
  j["records"] = recs;
  return j;
}

Json decomposition_to_json(const RouDecomposition& d) {
  Json j;
  j["n"] = d.n;
  j["e"] = d.e;
  j["u"] = d.u;
  j["k1"] = d.k1;
  j["k2"] = d.k2;
  j["t1"] = d.t1;
  j["t2"] = d.t2;
  return j;
}

Json sweep_to_json(const DecompositionSweep& s) {
  Json j;
  j["pass"] = s.pass;
  j["nmax"] = s.nmax;
  j["pairs"] = s.pairs;
  j["max_e_ratio"] = s.max_e_ratio;
  j["max_k_ratio"] = s.max_k_ratio;
  if (s.failure) {
    Json f;
    f["a1"] = s.failure->a1;
    f["a2"] = s.failure->a2;
    f["n"] = s.failure->n;
    j["failure"] = f;
  }
  return j;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

bool all_scalar(const Json& a) {
  for (const Json& v : a)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void walk(const Json& v, const std::string& path, std::string& out) {
  if (v.is_object()) {
    if (v.empty()) {
      out += path + " = {}\n";
      return;
    }
    for (const auto& item : v.items())
      walk(item.value(), path.empty() ? item.key() : path + "." + item.key(), out);
  } else if (v.is_array() && !all_scalar(v)) {
    size_t i = 0;
    for (const Json& e : v) walk(e, path + "[" + std::to_string(i++) + "]", out);
  } else if (v.is_array()) {
    std::string line = path + " = [";
    bool first = true;
    for (const Json& e : v) {
      if (!first) line += ", ";
      line += scalar_str(e);
      first = false;
    }
    out += line + "]\n";
  } else {
    out += path + " = " + scalar_str(v) + "\n";
  }
}

std::string fmt2(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::string render_text(const Json& doc) {
  std::string out;
  walk(doc, "", out);
  return out;
}

std::string polygon_svg(const std::vector<PolygonVertex>& points, const NewtonPolygon& poly) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const PolygonVertex& p : points) {
    double x = Rat(p.n).get_d();
    double y = p.v.get_d();
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax - xmin < 1e-9) xmax = xmin + 1;
  if (ymax - ymin < 1e-9) ymax = ymin + 1;

  const double w = 480, h = 320, m = 48;
  auto px = [&](double x) { return m + (x - xmin) / (xmax - xmin) * (w - 2 * m); };
  auto py = [&](double y) { return h - m - (y - ymin) / (ymax - ymin) * (h - 2 * m); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt2(w) + " " + fmt2(h) +
         "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <line x1=\"" + fmt2(m) + "\" y1=\"" + fmt2(h - m) + "\" x2=\"" + fmt2(w - m) +
         "\" y2=\"" + fmt2(h - m) + "\" stroke=\"#999\"/>\n";
  svg += "  <line x1=\"" + fmt2(m) + "\" y1=\"" + fmt2(m) + "\" x2=\"" + fmt2(m) + "\" y2=\"" +
         fmt2(h - m) + "\" stroke=\"#999\"/>\n";
  if (!poly.vertices.empty()) {
    std::string pts;
    for (const PolygonVertex& v : poly.vertices) {
      if (!pts.empty()) pts += " ";
      pts += fmt2(px(Rat(v.n).get_d())) + "," + fmt2(py(v.v.get_d()));
    }
    svg += "  <polyline points=\"" + pts +
           "\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n";
  }
  for (const PolygonVertex& p : points) {
    svg += "  <circle cx=\"" + fmt2(px(Rat(p.n).get_d())) + "\" cy=\"" +
           fmt2(py(p.v.get_d())) + "\" r=\"4\" fill=\"#d1242f\"/>\n";
  }
  for (const PolygonVertex& v : poly.vertices) {
    svg += "  <text x=\"" + fmt2(px(Rat(v.n).get_d()) + 6) + "\" y=\"" +
           fmt2(py(v.v.get_d()) - 6) + "\" font-size=\"11\" font-family=\"monospace\">(" +
           to_string(v.n) + ", " + to_string(v.v) + ")</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

template Json cf_to_json<Rat>(const CfReport<Rat>&);
template Json cf_to_json<RatFun>(const CfReport<RatFun>&);
template Json bound_to_json<Rat>(const BoundReport<Rat>&);
template Json bound_to_json<RatFun>(const BoundReport<RatFun>&);

}  // namespace ultra
