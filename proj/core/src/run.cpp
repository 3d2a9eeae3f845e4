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

#include "ultra/run.hpp"

#include <fstream>

namespace ultra {

namespace {

constexpr size_t kClassifyTrials = 100;
constexpr long kClassifyBox = 3;

AnySeries load_series(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("--input FILE is required for this subcommand");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return series_from_json(doc);
}

template <class C>
std::vector<PolygonVertex> support_points(const Laurent<C>& f) {
  std::vector<PolygonVertex> pts;
  for (const auto& [n, c] : f.terms())
    pts.push_back({n, coeff_traits<C>::val(f.field(), c).value()});
  return pts;
}

struct Outcome {
  Json report;
  int exit_code = 0;
  std::string error;
};

Outcome do_newton(const RunConfig& config) {
  Rat slope = parse_rat(config.slope);
  AnySeries any = load_series(config.input_path);
  Outcome out;
  std::visit(
      [&](const auto& f) {
        out.report["slope"] = to_string(slope);
        out.report["newton"] = newton_to_json(newton_at(f, slope));
        if (!f.is_zero()) {
          NewtonPolygon poly = newton_polygon(f);
          out.report["polygon"] = polygon_to_json(poly);
          if (!config.plot_path.empty()) {
            std::ofstream plot(config.plot_path);
            if (!plot) throw std::invalid_argument("cannot open plot file '" + config.plot_path + "'");
            plot << polygon_svg(support_points(f), poly);
          }
        } else if (!config.plot_path.empty()) {
          throw std::invalid_argument("cannot plot the zero series");
        }
      },
      any);
  return out;
}

Outcome do_classify(const RunConfig& config) {
  AnySeries any = load_series(config.input_path);
  Outcome out;
  std::visit(
      [&](const auto& f) {
        SpecialityVerdict verdict = is_special(f);
        out.report["speciality"] = verdict_to_json(verdict);
        if (f.is_zero()) return;
        out.report["cf_report"] = cf_to_json(compute_cf(f));
        if (verdict.verdict == Speciality::NotSpecial) {
          out.report["validation"] = validation_to_json(
              validate_cf(f, kClassifyTrials, Int(kClassifyBox), config.seed));
        }
      },
      any);
  return out;
}

Outcome do_bound(const RunConfig& config) {
  Outcome out;
  if (config.cor_example) {
    out.report["p"] = int_json(config.cor_p);
    out.report["e"] = config.cor_e;
    out.report["n"] = int_json(config.cor_n);
    out.report["bound"] = int_json(cor_example_bound(config.cor_p, config.cor_e, config.cor_n));
    return out;
  }
  AnySeries any = load_series(config.input_path);
  if (auto* fp = std::get_if<Laurent<RatFun>>(&any)) {
    out.report = bound_to_json(bound_charp(*fp));
    return out;
  }
  Budget budget{Int(config.budget)};
  BoundReport<Rat> rep = bound_char0(std::get<Laurent<Rat>>(any), &budget);
  out.report = bound_to_json(rep);
  if (rep.expand_failed) {
    out.exit_code = 1;
    out.error = rep.error;
  }
  return out;
}

// The oracle horizon for characteristic zero: the p-part is honestly capped
// by Prop-style p^k for non-special inputs; special inputs have torsion at
// every level, so the horizon is just nmax.
Int char0_pk_cap(const Laurent<Rat>& f, unsigned long nmax) {
  if (f.is_zero() || is_special(f).verdict != Speciality::NotSpecial) return Int(nmax);
  CfReport<Rat> cf = compute_cf(f);
  PPartCap cap = p_part_cap(cf.cf, f.field().ram_index, f.field().p);
  return pow_int(f.field().p, cap.k);
}

Outcome do_enumerate(const RunConfig& config) {
  AnySeries any = load_series(config.input_path);
  Outcome out;
  if (auto* fp = std::get_if<Laurent<RatFun>>(&any)) {
    out.report = enumeration_to_json(enumerate_charp(*fp, config.smax));
    return out;
  }
  const Laurent<Rat>& f = std::get<Laurent<Rat>>(any);
  Int pk_cap = char0_pk_cap(f, config.nmax);
  out.report = enumeration_to_json(enumerate_char0(f, config.nmax, pk_cap, config.phi_ceiling));
  return out;
}

Outcome do_verify(const RunConfig& config) {
  AnySeries any = load_series(config.input_path);
  Outcome out;
  Int count, bound;
  Json bound_json, enum_json;
  if (auto* fp = std::get_if<Laurent<RatFun>>(&any)) {
    BoundReport<RatFun> rep = bound_charp(*fp);
    EnumerationP oracle = enumerate_charp(*fp, config.smax);
    count = Int(oracle.records.size());
    bound = *rep.bound;
    bound_json = bound_to_json(rep);
    enum_json = enumeration_to_json(oracle);
    out.report["count"] = int_json(count);
    out.report["bound"] = int_json(bound);
    out.report["ok"] = count <= bound;
    out.report["smax"] = config.smax;
  } else {
    const Laurent<Rat>& f = std::get<Laurent<Rat>>(any);
    Budget budget{Int(config.budget)};
    BoundReport<Rat> rep = bound_char0(f, &budget);
    if (rep.expand_failed)
      throw std::invalid_argument("verify: bound expansion failed: " + rep.error);
    Int pk_cap = pow_int(f.field().p, rep.k);
    Enumeration0 oracle = enumerate_char0(f, config.nmax, pk_cap, config.phi_ceiling);
    count = oracle.total();
    bound = *rep.bound;
    bound_json = bound_to_json(rep);
    enum_json = enumeration_to_json(oracle);
    out.report["count"] = int_json(count);
    out.report["bound"] = int_json(bound);
    out.report["ok"] = count <= bound;
    out.report["nmax"] = config.nmax;
    out.report["pk_cap"] = int_json(pk_cap);
  }
  out.report["bound_report"] = bound_json;
  out.report["enumeration"] = enum_json;
  if (count > bound) {
    // A sound proof makes this unreachable; seeing it means a defect.
    out.exit_code = 2;
    out.error = "verify: oracle count " + to_string(count) + " exceeds bound " + to_string(bound);
  }
  return out;
}

Outcome do_decompose(const RunConfig& config) {
  if (!config.have_decompose_args)
    throw std::invalid_argument("decompose requires positional arguments: a1 a2 n");
  RouDecomposition d = decompose_pair(config.dec_a1, config.dec_a2, config.dec_n);
  Outcome out;
  out.report["a1"] = config.dec_a1;
  out.report["a2"] = config.dec_a2;
  Json dj = decomposition_to_json(d);
  for (const auto& item : dj.items()) out.report[item.key()] = item.value();
  return out;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    if (config.format != "json" && config.format != "text")
      throw std::invalid_argument("--format must be json or text");
    if (config.budget < 1) throw std::invalid_argument("--budget must be positive");
    Outcome out;
    if (config.command == "newton")
      out = do_newton(config);
    else if (config.command == "classify")
      out = do_classify(config);
    else if (config.command == "bound")
      out = do_bound(config);
    else if (config.command == "enumerate")
      out = do_enumerate(config);
    else if (config.command == "verify")
      out = do_verify(config);
    else if (config.command == "decompose")
      out = do_decompose(config);
    else
      throw std::invalid_argument("unknown subcommand '" + config.command + "'");
    result.exit_code = out.exit_code;
    result.output = config.format == "json" ? render_json(out.report) : render_text(out.report);
    if (!out.error.empty()) result.error = "error: " + out.error + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.output.clear();
    result.error = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace ultra
