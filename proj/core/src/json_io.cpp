// Copyright 2026 The chordset Authors
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

#include "chordset/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace chordset {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Shortest of a few fixed precisions that round-trips, for stable output.
double tidy(double v) {
  for (const int digits : {6, 9, 12, 15}) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    const double back = std::strtod(buf, nullptr);
    if (std::abs(back - v) <= 1e-12 * std::max(1.0, std::abs(v))) return back;
  }
  return v;
}

Json multiplicity_json(int m) {
  if (m == kContinuum) return "continuum";
  return m;
}

Json pair_list(const std::vector<std::pair<double, double>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({tidy(a), tidy(b)});
  return out;
}

Json closed_json(const ClosedInterval& c) { return {to_json(c.lo), to_json(c.hi)}; }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view text) {
  const Rational r = Rational::parse(text);
  if (!r.is_integer()) throw std::invalid_argument("expected an integer, got \"" + std::string(text) + "\"");
  return r.numerator().convert_to<std::int64_t>();
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) {
    throw std::invalid_argument("exact value must be a \"p/q\" string, got " + j.dump());
  }
  return Rational::parse(j.get<std::string>());
}

Json to_json(const OpenIntervalUnion& u) {
  Json out = Json::array();
  for (const auto& i : u.intervals()) out.push_back({to_json(i.lo()), to_json(i.hi())});
  return out;
}

OpenIntervalUnion union_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("interval union must be a JSON array");
  std::vector<OpenInterval> raw;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw std::invalid_argument("interval must be a [lo, hi] pair, got " + item.dump());
    }
    Rational lo = rational_from_json(item[0]);
    Rational hi = rational_from_json(item[1]);
    raw.emplace_back(std::move(lo), std::move(hi));
  }
  return OpenIntervalUnion::normalize(std::move(raw));
}

OpenIntervalUnion parse_union_text(std::string_view text) {
  std::vector<OpenInterval> raw;
  if (text.empty()) return {};
  for (const auto piece : split(text, ';')) {
    const auto ends = split(piece, ',');
    if (ends.size() != 2) {
      throw std::invalid_argument("interval must be lo,hi, got \"" + std::string(piece) + "\"");
    }
    Rational lo = Rational::parse(ends[0]);
    Rational hi = Rational::parse(ends[1]);
    raw.emplace_back(std::move(lo), std::move(hi));
  }
  return OpenIntervalUnion::normalize(std::move(raw));
}

std::string union_to_text(const OpenIntervalUnion& u) {
  std::string out;
  for (const auto& i : u.intervals()) {
    if (!out.empty()) out += ';';
    out += i.lo().to_string() + "," + i.hi().to_string();
  }
  return out;
}

Json to_json(const HopfSet& h) {
  Json out = {{"v", to_json(h.v())}, {"tail", true}};
  if (h.is_positive_reals()) out["includes_one"] = true;
  return out;
}

HopfSet hopf_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("v")) throw std::invalid_argument("Hopf set needs a \"v\" field");
  if (j.contains("tail") && j["tail"] != true) {
    throw std::invalid_argument("Hopf sets always carry the tail (1, inf)");
  }
  if (j.value("includes_one", false)) return HopfSet::positive_reals();
  return make_hopf(union_from_json(j["v"]));
}

Json to_json(const ChordComplementReport& r) {
  Json pieces = Json::array();
  for (const auto& c : r.closed_pieces) pieces.push_back(closed_json(c));
  Json points = Json::array();
  for (const auto& p : r.isolated_points) points.push_back(to_json(p));
  return {{"closed_pieces", pieces}, {"isolated_points", points}};
}

ChordComplementReport complement_report_from_json(const Json& j) {
  ChordComplementReport out;
  for (const auto& c : j.at("closed_pieces")) {
    out.closed_pieces.push_back({rational_from_json(c.at(0)), rational_from_json(c.at(1))});
  }
  for (const auto& p : j.at("isolated_points")) out.isolated_points.push_back(rational_from_json(p));
  return out;
}

Json to_json(const IntegerHopfSet& s) {
  Json intervals = Json::array();
  for (const auto& [lo, hi] : s.finite_intervals) intervals.push_back({lo, hi});
  return {{"intervals", intervals}, {"tail", s.tail_start}};
}

IntegerHopfSet integer_set_from_json(const Json& j) {
  IntegerHopfSet out;
  for (const auto& item : j.at("intervals")) {
    out.finite_intervals.emplace_back(item.at(0).get<std::int64_t>(), item.at(1).get<std::int64_t>());
  }
  out.tail_start = j.at("tail").get<std::int64_t>();
  return out;
}

IntegerHopfSet parse_integer_set_text(std::string_view text) {
  const auto pieces = split(text, ';');
  IntegerHopfSet out;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const auto ends = split(pieces[i], ',');
    if (ends.size() != 2) {
      throw std::invalid_argument("interval must be lo,hi, got \"" + std::string(pieces[i]) + "\"");
    }
    const std::int64_t lo = parse_int(ends[0]);
    out.finite_intervals.emplace_back(lo, parse_int(ends[1]));
  }
  out.tail_start = parse_int(pieces.back());
  return out;
}

Json to_json(const VerifyResult& r) {
  Json out = {{"ok", r.ok}, {"failure", to_string(r.failure)}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

Json census_line(const CensusEntry& e) {
  Json out = to_json(e.set);
  out["n"] = e.n_intervals;
  out["picksinwn"] = e.picksinwn();
  out["origin"] = to_string(e.origin);
  return out;
}

Json to_json(const ScanParams& p) {
  return {{"ell_res", tidy(p.ell_res)},
          {"x_res", tidy(p.x_res)},
          {"tol", tidy(p.tol)},
          {"cluster_radius", tidy(p.cluster_radius)},
          {"bisection_depth", p.bisection_depth}};
}

Json to_json(const ChordScanReport& r) {
  Json rle = Json::array();
  for (std::size_t k = 0; k < r.presence.size();) {
    std::size_t j = k;
    while (j < r.presence.size() && r.presence[j] == r.presence[k]) ++j;
    rle.push_back({r.presence[k] != 0 ? 1 : 0, j - k});
    k = j;
  }
  Json mult = Json::array();
  for (std::size_t k = 0; k < r.multiplicity.size(); ++k) {
    if (r.multiplicity[k] != 0) {
      mult.push_back({tidy(r.ell_at(static_cast<std::int64_t>(k))), multiplicity_json(r.multiplicity[k])});
    }
  }
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    probes.push_back({{"ell", to_json(p.ell)},
                      {"present", p.present},
                      {"multiplicity", multiplicity_json(p.multiplicity)}});
  }
  return {{"function", r.function},
          {"params", to_json(r.params)},
          {"ell_steps", r.ell_steps},
          {"presence_rle", rle},
          {"h_approx", pair_list(r.h_approx)},
          {"h_star_approx", pair_list(r.h_star_approx)},
          {"multiplicity", mult},
          {"probes", probes},
          {"grid_fraction", tidy(measure_check(r))},
          {"cell_measure", to_json(cell_measure(r))}};
}

std::string plot_csv(const ChordScanReport& r) {
  std::string out = "ell,presence,multiplicity\n";
  for (std::size_t k = 0; k < r.presence.size(); ++k) {
    const int m = r.multiplicity[k];
    out += format_double(tidy(r.ell_at(static_cast<std::int64_t>(k)))) + "," +
           (r.presence[k] != 0 ? "1" : "0") + "," +
           (m == kContinuum ? std::string("continuum") : std::to_string(m)) + "\n";
  }
  return out;
}

Json to_json(const ChordVector& v) {
  Json counts = Json::array();
  for (const int c : v.counts) counts.push_back(multiplicity_json(c));
  return {{"n", v.n},
          {"counts", counts},
          {"first_ok", v.first_ok},
          {"last_ok", v.last_ok},
          {"sum_ok", v.sum_ok},
          {"pair_count", v.has_continuum ? Json("continuum") : Json(v.pair_count)},
          {"distinct_lengths", v.distinct_lengths}};
}

Json to_json(const AgreementReport& r) {
  Json dis = Json::array();
  for (const double d : r.disagreements) dis.push_back(tidy(d));
  return {{"n", r.n},
          {"agree", r.agree},
          {"total", r.total},
          {"fraction", tidy(r.fraction())},
          {"disagreements", dis}};
}

Json to_json(const InvarianceReport& r) {
  Json mismatches = Json::array();
  for (const auto& [name, ells] : r.mismatches) {
    Json list = Json::array();
    for (const double e : ells) list.push_back(tidy(e));
    mismatches.push_back({{"function", name}, {"ell", list}});
  }
  return {{"ok", r.ok}, {"mismatches", mismatches}};
}

Json to_json(const SynthesisResult& r, bool include_report) {
  Json nodes = Json::array();
  if (const auto* pl = std::get_if<PiecewiseLinear>(&r.candidate.kind)) {
    for (const auto& [x, y] : pl->nodes) nodes.push_back({tidy(x), tidy(y)});
  }
  Json residual = Json::array();
  for (const double d : r.residual) residual.push_back(tidy(d));
  Json out = {{"target", to_json(r.target)},
              {"family", to_string(r.family)},
              {"candidate", to_string(r.candidate)},
              {"nodes", nodes},
              {"conjectural", r.conjectural},
              {"accepted", r.accepted()},
              {"residual", residual}};
  if (include_report) out["verification"] = to_json(r.verification);
  return out;
}

}  // namespace chordset
