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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "chordset/json_io.hpp"
#include "oracles.hpp"

using namespace chordset;

namespace {
Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }
}  // namespace

TEST_CASE("rationals are strings") {
  CHECK(to_json(q(3, 11)) == Json("3/11"));
  CHECK(to_json(q(4)) == Json("4"));
  CHECK(rational_from_json(Json("-6/8")) == q(-3, 4));
  CHECK_THROWS(rational_from_json(Json(0.5)));
  CHECK_THROWS(rational_from_json(Json(1)));
  CHECK_THROWS(rational_from_json(Json("0.5")));
}

TEST_CASE("union round trips") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto u = testing::random_union(rng, 30, 4);
    CHECK(union_from_json(to_json(u)) == u);
    CHECK(union_from_json(Json::parse(to_json(u).dump())) == u);
    CHECK(parse_union_text(union_to_text(u)) == u);
  }
  CHECK(parse_union_text("1/3,1/2;2/3,1") == canonical_vn(2).v());
  CHECK(union_to_text(canonical_vn(2).v()) == "1/3,1/2;2/3,1");
  CHECK_THROWS(parse_union_text("1/2,1/3"));
  CHECK_THROWS(parse_union_text("0.3,0.5"));
  CHECK_THROWS(parse_union_text("1/3"));
}

TEST_CASE("hopf set round trips") {
  for (int n = 1; n <= 6; ++n) {
    const auto h = canonical_vn(n);
    const Json j = to_json(h);
    CHECK(j.at("tail") == true);
    CHECK(hopf_from_json(j) == h);
  }
  const auto pr = HopfSet::positive_reals();
  CHECK(hopf_from_json(to_json(pr)) == pr);
  Json bad = to_json(canonical_vn(1));
  bad["v"] = Json::array({Json::array({"1/3", "1/2"})});
  CHECK_THROWS(hopf_from_json(bad));
}

TEST_CASE("complement report round trips") {
  for (int n = 1; n <= 5; ++n) {
    const auto r = symmetry_identity(canonical_vn(n));
    const auto back = complement_report_from_json(to_json(r));
    CHECK(back.closed_pieces == r.closed_pieces);
    CHECK(back.isolated_points == r.isolated_points);
  }
}

TEST_CASE("integer set round trips") {
  std::vector<IntegerHopfSet> sets = n3_family(9);
  sets.push_back(four_interval_example());
  sets.push_back(eight_interval_example());
  for (const auto& s : sets) {
    CHECK(integer_set_from_json(to_json(s)) == s);
    CHECK(integer_set_from_json(Json::parse(to_json(s).dump())) == s);
  }
  CHECK(parse_integer_set_text("4,5;6,7;8,12;12") == four_interval_example());
  CHECK_THROWS(parse_integer_set_text("4,5,6;7"));
  CHECK_THROWS(parse_integer_set_text("4,5;6,7"));
  CHECK_THROWS(parse_integer_set_text("a,b;3"));
}

TEST_CASE("census lines") {
  const auto entries = enumerate(3, 12);
  REQUIRE_FALSE(entries.empty());
  const Json line = census_line(entries.front());
  CHECK(line.at("n") == 3);
  CHECK(line.contains("picksinwn"));
  CHECK(line.at("origin") == to_string(entries.front().origin));
  CHECK(integer_set_from_json(line) == entries.front().set);
  const Json vr = to_json(verify(IntegerHopfSet{{{2, 4}}, 4}));
  CHECK(vr.at("ok") == false);
}

TEST_CASE("scan report serialization") {
  const auto r = scan(make_single_sine(), {}, {Rational(1, 2)});
  const Json j = to_json(r);
  CHECK(j.at("ell_steps") == 1000);
  std::int64_t total = 0;
  for (const auto& run : j.at("presence_rle")) total += run.at(1).get<std::int64_t>();
  CHECK(total == 1001);
  CHECK(j.at("probes").size() == 1);
  CHECK(j.at("cell_measure") == "501/1000");
  CHECK(Json::parse(j.dump()) == j);
  const std::string csv = plot_csv(r);
  CHECK(csv.rfind("ell,presence,multiplicity\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1002);
}

TEST_CASE("report serializers emit objects") {
  CHECK(to_json(chord_vector(make_single_sine(), 4)).is_object());
  CHECK(to_json(ScanParams{}).at("ell_res") == 0.001);
  const auto rep = invariance_check(make_piecewise_linear({{0, 0}, {0.5, 1}, {1, 0}}));
  CHECK(to_json(rep).at("ok") == true);
  const auto synth = synthesize(canonical_vn(1));
  CHECK(to_json(synth, false).is_object());
  CHECK(to_json(synth, true).dump().size() > to_json(synth, false).dump().size());
}
