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
#include <cmath>
#include <stdexcept>

#include "chordset/chord_scan.hpp"
#include "chordset/errors.hpp"
#include "chordset/hopf.hpp"
#include "fixtures.hpp"

using namespace chordset;

namespace {

enum class Verdict { kPresent, kAbsent, kUnclear };

// Dense sampling of d(x) = f(x + ell) - f(x): a strict sign change or an exact
// zero proves a chord; a minimum of |d| well above the sampling error proves
// there is none.
Verdict oracle_chord(const FunctionSpec& f, double ell, int samples = 20000) {
  const double span = 1.0 - ell;
  double prev = 0.0;
  double min_abs = INFINITY;
  for (int i = 0; i <= samples; ++i) {
    const double x = span * i / samples;
    const double d = evaluate(f, std::min(1.0, x + ell)) - evaluate(f, x);
    if (d == 0.0) return Verdict::kPresent;
    if (i > 0 && (d > 0) != (prev > 0)) return Verdict::kPresent;
    min_abs = std::min(min_abs, std::abs(d));
    prev = d;
  }
  return min_abs > 1e-3 ? Verdict::kAbsent : Verdict::kUnclear;
}

}  // namespace

TEST_CASE("chord_present on the single sine") {
  const auto sine = make_single_sine();
  for (double ell : {0.05, 0.25, 0.3, 0.5, 1.0}) {
    CAPTURE(ell);
    const auto det = chord_present(sine, ell);
    REQUIRE(det.present);
    for (double x : det.witnesses) {
      CHECK(x >= 0.0);
      CHECK(x <= 1.0 - ell + 1e-12);
      CHECK(std::abs(evaluate(sine, std::min(1.0, x + ell)) - evaluate(sine, x)) < 1e-8);
    }
  }
  for (double ell : {0.51, 0.7, 0.99}) CHECK_FALSE(chord_present(sine, ell).present);
}

TEST_CASE("chord_present agrees with dense sampling") {
  for (const auto& [name, f] : testing::corpus()) {
    CAPTURE(name);
    int decided = 0;
    for (int k = 1; k <= 97; ++k) {
      const double ell = k / 97.0;
      const Verdict v = oracle_chord(f, ell);
      if (v == Verdict::kUnclear) continue;
      ++decided;
      CAPTURE(ell);
      CHECK(chord_present(f, ell).present == (v == Verdict::kPresent));
    }
    CHECK(decided >= 60);
  }
}

TEST_CASE("sine multiplicities") {
  const auto sine = make_single_sine();
  CHECK(chord_multiplicity(sine, 0.25) == 2);  // x = 1/8 and 5/8
  CHECK(chord_multiplicity(sine, 0.5) == 2);   // x = 0 and 1/2
  CHECK(chord_multiplicity(sine, 0.75) == 0);
  CHECK(chord_multiplicity(sine, 1.0) == 1);
  const auto det = chord_present(sine, 0.5);
  CHECK_FALSE(det.continuum);
}

TEST_CASE("flat stretches report a continuum") {
  const auto trap = make_piecewise_linear({{0, 0}, {0.25, 1}, {0.75, 1}, {1, 0}});
  const auto det = chord_present(trap, 0.1);
  CHECK(det.present);
  CHECK(det.continuum);
  CHECK(chord_multiplicity(trap, 0.1) == kContinuum);
  CHECK(chord_multiplicity(trap, 0.6) == 1);
}

TEST_CASE("scan resolution validation") {
  const auto sine = make_single_sine();
  ScanParams p;
  p.ell_res = 0.3;
  CHECK_THROWS_AS(scan(sine, p), std::invalid_argument);
  p.ell_res = 0.0015;
  CHECK_THROWS_AS(scan(sine, p), std::invalid_argument);
  p = ScanParams{};
  p.x_res = 0.02;
  CHECK_THROWS_AS(scan(sine, p), std::invalid_argument);
}

TEST_CASE("scan of the single sine") {
  const auto r = scan(make_single_sine(), {}, {Rational(1, 2), Rational(2, 3)});
  CHECK(r.ell_steps == 1000);
  REQUIRE(r.presence.size() == 1001);
  CHECK(r.present_at(0.5));
  CHECK(r.present_at(1.0));
  CHECK_FALSE(r.present_at(0.501));
  REQUIRE(r.h_star_approx.size() == 1);
  CHECK(r.h_star_approx[0].first == doctest::Approx(0.5005));
  CHECK(r.h_star_approx[0].second == doctest::Approx(0.9995));
  CHECK(cell_measure(r) == Rational(501, 1000));
  CHECK(measure_check(r) == doctest::Approx(502.0 / 1001.0));
  CHECK(h_approx_length(r) == doctest::Approx(0.5));
  REQUIRE(r.probe(Rational(1, 2)) != nullptr);
  CHECK(r.probe(Rational(1, 2))->present);
  CHECK_FALSE(r.probe(Rational(2, 3))->present);
  CHECK(r.probe(Rational(1, 3)) == nullptr);
  CHECK(residual_against(r, canonical_vn(1), 2e-3).empty());
}

TEST_CASE("scan is independent of the worker count") {
  const auto f = make_levy(Rational(3, 11));
  ScanParams one;
  ScanParams many;
  many.jobs = 3;
  const auto a = scan(f, one);
  const auto b = scan(f, many);
  CHECK(a.presence == b.presence);
  CHECK(a.multiplicity == b.multiplicity);
}

TEST_CASE("halving the resolution keeps the chord set stable") {
  for (const char* text : {"sine", "sinesum:3", "levy:3/11", "pl:0,0;0.2,1;0.6,-1;1,0"}) {
    CAPTURE(text);
    const auto f = parse_function(text);
    ScanParams fine;
    fine.ell_res = 5e-4;
    const auto coarse_r = scan(f);
    const auto fine_r = scan(f, fine);
    CHECK(std::abs(measure_check(coarse_r) - measure_check(fine_r)) < 5e-3);
    CHECK(coarse_r.h_star_approx.size() == fine_r.h_star_approx.size());
    for (std::size_t i = 0; i < std::min(coarse_r.h_star_approx.size(), fine_r.h_star_approx.size()); ++i) {
      CHECK(std::abs(coarse_r.h_star_approx[i].first - fine_r.h_star_approx[i].first) < 2e-3);
      CHECK(std::abs(coarse_r.h_star_approx[i].second - fine_r.h_star_approx[i].second) < 2e-3);
    }
  }
}

TEST_CASE("the Levy function misses its own period") {
  const auto r = scan(make_levy(Rational(3, 11)), {}, {Rational(3, 11)});
  CHECK_FALSE(r.probe(Rational(3, 11))->present);
  CHECK(measure_check(r) < 1.0);
}

TEST_CASE("sign changes and the Levit bound") {
  CHECK(sign_changes(make_single_sine()) == 1);
  CHECK(sign_changes(make_piecewise_linear({{0, 0}, {0.5, 1}, {1, 0}})) == 0);
  CHECK(sign_changes(make_piecewise_linear({{0, 0}, {0.2, 1}, {0.6, -1}, {1, 0}})) == 1);
  for (const auto& [name, f] : testing::corpus()) {
    CAPTURE(name);
    const auto r = scan(f);
    const auto lc = levit_bound_check(f, r);
    CHECK(lc.ok);
    CHECK(lc.missing.empty());
    CHECK(lc.beta == doctest::Approx(1.0 / ((lc.sign_changes + 3) / 2)));
  }
}

TEST_CASE("non-isolation of reciprocals") {
  const auto r = scan(make_single_sine());
  REQUIRE(nonisolated_check(r, 2).has_value());
  CHECK(*nonisolated_check(r, 2));
  for (int m = 2; m <= 10; ++m) CHECK(nonisolated_check(r, m).value_or(true));
}

TEST_CASE("chord vectors") {
  const auto v = chord_vector(make_single_sine(), 4);
  CHECK(v.counts == std::vector<int>{2, 2, 0, 1});
  CHECK(v.first_ok);
  CHECK(v.last_ok);
  CHECK(v.sum_ok);
  CHECK(v.pair_count == 5);
  CHECK(v.distinct_lengths == 3);
  CHECK_FALSE(v.has_continuum);
  for (const auto& [name, f] : testing::corpus()) {
    CAPTURE(name);
    for (int n = 1; n <= 6; ++n) {
      const auto cv = chord_vector_unchecked(f, n);
      CHECK(cv.first_ok);
      CHECK(cv.sum_ok);
      CHECK(cv.counts.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("reciprocal midpoints are genuine chords of f_D") {
  // 1/4 and 5/6 are both zeros of f_D, so 7/12 = 5/6 - 1/4 is a chord length
  // although it sits between the consecutive values 1 - 1/2 and 1 - 1/3.
  const auto fd = make_fd();
  CHECK(evaluate(fd, 0.25) == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(evaluate(fd, 5.0 / 6.0) == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  const auto det = chord_present(fd, 7.0 / 12.0);
  CHECK(det.present);
  for (int j = 2; j <= 8; ++j) CHECK(chord_present(fd, 1.0 - 1.0 / j).present);
}

TEST_CASE("conjecture K agreement for small n") {
  for (int n = 1; n <= 2; ++n) {
    const auto rep = conjecture_k_compare(n, 0.01);
    CHECK(rep.total > 800);
    CHECK(rep.fraction() == 1.0);
  }
}

TEST_CASE("invariance under sign, scale and reflection") {
  const auto rep = invariance_check(make_piecewise_linear({{0, 0}, {0.3, 1}, {1, 0}}));
  CHECK(rep.ok);
  CHECK(rep.mismatches.empty());
  CHECK(invariance_check(make_sinesum(2)).ok);
}
