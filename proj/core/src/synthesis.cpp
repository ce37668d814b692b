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

#include "chordset/synthesis.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace chordset {

std::string to_string(SynthesisFamily f) {
  switch (f) {
    case SynthesisFamily::kAuto: return "auto";
    case SynthesisFamily::kSineSum: return "sinesum";
    case SynthesisFamily::kTwoBump: return "two-bump";
    case SynthesisFamily::kArchPair: return "arch-pair";
  }
  return "unknown";
}

SynthesisFamily parse_family(std::string_view text) {
  for (const auto f : {SynthesisFamily::kAuto, SynthesisFamily::kSineSum,
                       SynthesisFamily::kTwoBump, SynthesisFamily::kArchPair}) {
    if (text == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown family \"" + std::string(text) +
                              "\" (expected auto, sinesum, two-bump, arch-pair)");
}

VerificationFailed::VerificationFailed(SynthesisResult result)
    : DomainError("VerificationFailed",
                  "candidate " + to_string(result.candidate) + " misses the target at " +
                      std::to_string(result.residual.size()) + " grid points"),
      result_(std::move(result)) {}

namespace {

std::optional<std::int64_t> vn_index(const OpenIntervalUnion& v) {
  if (v.empty()) return std::nullopt;
  const Rational inv = Rational(1) / v.front().lo();
  if (!inv.is_integer() || inv < Rational(2)) return std::nullopt;
  const auto n = (inv - Rational(1)).numerator().convert_to<std::int64_t>();
  if (canonical_vn(n).v() != v) return std::nullopt;
  return n;
}

std::optional<OpenInterval> two_bump_window(const HopfSet& target) {
  const OpenIntervalUnion lower =
      intersect(target.v(), OpenIntervalUnion{OpenInterval(0, Rational(1, 2))});
  if (lower.size() != 1) return std::nullopt;
  const OpenInterval w = lower.front();
  if (w.lo() < Rational(1, 3) || w.hi() > Rational(1, 2)) return std::nullopt;
  try {
    if (picksinwn_construct(2, lower).v() != target.v()) return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return w;
}

std::optional<Rational> arch_pair_start(const OpenIntervalUnion& v) {
  if (v.size() != 1 || v.front().hi() != Rational(1)) return std::nullopt;
  if (v.front().lo() <= Rational(1, 2)) return std::nullopt;
  return v.front().lo();
}

}  // namespace

std::vector<std::pair<double, double>> two_bump_nodes(const Rational& a_exact,
                                                      const Rational& b_exact) {
  const double a = a_exact.to_double();
  const double b = b_exact.to_double();
  constexpr double kDamping = 0.5;
  const double p1 = a / 2;
  const double q3 = (b + 0.5) / 2;
  const double q5 = 1 - (a + b) / 2;
  // Depth of the dip between a and b, and height of the bump between b and
  // 1/2, kept below the slopes that would create chords inside V.
  const double rho = kDamping * std::min((q5 - (1 - b)) / p1, (2 * a - q5) / (a - p1));
  std::vector<std::pair<double, double>> half = {
      {0.0, 0.0}, {p1, 1.0}, {a, 0.0}, {(a + b) / 2, -rho}, {b, 0.0}};
  if (b_exact < Rational(1, 2)) {
    const double sigma = kDamping * std::min((q3 - b) / p1, (2 * a - q3) / (a - p1));
    half.emplace_back(q3, sigma);
    half.emplace_back(0.5, 0.0);
  }
  // Antisymmetric continuation f(1 - x) = -f(x).
  std::vector<std::pair<double, double>> nodes = half;
  for (auto it = half.rbegin() + 1; it != half.rend(); ++it) {
    nodes.emplace_back(1.0 - it->first, it->second == 0.0 ? 0.0 : -it->second);
  }
  return nodes;
}

std::vector<std::pair<double, double>> arch_pair_nodes(const Rational& c_exact) {
  const double c = c_exact.to_double();
  return {{0.0, 0.0}, {c / 2, -1.0}, {c, 0.0}, {(1 + c) / 2, 1.0}, {1.0, 0.0}};
}

std::vector<double> verify_against(const FunctionSpec& candidate, const HopfSet& target,
                                   const ScanParams& params) {
  return residual_against(scan(candidate, params), target, 2 * params.ell_res);
}

SynthesisResult synthesize(const HopfSet& target, SynthesisFamily hint, const ScanParams& params) {
  if (target.is_positive_reals()) {
    throw UnsupportedTarget("(0, inf) has no realizing function: 1 is always a chord");
  }
  const OpenIntervalUnion& v = target.v();
  const auto ivs = v.intervals();
  for (std::size_t i = 1; i < ivs.size(); ++i) {
    if (ivs[i - 1].hi() == ivs[i].lo()) {
      throw UnsupportedTarget("punctured target " + v.to_string() + " (isolated chord at " +
                              ivs[i].lo().to_string() +
                              ") needs a tangency construction; build it by hand");
    }
  }
  const bool any = hint == SynthesisFamily::kAuto;

  std::optional<FunctionSpec> candidate;
  SynthesisFamily family = SynthesisFamily::kAuto;
  bool conjectural = false;
  if (any || hint == SynthesisFamily::kSineSum) {
    if (const auto n = vn_index(v)) {
      candidate = *n == 1 ? make_single_sine() : make_sinesum(static_cast<int>(*n));
      family = SynthesisFamily::kSineSum;
      conjectural = *n >= 2;
    }
  }
  if (!candidate && (any || hint == SynthesisFamily::kTwoBump)) {
    if (const auto w = two_bump_window(target)) {
      candidate = make_piecewise_linear(two_bump_nodes(w->lo(), w->hi()));
      family = SynthesisFamily::kTwoBump;
    }
  }
  if (!candidate && (any || hint == SynthesisFamily::kArchPair)) {
    if (const auto c = arch_pair_start(v)) {
      candidate = make_piecewise_linear(arch_pair_nodes(*c));
      family = SynthesisFamily::kArchPair;
    }
  }
  if (!candidate) {
    throw UnsupportedTarget("no template for " + v.to_string() +
                            (any ? "" : " in family " + to_string(hint)) +
                            "; supported: canonical V_n, two-interval-window sets with n = 2, "
                            "and (c, 1) with 1/2 < c < 1");
  }

  SynthesisResult result{*candidate, target, family, conjectural, scan(*candidate, params), {}};
  result.residual = residual_against(result.verification, target, 2 * params.ell_res);
  if (!result.accepted()) throw VerificationFailed(std::move(result));
  return result;
}

}  // namespace chordset
