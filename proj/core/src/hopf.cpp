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

#include "chordset/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordset {

namespace {

const Rational kOne(1);
const Rational kHalf(1, 2);

void require_unit_range(const OpenIntervalUnion& v) {
  if (v.empty()) return;
  if (v.front().lo().sign() < 0 || kOne < v.back().hi()) {
    throw OutOfRange("V must lie inside (0, 1), got " + v.to_string());
  }
}

// Splits p in (I + J) as x + y with x in I, y in J, using the same relative
// position inside both intervals.
AdditivityWitness split_sum(const OpenInterval& i, const OpenInterval& j,
                            const Rational& p) {
  const Rational t = (p - i.lo() - j.lo()) / (i.length() + j.length());
  return {i.lo() + t * i.length(), j.lo() + t * j.length()};
}

}  // namespace

HopfSet HopfSet::positive_reals() {
  return HopfSet(OpenIntervalUnion{OpenInterval(0, 1)}, true);
}

bool HopfSet::contains(const Rational& p) const {
  if (kOne < p) return true;
  if (p == kOne) return includes_one_;
  return chordset::contains(v_, p);
}

std::optional<AdditivityWitness> additivity_witness(const OpenIntervalUnion& v) {
  require_unit_range(v);
  const auto ivs = v.intervals();
  const auto boundary = boundary_points(v);
  for (std::size_t a = 0; a < ivs.size(); ++a) {
    for (std::size_t b = a; b < ivs.size(); ++b) {
      const OpenInterval sum(ivs[a].lo() + ivs[b].lo(), ivs[a].hi() + ivs[b].hi());
      if (sum.lo() >= kOne) continue;
      if (sum.contains(kOne)) return split_sum(ivs[a], ivs[b], kOne);
      // sum lies in (0, 1]: it escapes V exactly when it contains a boundary
      // point of V or sits entirely in a gap.
      auto it = std::upper_bound(boundary.begin(), boundary.end(), sum.lo());
      if (it != boundary.end() && *it < sum.hi()) return split_sum(ivs[a], ivs[b], *it);
      const Rational mid = (sum.lo() + sum.hi()) / 2;
      if (!chordset::contains(v, mid)) return split_sum(ivs[a], ivs[b], mid);
    }
  }
  return std::nullopt;
}

bool is_additive(const OpenIntervalUnion& v) { return !additivity_witness(v).has_value(); }

HopfSet make_hopf(OpenIntervalUnion v) {
  if (auto w = additivity_witness(v)) throw AdditivityViolation(w->x, w->y);
  return HopfSet(std::move(v));
}

bool is_maximal(const HopfSet& h) {
  return !h.is_positive_reals() && measure(h.v()) == kHalf;
}

OpenInterval reciprocal_gap(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("J_n needs n >= 1");
  return OpenInterval(Rational(1, n + 1), Rational(1, n));
}

HopfSet canonical_vn(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("V_n needs n >= 1");
  // k J_n = (k/(n+1), k/n); these are disjoint since k/n < (k+1)/(n+1) for k < n.
  std::vector<OpenInterval> pieces;
  pieces.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) pieces.emplace_back(Rational(k, n + 1), Rational(k, n));
  return HopfSet(OpenIntervalUnion::normalize(std::move(pieces)));
}

Rational tail_threshold(const OpenInterval& i) {
  if (i.lo().sign() <= 0) {
    throw std::invalid_argument("tail_threshold needs a positive left endpoint");
  }
  const BigInt ratio = (i.lo() / i.length()).floor();
  const BigInt start = std::max(ratio, BigInt(1)) + 1;
  return Rational(start, BigInt(1)) * i.lo();
}

Rational tail_threshold(const OpenIntervalUnion& v) {
  if (v.empty()) throw std::invalid_argument("tail_threshold of an empty union");
  Rational best = tail_threshold(v.front());
  for (const auto& iv : v.intervals()) best = min(best, tail_threshold(iv));
  return best;
}

namespace {

HopfSet complete_from_lower_half(const OpenIntervalUnion& lower) {
  const OpenIntervalUnion upper = complement_in(reflect(lower), OpenInterval(kHalf, kOne));
  return make_hopf(unite(lower, upper));
}

}  // namespace

HopfSet maximal_extension(const HopfSet& h) {
  if (h.is_positive_reals()) {
    throw std::invalid_argument("(0, inf) contains 1 and has no maximal extension");
  }
  return maximal_extension(h.v());
}

HopfSet maximal_extension(const OpenIntervalUnion& v) {
  if (!v.empty() && (v.front().lo().sign() < 0 || v.back().hi() > kOne)) {
    throw OutOfRange("V = " + v.to_string() + " is not inside (0, 1)");
  }
  return complete_from_lower_half(intersect(v, OpenIntervalUnion{OpenInterval(0, kHalf)}));
}

HopfSet picksinwn_construct(std::int64_t n, const OpenIntervalUnion& w) {
  if (n < 2) throw std::invalid_argument("picksinwn_construct needs n >= 2");
  if (w.empty()) throw std::invalid_argument("picksinwn_construct needs a nonempty W");
  if (!is_subset(w, OpenIntervalUnion{reciprocal_gap(n)})) {
    throw OutOfRange("W = " + w.to_string() + " is not inside J_" + std::to_string(n));
  }
  OpenIntervalUnion lower;
  for (std::int64_t j = 1; j <= n / 2; ++j) lower = unite(lower, k_fold_sum(w, j));
  return complete_from_lower_half(lower);
}

bool is_unit_reciprocal(const Rational& p) {
  return p.sign() > 0 && p.numerator() == 1;
}

HopfSet isolated_point_set(const Rational& a) {
  if (a.sign() <= 0 || a >= kOne) {
    throw OutOfRange("isolated point must lie in (0, 1), got " + a.to_string());
  }
  if (is_unit_reciprocal(a)) throw PointInP(a);
  const BigInt n = (kOne / a).floor();
  const HopfSet base = canonical_vn(n.convert_to<std::int64_t>());
  return make_hopf(remove_point(base.v(), a));
}

bool is_isolated_point(const OpenIntervalUnion& v, const Rational& p) {
  if (contains(v, p)) return false;
  bool left = false;
  bool right = false;
  for (const auto& iv : v.intervals()) {
    left = left || iv.hi() == p;
    right = right || iv.lo() == p;
  }
  return left && right;
}

std::vector<ClosedInterval> normalize_closed(std::vector<ClosedInterval> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
  std::vector<ClosedInterval> out;
  for (auto& p : pieces) {
    if (!out.empty() && p.lo <= out.back().hi) {
      out.back().hi = max(out.back().hi, p.hi);
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<ClosedInterval> complement_pieces(const OpenIntervalUnion& v) {
  std::vector<ClosedInterval> out;
  Rational cursor(0);
  for (const auto& iv : v.intervals()) {
    if (cursor <= iv.lo()) out.push_back({cursor, iv.lo()});
    cursor = max(cursor, iv.hi());
  }
  if (cursor <= kOne) out.push_back({cursor, kOne});
  return normalize_closed(std::move(out));
}

ChordComplementReport symmetry_identity(const HopfSet& h) {
  if (!is_maximal(h)) throw NotMaximal(measure(h.v()));

  const auto lhs = complement_pieces(h.v());

  std::vector<ClosedInterval> rhs_raw;
  const OpenIntervalUnion mirrored = reflect(h.v());
  for (const auto& iv : mirrored.intervals()) rhs_raw.push_back({iv.lo(), iv.hi()});
  for (const auto& p : boundary_points(h.v())) rhs_raw.push_back({p, p});
  rhs_raw.push_back({Rational(0), Rational(0)});
  rhs_raw.push_back({kOne, kOne});
  const auto rhs = normalize_closed(std::move(rhs_raw));

  if (lhs != rhs) {
    throw IdentityFailure("complement of V and closure(1 - V) u boundary(V) u {0,1} "
                          "differ for V = " + h.v().to_string());
  }

  ChordComplementReport report;
  for (const auto& piece : rhs) {
    if (piece.lo == piece.hi) {
      report.isolated_points.push_back(piece.lo);
    } else {
      report.closed_pieces.push_back(piece);
    }
  }
  return report;
}

}  // namespace chordset
