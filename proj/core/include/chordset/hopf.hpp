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

#ifndef CHORDSET_HOPF_HPP_
#define CHORDSET_HOPF_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "chordset/errors.hpp"
#include "chordset/interval_union.hpp"
#include "chordset/rational.hpp"

namespace chordset {

// An open additive set U = V u (1, inf) with V a finite union inside (0, 1).
// Instances only come out of make_hopf (or the named constructions below),
// so every live HopfSet has been validated.
class HopfSet {
 public:
  const OpenIntervalUnion& v() const { return v_; }
  bool has_tail() const { return true; }

  // The exceptional set U = (0, inf). V is stored as (0, 1) and the point 1
  // belongs to U, which no other HopfSet allows.
  static HopfSet positive_reals();
  bool is_positive_reals() const { return includes_one_; }

  bool contains(const Rational& p) const;

  friend bool operator==(const HopfSet&, const HopfSet&) = default;

 private:
  friend HopfSet make_hopf(OpenIntervalUnion v);
  friend HopfSet canonical_vn(std::int64_t n);
  explicit HopfSet(OpenIntervalUnion v, bool includes_one = false)
      : v_(std::move(v)), includes_one_(includes_one) {}

  OpenIntervalUnion v_;
  bool includes_one_ = false;
};

struct AdditivityWitness {
  Rational x;
  Rational y;
};

// Returns x, y in V u (1, inf) with x + y outside it, or nothing when V is
// additive. Only sums landing in (0, 1] can fail; anything larger is in the
// tail. Throws OutOfRange if V is not inside (0, 1).
std::optional<AdditivityWitness> additivity_witness(const OpenIntervalUnion& v);
bool is_additive(const OpenIntervalUnion& v);

// Throws OutOfRange or AdditivityViolation.
HopfSet make_hopf(OpenIntervalUnion v);

bool is_maximal(const HopfSet& h);

// J_n = (1/(n+1), 1/n).
OpenInterval reciprocal_gap(std::int64_t n);

// V_n = union over k = 1..n of k J_n.
HopfSet canonical_vn(std::int64_t n);

// alpha_(a,b) = (max(floor(a/(b-a)), 1) + 1) a. Every point above alpha lies in
// some k (a, b) with k >= max(floor(a/(b-a)), 1) + 1.
Rational tail_threshold(const OpenInterval& i);
// Minimum of the per-interval thresholds over the members of v. This is an
// upper bound for the start of the additive tail generated by v; it is not
// claimed to be the infimum over all sub-intervals.
Rational tail_threshold(const OpenIntervalUnion& v);

// A = V n (0, 1/2), B = (1/2, 1) \ closure(1 - A); returns A u B.
// Result contains h, is additive, and has measure exactly 1/2.
HopfSet maximal_extension(const HopfSet& h);
// Same completion for a V that need not be additive itself, such as
// (2/5, 1/2) alone. Only the part below 1/2 is kept; throws
// AdditivityViolation when the completion is not additive.
HopfSet maximal_extension(const OpenIntervalUnion& v);

// For w inside J_n: A = union over j = 1..floor(n/2) of j w, then the same
// A u B completion as maximal_extension.
HopfSet picksinwn_construct(std::int64_t n, const OpenIntervalUnion& w);

bool is_unit_reciprocal(const Rational& p);

// V_n with the point a removed, where 1/(n+1) < a < 1/n. Throws PointInP for
// a = 1/m and OutOfRange outside (0, 1).
HopfSet isolated_point_set(const Rational& a);

// p is not in v but both (p - e, p) and (p, p + e) are, for small e.
bool is_isolated_point(const OpenIntervalUnion& v, const Rational& p);

struct ClosedInterval {
  Rational lo;
  Rational hi;  // lo <= hi; lo == hi is a single point
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

// Merges overlapping or touching closed pieces.
std::vector<ClosedInterval> normalize_closed(std::vector<ClosedInterval> pieces);

// [0, 1] \ v as sorted disjoint closed pieces.
std::vector<ClosedInterval> complement_pieces(const OpenIntervalUnion& v);

struct ChordComplementReport {
  std::vector<ClosedInterval> closed_pieces;  // non-degenerate pieces only
  std::vector<Rational> isolated_points;
};

// For a maximal Hopf set, computes [0, 1] \ V and
// closure(1 - V) u boundary(V) u {0, 1} independently and checks that they
// agree. Throws NotMaximal, or IdentityFailure if the two sides differ.
ChordComplementReport symmetry_identity(const HopfSet& h);

}  // namespace chordset

#endif  // CHORDSET_HOPF_HPP_
