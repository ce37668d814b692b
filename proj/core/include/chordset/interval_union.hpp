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

#ifndef CHORDSET_INTERVAL_UNION_HPP_
#define CHORDSET_INTERVAL_UNION_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "chordset/rational.hpp"

namespace chordset {

// Bounded open interval (lo, hi); lo < hi always holds.
class OpenInterval {
 public:
  OpenInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational length() const { return hi_ - lo_; }
  bool contains(const Rational& p) const { return lo_ < p && p < hi_; }

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

// Canonical finite union of bounded open intervals: sorted, and any two
// consecutive members satisfy prev.hi <= next.lo. Intervals that only touch
// stay separate because the shared endpoint belongs to neither.
class OpenIntervalUnion {
 public:
  OpenIntervalUnion() = default;
  OpenIntervalUnion(std::initializer_list<OpenInterval> raw);

  // Merges members that overlap on a set of positive length.
  static OpenIntervalUnion normalize(std::vector<OpenInterval> raw);

  std::span<const OpenInterval> intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  const OpenInterval& front() const { return intervals_.front(); }
  const OpenInterval& back() const { return intervals_.back(); }

  std::string to_string() const;

  friend bool operator==(const OpenIntervalUnion&, const OpenIntervalUnion&) = default;

 private:
  std::vector<OpenInterval> intervals_;
};

OpenIntervalUnion unite(const OpenIntervalUnion& a, const OpenIntervalUnion& b);
OpenIntervalUnion intersect(const OpenIntervalUnion& a, const OpenIntervalUnion& b);

// Interior of box \ closure(a). Parts of a outside the box are ignored.
OpenIntervalUnion complement_in(const OpenIntervalUnion& a, const OpenInterval& box);

Rational measure(const OpenIntervalUnion& a);

// {x + y : x in a, y in b}. Empty if either operand is empty.
OpenIntervalUnion minkowski_sum(const OpenIntervalUnion& a, const OpenIntervalUnion& b);

// a + a + ... + a (k terms). k >= 1.
OpenIntervalUnion k_fold_sum(const OpenIntervalUnion& a, std::int64_t k);

// Pointwise dilation {k x : x in a}. k > 0.
OpenIntervalUnion scale(const OpenIntervalUnion& a, const Rational& k);

// Image under x -> 1 - x. Every member must lie inside [0, 1].
OpenIntervalUnion reflect(const OpenIntervalUnion& a);

// Sorted, deduplicated endpoints; for a finite union this is the boundary.
std::vector<Rational> boundary_points(const OpenIntervalUnion& a);

// Splits the member containing p, if any, into (lo, p) and (p, hi).
OpenIntervalUnion remove_point(const OpenIntervalUnion& a, const Rational& p);

bool contains(const OpenIntervalUnion& a, const Rational& p);
bool is_subset(const OpenIntervalUnion& a, const OpenIntervalUnion& b);

std::ostream& operator<<(std::ostream& os, const OpenInterval& i);
std::ostream& operator<<(std::ostream& os, const OpenIntervalUnion& u);

}  // namespace chordset

#endif  // CHORDSET_INTERVAL_UNION_HPP_
