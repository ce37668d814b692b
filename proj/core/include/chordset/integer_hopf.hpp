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

#ifndef CHORDSET_INTEGER_HOPF_HPP_
#define CHORDSET_INTEGER_HOPF_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chordset/hopf.hpp"
#include "chordset/interval_union.hpp"

namespace chordset {

// (lo_1, hi_1) u ... u (lo_k, hi_k) u (tail_start, inf) with integer endpoints.
// The interval count includes the tail, so (1, 2) u (2, inf) has two.
struct IntegerHopfSet {
  std::vector<std::pair<std::int64_t, std::int64_t>> finite_intervals;
  std::int64_t tail_start = 0;

  int n_intervals() const { return static_cast<int>(finite_intervals.size()) + 1; }
  // Largest finite endpoint.
  std::int64_t max_endpoint() const;

  std::string to_string() const;
  friend bool operator==(const IntegerHopfSet&, const IntegerHopfSet&) = default;
  friend auto operator<=>(const IntegerHopfSet&, const IntegerHopfSet&) = default;
};

enum class VerifyFailure {
  kNone,
  kStructure,       // ordering / positivity violated
  kTailMismatch,    // last finite endpoint differs from tail_start
  kTouching,        // two finite intervals share an endpoint
  kNotAdditive,
  kNotMaximal,
  kNotPrimitive,
};

std::string to_string(VerifyFailure f);

struct VerifyResult {
  bool ok = false;
  VerifyFailure failure = VerifyFailure::kNone;
  std::string detail;
  explicit operator bool() const { return ok; }
};

struct VerifyOptions {
  // Finite intervals sharing an endpoint, e.g. (2,3) u (3,4) u (4, inf), are
  // maximal Hopf sets in their own right but are punctured copies of a set
  // with fewer intervals. The census excludes them unless this is set.
  bool allow_touching = false;
};

VerifyResult verify(const IntegerHopfSet& s, const VerifyOptions& options = {});

// The finite part divided by tail_start.
OpenIntervalUnion to_unit(const IntegerHopfSet& s);

// Multiplies every endpoint by g.
IntegerHopfSet dilate(const IntegerHopfSet& s, std::int64_t g);

enum class Origin {
  kNone,
  kConstruction,   // equals picksinwn_construct(n, W) for the W read off the set
  kM1Family,    // V lies in (1/2, 1); additive for free
};

std::string to_string(Origin o);

// Decides whether s / M is the output of picksinwn_construct. Sets living
// entirely in (1/2, 1) are reported as kM1Family.
Origin picksinwn_origin(const IntegerHopfSet& s);

struct CensusEntry {
  IntegerHopfSet set;
  int n_intervals = 0;
  std::int64_t max_endpoint = 0;
  Origin origin = Origin::kNone;
  bool picksinwn() const { return origin != Origin::kNone; }
};

// Every set with exactly n_intervals intervals (tail included) and
// tail_start <= max_m that passes verify(), sorted lexicographically by the
// flattened endpoint tuple. jobs <= 1 runs on the calling thread.
std::vector<CensusEntry> enumerate(int n_intervals, std::int64_t max_m, int jobs = 1);

// (a, b) u (2b - a, 2b) u (2b, inf) for coprime a < b <= 3a/2, a <= a_max.
std::vector<IntegerHopfSet> n3_family(std::int64_t a_max);

// (4,5) u (6,7) u (8,12) u (12, inf).
IntegerHopfSet four_interval_example();

// (25,26) u (40,44) u (45,48) u (50,52) u (55,56) u (60,74) u (75,100) u (100, inf).
IntegerHopfSet eight_interval_example();

}  // namespace chordset

#endif  // CHORDSET_INTEGER_HOPF_HPP_
