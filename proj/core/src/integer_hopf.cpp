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

#include "chordset/integer_hopf.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace chordset {

std::int64_t IntegerHopfSet::max_endpoint() const {
  return finite_intervals.empty() ? tail_start : finite_intervals.back().second;
}

std::string IntegerHopfSet::to_string() const {
  std::ostringstream os;
  for (const auto& [lo, hi] : finite_intervals) os << '(' << lo << ',' << hi << ") u ";
  os << '(' << tail_start << ",inf)";
  return os.str();
}

std::string to_string(VerifyFailure f) {
  switch (f) {
    case VerifyFailure::kNone: return "ok";
    case VerifyFailure::kStructure: return "structure";
    case VerifyFailure::kTailMismatch: return "tail_mismatch";
    case VerifyFailure::kTouching: return "touching";
    case VerifyFailure::kNotAdditive: return "not_additive";
    case VerifyFailure::kNotMaximal: return "not_maximal";
    case VerifyFailure::kNotPrimitive: return "not_primitive";
  }
  return "unknown";
}

std::string to_string(Origin o) {
  switch (o) {
    case Origin::kNone: return "none";
    case Origin::kConstruction: return "construction";
    case Origin::kM1Family: return "m1_family";
  }
  return "unknown";
}

namespace {

VerifyResult fail(VerifyFailure f, std::string detail) {
  return {false, f, std::move(detail)};
}

std::string interval_text(std::int64_t lo, std::int64_t hi) {
  return "(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
}

}  // namespace

OpenIntervalUnion to_unit(const IntegerHopfSet& s) {
  std::vector<OpenInterval> raw;
  raw.reserve(s.finite_intervals.size());
  for (const auto& [lo, hi] : s.finite_intervals) {
    raw.emplace_back(Rational(lo, s.tail_start), Rational(hi, s.tail_start));
  }
  return OpenIntervalUnion::normalize(std::move(raw));
}

IntegerHopfSet dilate(const IntegerHopfSet& s, std::int64_t g) {
  IntegerHopfSet out;
  for (const auto& [lo, hi] : s.finite_intervals) out.finite_intervals.emplace_back(lo * g, hi * g);
  out.tail_start = s.tail_start * g;
  return out;
}

VerifyResult verify(const IntegerHopfSet& s, const VerifyOptions& options) {
  if (s.tail_start <= 0) return fail(VerifyFailure::kStructure, "tail_start must be positive");
  std::int64_t previous_hi = 0;
  for (std::size_t i = 0; i < s.finite_intervals.size(); ++i) {
    const auto [lo, hi] = s.finite_intervals[i];
    if (lo <= 0 || lo >= hi) {
      return fail(VerifyFailure::kStructure, "bad interval " + interval_text(lo, hi));
    }
    if (lo < previous_hi) {
      return fail(VerifyFailure::kStructure,
                  "intervals out of order at " + interval_text(lo, hi));
    }
    previous_hi = hi;
  }
  if (previous_hi > s.tail_start) {
    return fail(VerifyFailure::kStructure, "finite interval extends past tail_start");
  }
  if (s.finite_intervals.empty()) {
    return fail(VerifyFailure::kNotMaximal, "no finite intervals: measure 0");
  }
  if (previous_hi != s.tail_start) {
    return fail(VerifyFailure::kTailMismatch,
                "last finite endpoint " + std::to_string(previous_hi) +
                    " differs from tail_start " + std::to_string(s.tail_start));
  }
  if (!options.allow_touching) {
    for (std::size_t i = 1; i < s.finite_intervals.size(); ++i) {
      if (s.finite_intervals[i - 1].second == s.finite_intervals[i].first) {
        return fail(VerifyFailure::kTouching,
                    "intervals share endpoint " +
                        std::to_string(s.finite_intervals[i].first));
      }
    }
  }

  const OpenIntervalUnion unit = to_unit(s);
  if (auto w = additivity_witness(unit)) {
    const Rational m(s.tail_start);
    return fail(VerifyFailure::kNotAdditive,
                (w->x * m).to_string() + " + " + (w->y * m).to_string() + " = " +
                    ((w->x + w->y) * m).to_string() + " escapes the set");
  }

  std::int64_t length_sum = 0;
  for (const auto& [lo, hi] : s.finite_intervals) length_sum += hi - lo;
  if (2 * length_sum != s.tail_start) {
    return fail(VerifyFailure::kNotMaximal,
                "lengths sum to " + std::to_string(length_sum) + ", need " +
                    std::to_string(s.tail_start) + "/2");
  }

  std::int64_t g = s.tail_start;
  for (const auto& [lo, hi] : s.finite_intervals) g = std::gcd(g, std::gcd(lo, hi));
  if (g != 1) {
    return fail(VerifyFailure::kNotPrimitive,
                "all endpoints divisible by " + std::to_string(g));
  }
  return {true, VerifyFailure::kNone, ""};
}

Origin picksinwn_origin(const IntegerHopfSet& s) {
  if (!verify(s, {.allow_touching = true})) return Origin::kNone;
  const OpenIntervalUnion unit = to_unit(s);
  const OpenIntervalUnion lower =
      intersect(unit, OpenIntervalUnion{OpenInterval(0, Rational(1, 2))});
  if (lower.empty()) return Origin::kM1Family;

  // inf(A) in [1/(n+1), 1/n)  <=>  n = ceil(1/inf A) - 1.
  const BigInt n_big = (Rational(1) / lower.front().lo()).ceil() - 1;
  if (n_big < 2) return Origin::kNone;
  const auto n = n_big.convert_to<std::int64_t>();
  const OpenIntervalUnion w = intersect(lower, OpenIntervalUnion{reciprocal_gap(n)});
  if (w.empty()) return Origin::kNone;

  OpenIntervalUnion generated;
  for (std::int64_t j = 1; j <= n / 2; ++j) generated = unite(generated, k_fold_sum(w, j));
  if (generated != lower) return Origin::kNone;
  try {
    if (picksinwn_construct(n, w).v() != unit) return Origin::kNone;
  } catch (const DomainError&) {
    return Origin::kNone;
  }
  return Origin::kConstruction;
}

namespace {

using Run = std::pair<std::int64_t, std::int64_t>;

// Depth-first search over subsets of the unit cells (i, i+1), i < M/2, that
// make up the part of V below M/2. Closure under addition below M/2 forces
// cells: if cells i and j are both chosen and i + j + 2 <= M/2, then cells
// i + j and i + j + 1 must be chosen as well.
class HalfSearch {
 public:
  HalfSearch(std::int64_t m, int n_intervals)
      : m_(m), half_(m / 2), max_lower_runs_(n_intervals - 2),
        target_finite_(n_intervals - 1), chosen_(half_, false), forced_(half_, 0) {}

  void run(std::vector<CensusEntry>& out) {
    out_ = &out;
    visit(0, 0);
  }

 private:
  void visit(std::int64_t cell, int runs) {
    if (cell == half_) {
      emit();
      return;
    }
    if (forced_[cell] == 0) visit(cell + 1, runs);
    const bool opens_run = cell == 0 || !chosen_[cell - 1];
    const int new_runs = runs + (opens_run ? 1 : 0);
    if (new_runs > max_lower_runs_) return;
    chosen_[cell] = true;
    apply_forcing(cell, +1);
    visit(cell + 1, new_runs);
    apply_forcing(cell, -1);
    chosen_[cell] = false;
  }

  void apply_forcing(std::int64_t cell, int delta) {
    for (std::int64_t i = 0; i <= cell; ++i) {
      if (!chosen_[i]) continue;
      const std::int64_t s = i + cell;
      if (s + 2 > half_) break;
      forced_[s] += delta;
      forced_[s + 1] += delta;
    }
  }

  void emit() {
    std::vector<Run> lower;
    for (std::int64_t c = 0; c < half_; ++c) {
      if (!chosen_[c]) continue;
      if (!lower.empty() && lower.back().second == c) {
        lower.back().second = c + 1;
      } else {
        lower.emplace_back(c, c + 1);
      }
    }
    // Upper part is (M/2, M) minus the closure of the reflected lower part.
    std::vector<Run> upper;
    std::int64_t cursor = half_;
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
      const std::int64_t lo = m_ - it->second;
      const std::int64_t hi = m_ - it->first;
      if (cursor < lo) upper.emplace_back(cursor, lo);
      cursor = std::max(cursor, hi);
    }
    if (cursor < m_) upper.emplace_back(cursor, m_);
    if (static_cast<int>(lower.size() + upper.size()) != target_finite_) return;

    IntegerHopfSet s;
    s.finite_intervals = lower;
    s.finite_intervals.insert(s.finite_intervals.end(), upper.begin(), upper.end());
    s.tail_start = m_;
    if (!verify(s)) return;
    CensusEntry e;
    e.n_intervals = s.n_intervals();
    e.max_endpoint = s.max_endpoint();
    e.origin = picksinwn_origin(s);
    e.set = std::move(s);
    out_->push_back(std::move(e));
  }

  std::int64_t m_;
  std::int64_t half_;
  int max_lower_runs_;
  int target_finite_;
  std::vector<bool> chosen_;
  std::vector<int> forced_;
  std::vector<CensusEntry>* out_ = nullptr;
};

std::vector<std::int64_t> flatten(const IntegerHopfSet& s) {
  std::vector<std::int64_t> out;
  for (const auto& [lo, hi] : s.finite_intervals) {
    out.push_back(lo);
    out.push_back(hi);
  }
  out.push_back(s.tail_start);
  return out;
}

bool lex_less(const IntegerHopfSet& a, const IntegerHopfSet& b) {
  return flatten(a) < flatten(b);
}

}  // namespace

std::vector<CensusEntry> enumerate(int n_intervals, std::int64_t max_m, int jobs) {
  if (n_intervals < 2) throw std::invalid_argument("enumerate needs n_intervals >= 2");
  if (max_m < 2) throw std::invalid_argument("enumerate needs max_M >= 2");

  // Maximality forces an even tail start.
  std::vector<std::int64_t> tails;
  for (std::int64_t m = 2; m <= max_m; m += 2) tails.push_back(m);

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tails.size())));
  std::vector<std::vector<CensusEntry>> partial(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](int id) {
    for (std::size_t i = next++; i < tails.size(); i = next++) {
      HalfSearch(tails[i], n_intervals).run(partial[id]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  std::vector<CensusEntry> out;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(),
            [](const CensusEntry& a, const CensusEntry& b) { return lex_less(a.set, b.set); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const CensusEntry& a, const CensusEntry& b) {
                          return a.set == b.set;
                        }),
            out.end());
  return out;
}

std::vector<IntegerHopfSet> n3_family(std::int64_t a_max) {
  if (a_max < 1) throw std::invalid_argument("n3_family needs a_max >= 1");
  std::vector<IntegerHopfSet> out;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = a + 1; 2 * b <= 3 * a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      out.push_back({{{a, b}, {2 * b - a, 2 * b}}, 2 * b});
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

IntegerHopfSet four_interval_example() { return {{{4, 5}, {6, 7}, {8, 12}}, 12}; }

IntegerHopfSet eight_interval_example() {
  return {{{25, 26}, {40, 44}, {45, 48}, {50, 52}, {55, 56}, {60, 74}, {75, 100}}, 100};
}

}  // namespace chordset
