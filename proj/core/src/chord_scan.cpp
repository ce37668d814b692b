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

#include "chordset/chord_scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "chordset/errors.hpp"

namespace chordset {

namespace {

std::int64_t steps_for(double res, const char* what) {
  if (!(res > 0.0) || res > 1e-2) {
    throw std::invalid_argument(std::string(what) + " must lie in (0, 1/100]");
  }
  const auto steps = std::llround(1.0 / res);
  if (std::abs(static_cast<double>(steps) * res - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(what) + " must be the reciprocal of an integer");
  }
  return steps;
}

void run_parallel(std::int64_t count, int jobs, const auto& body) {
  const int workers = static_cast<int>(std::clamp<std::int64_t>(jobs, 1, std::max<std::int64_t>(count, 1)));
  std::atomic<std::int64_t> next{0};
  auto work = [&] {
    for (std::int64_t i = next++; i < count; i = next++) body(i);
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
}

// d(x) = f(x + ell) - f(x) sampled on x_i = i / x_steps, i = 0..last, plus
// the endpoint 1 - ell when it is not a grid point. When ell * x_steps is an
// integer s, x_i + ell is taken as (i + s) / x_steps so that cached samples
// of f can be reused.
class Difference {
 public:
  Difference(const FunctionSpec& spec, double ell, std::int64_t x_steps,
             const std::vector<double>* cache)
      : spec_(spec), ell_(ell), x_steps_(x_steps) {
    const double shift = ell * static_cast<double>(x_steps);
    const double rounded = std::round(shift);
    if (std::abs(shift - rounded) < 1e-9) {
      shift_ = static_cast<std::int64_t>(rounded);
      last_ = x_steps - shift_;
      extra_endpoint_ = false;
      if (cache != nullptr && static_cast<std::int64_t>(cache->size()) == x_steps + 1) cache_ = cache;
    } else {
      last_ = static_cast<std::int64_t>(std::floor((1.0 - ell) * static_cast<double>(x_steps)));
      while (last_ > 0 && static_cast<double>(last_) / x_steps > 1.0 - ell) --last_;
      extra_endpoint_ = static_cast<double>(last_) / x_steps < 1.0 - ell;
    }
  }

  std::int64_t size() const { return last_ + 1 + (extra_endpoint_ ? 1 : 0); }

  double x(std::int64_t i) const {
    if (i > last_) return 1.0 - ell_;
    return static_cast<double>(i) / x_steps_;
  }

  double sample(std::int64_t i) const {
    if (i > last_) return f(1.0) - f(1.0 - ell_);
    if (shift_ >= 0) {
      if (cache_ != nullptr) return (*cache_)[i + shift_] - (*cache_)[i];
      return f(static_cast<double>(i + shift_) / x_steps_) - f(static_cast<double>(i) / x_steps_);
    }
    return at(static_cast<double>(i) / x_steps_);
  }

  double at(double x) const {
    const double y = std::min(x + ell_, 1.0);
    return f(y) - f(std::clamp(x, 0.0, 1.0));
  }

 private:
  double f(double x) const { return evaluate(spec_, x); }

  const FunctionSpec& spec_;
  double ell_;
  std::int64_t x_steps_;
  std::int64_t shift_ = -1;
  std::int64_t last_ = 0;
  bool extra_endpoint_ = false;
  const std::vector<double>* cache_ = nullptr;
};

double bisect(const Difference& d, double a, double b, double da, int depth) {
  for (int it = 0; it < depth; ++it) {
    const double m = 0.5 * (a + b);
    const double dm = d.at(m);
    if (dm == 0.0) return m;
    if ((dm < 0) == (da < 0)) {
      a = m;
      da = dm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Minimizes s * d on [a, b] by golden-section search, returns (argmin, s * d).
std::pair<double, double> golden_min(const Difference& d, double a, double b, double s, int depth) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double e = a + kInvPhi * (b - a);
  double fc = s * d.at(c);
  double fe = s * d.at(e);
  for (int it = 0; it < depth; ++it) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - kInvPhi * (b - a);
      fc = s * d.at(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + kInvPhi * (b - a);
      fe = s * d.at(e);
    }
  }
  return fc < fe ? std::pair{c, fc} : std::pair{e, fe};
}

ChordDetection detect(const Difference& d, const ScanParams& p) {
  ChordDetection out;
  const std::int64_t n = d.size();
  std::vector<double> samples(n);
  for (std::int64_t i = 0; i < n; ++i) samples[i] = d.sample(i);
  auto small = [&](std::int64_t i) { return std::abs(samples[i]) <= p.tol; };
  auto crosses = [&](std::int64_t i, std::int64_t j) {
    return (samples[i] < 0) != (samples[j] < 0);
  };

  for (std::int64_t i = 0; i < n;) {
    if (small(i)) {
      std::int64_t j = i;
      while (j + 1 < n && small(j + 1)) ++j;
      if (d.x(j) - d.x(i) >= p.cluster_radius) out.continuum = true;
      out.witnesses.push_back(d.x(i));
      if (j > i) out.witnesses.push_back(d.x(j));
      i = j + 1;
      continue;
    }
    if (i + 1 < n && !small(i + 1) && crosses(i, i + 1)) {
      out.witnesses.push_back(bisect(d, d.x(i), d.x(i + 1), samples[i], p.bisection_depth));
    } else if (i > 0 && i + 1 < n && !small(i - 1) && !small(i + 1) && !crosses(i - 1, i) &&
               !crosses(i, i + 1) && std::abs(samples[i]) < std::abs(samples[i - 1]) &&
               std::abs(samples[i]) <= std::abs(samples[i + 1]) &&
               4.0 * std::abs(samples[i]) <=
                   std::max(std::abs(samples[i - 1]), std::abs(samples[i + 1]))) {
      // A tangential zero inside the cell leaves the centre sample at most a
      // quarter of the larger neighbour; shallower dips are rounding noise.
      const double s = samples[i] < 0 ? -1.0 : 1.0;
      const double a = d.x(i - 1);
      const double b = d.x(i + 1);
      const auto [xm, gm] = golden_min(d, a, b, s, p.bisection_depth);
      if (std::abs(gm) <= p.tol) {
        out.witnesses.push_back(xm);
      } else if (gm < 0) {
        out.witnesses.push_back(bisect(d, a, xm, samples[i - 1], p.bisection_depth));
        out.witnesses.push_back(bisect(d, xm, b, s * gm, p.bisection_depth));
      }
    }
    ++i;
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.present = !out.witnesses.empty();
  return out;
}

int count_clusters(const ChordDetection& det, double radius) {
  if (det.continuum) return kContinuum;
  int clusters = 0;
  double last = 0.0;
  for (const double w : det.witnesses) {
    if (clusters == 0 || w - last >= radius) ++clusters;
    last = w;
  }
  return clusters;
}

ChordDetection detect_at(const FunctionSpec& spec, double ell, const ScanParams& params,
                         std::int64_t x_steps, const std::vector<double>* cache) {
  if (!(ell >= 0.0 && ell <= 1.0)) throw std::invalid_argument("chord length must lie in [0, 1]");
  return detect(Difference(spec, ell, x_steps, cache), params);
}

std::vector<double> boundary_doubles(const OpenIntervalUnion& v) {
  std::vector<double> out;
  for (const auto& b : boundary_points(v)) out.push_back(b.to_double());
  return out;
}

struct Comparison {
  std::int64_t agree = 0;
  std::int64_t total = 0;
  std::vector<double> disagreements;
};

Comparison compare_with(const ChordScanReport& report, const HopfSet& target, double margin) {
  const auto bounds = boundary_doubles(target.v());
  Comparison out;
  for (std::int64_t k = 0; k <= report.ell_steps; ++k) {
    const double ell = report.ell_at(k);
    const bool near_boundary = std::any_of(bounds.begin(), bounds.end(), [&](double b) {
      return std::abs(ell - b) <= margin;
    });
    if (near_boundary) continue;
    const bool expected = !target.contains(Rational(k, report.ell_steps));
    ++out.total;
    if ((report.presence[k] != 0) == expected) {
      ++out.agree;
    } else {
      out.disagreements.push_back(ell);
    }
  }
  return out;
}

}  // namespace

ChordDetection chord_present(const FunctionSpec& spec, double ell, const ScanParams& params) {
  return detect_at(spec, ell, params, steps_for(params.x_res, "x_res"), nullptr);
}

int chord_multiplicity(const FunctionSpec& spec, double ell, const ScanParams& params) {
  return count_clusters(chord_present(spec, ell, params), params.cluster_radius);
}

std::int64_t ChordScanReport::nearest_index(double ell) const {
  const auto k = std::llround(ell * static_cast<double>(ell_steps));
  return std::clamp<std::int64_t>(k, 0, ell_steps);
}

const ProbeResult* ChordScanReport::probe(const Rational& ell) const {
  for (const auto& p : probes) {
    if (p.ell == ell) return &p;
  }
  return nullptr;
}

ChordScanReport scan(const FunctionSpec& spec, const ScanParams& params,
                     const std::vector<Rational>& probes) {
  const std::int64_t ell_steps = steps_for(params.ell_res, "ell_res");
  const std::int64_t x_steps = steps_for(params.x_res, "x_res");

  std::vector<double> cache;
  if (x_steps % ell_steps == 0) {
    cache.resize(x_steps + 1);
    run_parallel(x_steps + 1, params.jobs, [&](std::int64_t i) {
      cache[i] = evaluate(spec, static_cast<double>(i) / x_steps);
    });
  }

  ChordScanReport report;
  report.function = to_string(spec);
  report.params = params;
  report.ell_steps = ell_steps;
  report.presence.assign(ell_steps + 1, 0);
  report.multiplicity.assign(ell_steps + 1, 0);
  run_parallel(ell_steps + 1, params.jobs, [&](std::int64_t k) {
    const double ell = static_cast<double>(k) / ell_steps;
    const auto det = detect_at(spec, ell, params, x_steps, cache.empty() ? nullptr : &cache);
    report.presence[k] = det.present ? 1 : 0;
    report.multiplicity[k] = count_clusters(det, params.cluster_radius);
  });

  for (std::int64_t k = 0; k <= ell_steps;) {
    const bool on = report.presence[k] != 0;
    std::int64_t j = k;
    while (j + 1 <= ell_steps && (report.presence[j + 1] != 0) == on) ++j;
    if (on) {
      report.h_approx.emplace_back(report.ell_at(k), report.ell_at(j));
    } else {
      const double half = 0.5 / static_cast<double>(ell_steps);
      report.h_star_approx.emplace_back(report.ell_at(k) - half, report.ell_at(j) + half);
    }
    k = j + 1;
  }

  for (const auto& ell : probes) {
    const auto det = detect_at(spec, ell.to_double(), params, x_steps, nullptr);
    report.probes.push_back({ell, det.present, count_clusters(det, params.cluster_radius)});
  }
  return report;
}

double measure_check(const ChordScanReport& report) {
  const auto present = std::count(report.presence.begin(), report.presence.end(), 1);
  return static_cast<double>(present) / static_cast<double>(report.presence.size());
}

double h_approx_length(const ChordScanReport& report) {
  double total = 0.0;
  for (const auto& [lo, hi] : report.h_approx) total += hi - lo;
  return total;
}

Rational cell_measure(const ChordScanReport& report) {
  std::int64_t half_cells = 0;
  for (std::int64_t k = 0; k <= report.ell_steps; ++k) {
    if (report.presence[k] == 0) continue;
    half_cells += (k == 0 || k == report.ell_steps) ? 1 : 2;
  }
  return Rational(half_cells, 2 * report.ell_steps);
}

int sign_changes(const FunctionSpec& spec, double x_res) {
  const std::int64_t steps = steps_for(x_res, "x_res");
  int changes = 0;
  int last_sign = 0;
  for (std::int64_t i = 1; i < steps; ++i) {
    const double v = evaluate(spec, static_cast<double>(i) / steps);
    if (std::abs(v) <= 1e-12) continue;
    const int s = v < 0 ? -1 : 1;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

LevitCheck levit_bound_check(const FunctionSpec& spec, const ChordScanReport& report) {
  LevitCheck out;
  out.sign_changes = sign_changes(spec, report.params.x_res);
  out.beta = 1.0 / std::floor((out.sign_changes + 3) / 2.0);
  const double limit = out.beta - 1.0 / static_cast<double>(report.ell_steps);
  for (std::int64_t k = 0; k <= report.ell_steps && report.ell_at(k) <= limit + 1e-12; ++k) {
    if (report.presence[k] == 0) out.missing.push_back(report.ell_at(k));
  }
  out.ok = out.missing.empty();
  return out;
}

std::optional<bool> nonisolated_check(const ChordScanReport& report, int m) {
  if (m < 2) throw std::invalid_argument("nonisolated_check needs m >= 2");
  const std::int64_t center = report.nearest_index(1.0 / m);
  if (report.presence[center] == 0) return std::nullopt;
  for (std::int64_t off = 1; off <= 10; ++off) {
    for (const std::int64_t k : {center - off, center + off}) {
      if (k >= 0 && k <= report.ell_steps && report.presence[k] != 0) return true;
    }
  }
  return false;
}

ChordVector chord_vector_unchecked(const FunctionSpec& spec, int n, const ScanParams& params) {
  if (n < 1) throw std::invalid_argument("chord_vector needs n >= 1");
  ChordVector out;
  out.n = n;
  out.counts.assign(n, 0);
  run_parallel(n, params.jobs, [&](std::int64_t i) {
    const double ell = static_cast<double>(i + 1) / n;
    out.counts[i] = chord_multiplicity(spec, ell, params);
  });
  for (const int c : out.counts) {
    if (c == kContinuum) {
      out.has_continuum = true;
      out.pair_count = kContinuum;
    } else if (!out.has_continuum) {
      out.pair_count += c;
    }
    if (c >= 1) ++out.distinct_lengths;
  }
  out.first_ok = out.counts.front() >= 1;
  out.last_ok = out.counts.back() == 1;
  out.sum_ok = out.pair_count >= n;
  return out;
}

ChordVector chord_vector(const FunctionSpec& spec, int n, const ScanParams& params) {
  ChordVector out = chord_vector_unchecked(spec, n, params);
  if (!out.first_ok || !out.sum_ok) {
    throw InvariantViolation("chord vector for " + to_string(spec) + " with n = " +
                             std::to_string(n) +
                             " misses a guaranteed bound; the resolution is too coarse");
  }
  return out;
}

AgreementReport conjecture_k_compare(int n, double margin, const ScanParams& params) {
  if (n < 1) throw std::invalid_argument("conjecture_k_compare needs n >= 1");
  const auto report = scan(make_sinesum(n), params);
  const auto cmp = compare_with(report, canonical_vn(n), margin);
  return {n, cmp.agree, cmp.total, cmp.disagreements};
}

std::vector<double> residual_against(const ChordScanReport& report, const HopfSet& target,
                                     double margin) {
  return compare_with(report, target, margin).disagreements;
}

InvarianceReport invariance_check(const FunctionSpec& spec, const ScanParams& params) {
  const auto base = scan(spec, params);
  InvarianceReport out;
  for (const auto& variant : {negate(spec), scale_y(spec, 2.0), scale_y(spec, 0.5), reflect_x(spec)}) {
    const auto other = scan(variant, params);
    std::vector<double> diff;
    for (std::int64_t k = 0; k <= base.ell_steps; ++k) {
      if (base.presence[k] != other.presence[k]) diff.push_back(base.ell_at(k));
    }
    if (!diff.empty()) {
      out.ok = false;
      out.mismatches.emplace_back(to_string(variant), std::move(diff));
    }
  }
  return out;
}

}  // namespace chordset
