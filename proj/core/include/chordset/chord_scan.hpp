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

#ifndef CHORDSET_CHORD_SCAN_HPP_
#define CHORDSET_CHORD_SCAN_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordset/function_spec.hpp"
#include "chordset/hopf.hpp"
#include "chordset/rational.hpp"

namespace chordset {

// Multiplicity reported when d vanishes on a whole subinterval.
inline constexpr int kContinuum = std::numeric_limits<int>::max();

struct ScanParams {
  double ell_res = 1e-3;
  double x_res = 1e-4;
  double tol = 1e-9;
  double cluster_radius = 1e-3;
  int bisection_depth = 40;
  int jobs = 1;
};

struct ChordDetection {
  bool present = false;
  bool continuum = false;  // |d| <= tol along a stretch of length >= cluster_radius
  std::vector<double> witnesses;
};

// Looks for x in [0, 1 - ell] with f(x + ell) = f(x).
ChordDetection chord_present(const FunctionSpec& spec, double ell, const ScanParams& params = {});

// Number of witness clusters, or kContinuum.
int chord_multiplicity(const FunctionSpec& spec, double ell, const ScanParams& params = {});

struct ProbeResult {
  Rational ell;
  bool present = false;
  int multiplicity = 0;
};

struct ChordScanReport {
  std::string function;
  ScanParams params;
  std::int64_t ell_steps = 0;  // grid is k / ell_steps, k = 0..ell_steps
  std::vector<char> presence;
  std::vector<int> multiplicity;
  std::vector<std::pair<double, double>> h_approx;       // closed, grid endpoints
  std::vector<std::pair<double, double>> h_star_approx;  // open, midway between grid points
  std::vector<ProbeResult> probes;

  double ell_at(std::int64_t k) const { return static_cast<double>(k) / ell_steps; }
  std::int64_t nearest_index(double ell) const;
  bool present_at(double ell) const { return presence[nearest_index(ell)] != 0; }
  const ProbeResult* probe(const Rational& ell) const;
};

// Throws std::invalid_argument unless both resolutions are reciprocals of
// integers and at most 1/100.
ChordScanReport scan(const FunctionSpec& spec, const ScanParams& params = {},
                     const std::vector<Rational>& probes = {});

// Fraction of grid points present.
double measure_check(const ChordScanReport& report);
// Total length of the closed runs in h_approx.
double h_approx_length(const ChordScanReport& report);
// Measure of the union of the grid cells [l - ell_res/2, l + ell_res/2] n [0, 1]
// centred on present grid points, as an exact multiple of 1/(2 ell_steps).
Rational cell_measure(const ChordScanReport& report);

int sign_changes(const FunctionSpec& spec, double x_res = 1e-4);

struct LevitCheck {
  int sign_changes = 0;
  double beta = 0.0;
  bool ok = false;
  std::vector<double> missing;
};

// With n sign changes, [0, 1/floor((n+3)/2)] must lie in H(f).
LevitCheck levit_bound_check(const FunctionSpec& spec, const ChordScanReport& report);

// nullopt when the grid point nearest 1/m is absent.
std::optional<bool> nonisolated_check(const ChordScanReport& report, int m);

struct ChordVector {
  int n = 0;
  std::vector<int> counts;  // counts[k-1] is the multiplicity at ell = k/n
  bool first_ok = false;    // m_1 >= 1
  bool last_ok = false;     // m_n == 1
  bool sum_ok = false;      // sum of m_k >= n, counting (witness, ell) pairs
  std::int64_t pair_count = 0;  // saturates on continua
  int distinct_lengths = 0;     // number of k with m_k >= 1
  bool has_continuum = false;
};

// Throws InvariantViolation if m_1 = 0 or the pair count is below n.
ChordVector chord_vector(const FunctionSpec& spec, int n, const ScanParams& params = {});
// Same computation without throwing.
ChordVector chord_vector_unchecked(const FunctionSpec& spec, int n, const ScanParams& params = {});

struct AgreementReport {
  int n = 0;
  std::int64_t agree = 0;
  std::int64_t total = 0;
  std::vector<double> disagreements;
  double fraction() const { return total == 0 ? 1.0 : static_cast<double>(agree) / total; }
};

// Compares presence on SineSum(n) with the complement of V_n away from the
// boundary of V_n. Reports evidence only.
AgreementReport conjecture_k_compare(int n, double margin, const ScanParams& params = {});

// Presence grid versus "not in target.v", skipping grid points within margin
// of a boundary point.
std::vector<double> residual_against(const ChordScanReport& report, const HopfSet& target,
                                     double margin);

struct InvarianceReport {
  bool ok = true;
  // Transformed spec text and the grid points where presence differs.
  std::vector<std::pair<std::string, std::vector<double>>> mismatches;
};

// Scans spec under Negate, ScaleY(2), ScaleY(0.5) and ReflectX.
InvarianceReport invariance_check(const FunctionSpec& spec, const ScanParams& params = {});

}  // namespace chordset

#endif  // CHORDSET_CHORD_SCAN_HPP_
