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

#ifndef CHORDSET_SYNTHESIS_HPP_
#define CHORDSET_SYNTHESIS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "chordset/chord_scan.hpp"
#include "chordset/errors.hpp"
#include "chordset/function_spec.hpp"
#include "chordset/hopf.hpp"

namespace chordset {

enum class SynthesisFamily {
  kAuto,
  kSineSum,   // canonical V_n; sin(2 pi x) for n = 1, SineSum(n) otherwise
  kTwoBump,   // W u (1/2, 1 - sup W) u (1 - inf W, 1) with W a single interval in J_2
  kArchPair,  // (c, 1) with 1/2 < c < 1
};

std::string to_string(SynthesisFamily f);
SynthesisFamily parse_family(std::string_view text);

struct SynthesisResult {
  FunctionSpec candidate;
  HopfSet target;
  SynthesisFamily family = SynthesisFamily::kAuto;
  // SineSum(n) for n >= 2 realizes V_n only conjecturally.
  bool conjectural = false;
  ChordScanReport verification;
  std::vector<double> residual;
  bool accepted() const { return residual.empty(); }
};

class VerificationFailed : public DomainError {
 public:
  explicit VerificationFailed(SynthesisResult result);
  const SynthesisResult& result() const { return result_; }

 private:
  SynthesisResult result_;
};

// Grid points where presence disagrees with "not in target", ignoring points
// within 2 ell_res of a boundary point of target.v.
std::vector<double> verify_against(const FunctionSpec& candidate, const HopfSet& target,
                                   const ScanParams& params = {});

// Throws UnsupportedTarget outside the supported families and
// VerificationFailed when the scan of the candidate misses the target.
SynthesisResult synthesize(const HopfSet& target, SynthesisFamily hint = SynthesisFamily::kAuto,
                           const ScanParams& params = {});

// Piecewise-linear node lists used by the templates.
std::vector<std::pair<double, double>> two_bump_nodes(const Rational& a, const Rational& b);
std::vector<std::pair<double, double>> arch_pair_nodes(const Rational& c);

}  // namespace chordset

#endif  // CHORDSET_SYNTHESIS_HPP_
