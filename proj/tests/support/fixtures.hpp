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

#ifndef CHORDSET_TESTS_FIXTURES_HPP_
#define CHORDSET_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chordset/function_spec.hpp"
#include "chordset/interval_union.hpp"
#include "chordset/rational.hpp"
#include "chordset/synthesis.hpp"

namespace chordset::testing {

struct NamedSpec {
  std::string name;
  FunctionSpec spec;
};

// Functions on [0, 1] vanishing at both ends, used across scan checks.
inline std::vector<NamedSpec> corpus() {
  std::vector<NamedSpec> out;
  out.push_back({"sine", make_single_sine()});
  for (int n = 1; n <= 5; ++n) out.push_back({"sinesum:" + std::to_string(n), make_sinesum(n)});
  out.push_back({"levy:3/11", make_levy(Rational(3, 11))});
  out.push_back({"fd", make_fd()});
  out.push_back({"tent", make_piecewise_linear({{0, 0}, {0.5, 1}, {1, 0}})});
  out.push_back({"skew-tent", make_piecewise_linear({{0, 0}, {0.3, 1}, {1, 0}})});
  out.push_back({"trapezoid", make_piecewise_linear({{0, 0}, {0.25, 1}, {0.75, 1}, {1, 0}})});
  out.push_back({"zigzag", make_piecewise_linear({{0, 0}, {0.2, 1}, {0.6, -1}, {1, 0}})});
  out.push_back({"two-bump", make_piecewise_linear(two_bump_nodes(Rational(2, 5), Rational(1, 2)))});
  return out;
}

struct PicksinwnCase {
  std::int64_t n;
  OpenIntervalUnion w;
};

inline OpenIntervalUnion iv(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return OpenIntervalUnion{OpenInterval(Rational(a, b), Rational(c, d))};
}

inline std::vector<PicksinwnCase> picksinwn_cases() {
  return {
      {2, iv(2, 5, 1, 2)},
      {2, iv(1, 3, 5, 12)},
      {2, iv(1, 3, 1, 2)},
      {2, OpenIntervalUnion{OpenInterval(Rational(1, 3), Rational(3, 8)),
                            OpenInterval(Rational(5, 12), Rational(1, 2))}},
      {3, iv(1, 4, 3, 10)},
      {3, iv(1, 4, 1, 3)},
      {3, iv(2, 7, 1, 3)},
      {4, iv(1, 5, 9, 40)},
      {5, iv(1, 6, 1, 5)},
  };
}

}  // namespace chordset::testing

#endif  // CHORDSET_TESTS_FIXTURES_HPP_
