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

#ifndef CHORDSET_ERRORS_HPP_
#define CHORDSET_ERRORS_HPP_

#include <stdexcept>
#include <string>

#include "chordset/rational.hpp"

namespace chordset {

// Base class for failures that carry a structured, user-facing diagnosis.
// The command-line front end maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Some sum x + y with x, y in U lands outside U.
class AdditivityViolation : public DomainError {
 public:
  AdditivityViolation(Rational x, Rational y)
      : DomainError("AdditivityViolation",
                    "not additive: " + x.to_string() + " + " + y.to_string() +
                        " = " + (x + y).to_string() + " is not in the set"),
        x_(std::move(x)),
        y_(std::move(y)) {}
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  Rational sum() const { return x_ + y_; }

 private:
  Rational x_;
  Rational y_;
};

class OutOfRange : public DomainError {
 public:
  explicit OutOfRange(const std::string& message)
      : DomainError("OutOfRange", message) {}
};

class NotMaximal : public DomainError {
 public:
  explicit NotMaximal(const Rational& measure)
      : DomainError("NotMaximal",
                    "set is not maximal: measure " + measure.to_string() + " != 1/2"),
        measure_(measure) {}
  const Rational& measure() const { return measure_; }

 private:
  Rational measure_;
};

// The requested chord length is 1/m; such points can never be isolated.
class PointInP : public DomainError {
 public:
  explicit PointInP(const Rational& point)
      : DomainError("PointInP", point.to_string() +
                                    " is of the form 1/m and cannot be isolated"),
        point_(point) {}
  const Rational& point() const { return point_; }

 private:
  Rational point_;
};

// A chord vector misses a guaranteed bound at the configured resolution.
// Signals a grid that is too coarse, not a counterexample.
class InvariantViolation : public DomainError {
 public:
  explicit InvariantViolation(const std::string& message)
      : DomainError("InvariantViolation", message) {}
};

// No synthesis template covers the requested target.
class UnsupportedTarget : public DomainError {
 public:
  explicit UnsupportedTarget(const std::string& message)
      : DomainError("UnsupportedTarget", message) {}
};

// Both sides of the boundary/reflection identity were computed and differ.
// This is a bug, not bad input.
class IdentityFailure : public std::logic_error {
 public:
  explicit IdentityFailure(const std::string& message) : std::logic_error(message) {}
};

}  // namespace chordset

#endif  // CHORDSET_ERRORS_HPP_
