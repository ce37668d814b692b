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

#include "chordset/interval_union.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chordset {

OpenInterval::OpenInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) {
    throw std::invalid_argument("empty open interval (" + lo_.to_string() + ", " +
                                hi_.to_string() + ")");
  }
}

OpenIntervalUnion::OpenIntervalUnion(std::initializer_list<OpenInterval> raw)
    : OpenIntervalUnion(normalize(std::vector<OpenInterval>(raw))) {}

OpenIntervalUnion OpenIntervalUnion::normalize(std::vector<OpenInterval> raw) {
  std::sort(raw.begin(), raw.end(), [](const OpenInterval& a, const OpenInterval& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.hi() < b.hi();
  });
  OpenIntervalUnion out;
  for (auto& iv : raw) {
    if (!out.intervals_.empty() && iv.lo() < out.intervals_.back().hi()) {
      if (out.intervals_.back().hi() < iv.hi()) {
        out.intervals_.back() = OpenInterval(out.intervals_.back().lo(), iv.hi());
      }
    } else {
      out.intervals_.push_back(std::move(iv));
    }
  }
  return out;
}

std::string OpenIntervalUnion::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

OpenIntervalUnion unite(const OpenIntervalUnion& a, const OpenIntervalUnion& b) {
  std::vector<OpenInterval> raw(a.intervals().begin(), a.intervals().end());
  raw.insert(raw.end(), b.intervals().begin(), b.intervals().end());
  return OpenIntervalUnion::normalize(std::move(raw));
}

OpenIntervalUnion intersect(const OpenIntervalUnion& a, const OpenIntervalUnion& b) {
  std::vector<OpenInterval> raw;
  auto ia = a.intervals().begin();
  auto ib = b.intervals().begin();
  while (ia != a.intervals().end() && ib != b.intervals().end()) {
    Rational lo = max(ia->lo(), ib->lo());
    Rational hi = min(ia->hi(), ib->hi());
    if (lo < hi) raw.emplace_back(std::move(lo), std::move(hi));
    if (ia->hi() < ib->hi()) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return OpenIntervalUnion::normalize(std::move(raw));
}

OpenIntervalUnion complement_in(const OpenIntervalUnion& a, const OpenInterval& box) {
  std::vector<OpenInterval> raw;
  Rational cursor = box.lo();
  for (const auto& iv : a.intervals()) {
    if (iv.hi() <= box.lo()) continue;
    if (iv.lo() >= box.hi()) break;
    if (cursor < iv.lo()) raw.emplace_back(cursor, iv.lo());
    cursor = max(cursor, iv.hi());
  }
  if (cursor < box.hi()) raw.emplace_back(cursor, box.hi());
  return OpenIntervalUnion::normalize(std::move(raw));
}

Rational measure(const OpenIntervalUnion& a) {
  Rational total;
  for (const auto& iv : a.intervals()) total += iv.length();
  return total;
}

OpenIntervalUnion minkowski_sum(const OpenIntervalUnion& a, const OpenIntervalUnion& b) {
  std::vector<OpenInterval> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& x : a.intervals()) {
    for (const auto& y : b.intervals()) {
      raw.emplace_back(x.lo() + y.lo(), x.hi() + y.hi());
    }
  }
  return OpenIntervalUnion::normalize(std::move(raw));
}

OpenIntervalUnion k_fold_sum(const OpenIntervalUnion& a, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k_fold_sum: k must be >= 1");
  // Binary powering: the sumset is associative and commutative.
  OpenIntervalUnion result;
  OpenIntervalUnion power = a;
  bool have_result = false;
  while (k > 0) {
    if (k & 1) {
      result = have_result ? minkowski_sum(result, power) : power;
      have_result = true;
    }
    k >>= 1;
    if (k > 0) power = minkowski_sum(power, power);
  }
  return result;
}

OpenIntervalUnion scale(const OpenIntervalUnion& a, const Rational& k) {
  if (k.sign() <= 0) throw std::invalid_argument("scale: factor must be positive");
  std::vector<OpenInterval> raw;
  raw.reserve(a.size());
  for (const auto& iv : a.intervals()) raw.emplace_back(iv.lo() * k, iv.hi() * k);
  return OpenIntervalUnion::normalize(std::move(raw));
}

OpenIntervalUnion reflect(const OpenIntervalUnion& a) {
  std::vector<OpenInterval> raw;
  raw.reserve(a.size());
  const Rational one(1);
  for (const auto& iv : a.intervals()) {
    if (iv.lo().sign() < 0 || one < iv.hi()) {
      throw std::invalid_argument("reflect: interval " + iv.lo().to_string() + ", " +
                                  iv.hi().to_string() + " is not inside [0, 1]");
    }
    raw.emplace_back(one - iv.hi(), one - iv.lo());
  }
  return OpenIntervalUnion::normalize(std::move(raw));
}

std::vector<Rational> boundary_points(const OpenIntervalUnion& a) {
  std::vector<Rational> out;
  for (const auto& iv : a.intervals()) {
    if (out.empty() || out.back() != iv.lo()) out.push_back(iv.lo());
    out.push_back(iv.hi());
  }
  return out;
}

OpenIntervalUnion remove_point(const OpenIntervalUnion& a, const Rational& p) {
  std::vector<OpenInterval> raw;
  raw.reserve(a.size() + 1);
  for (const auto& iv : a.intervals()) {
    if (iv.contains(p)) {
      raw.emplace_back(iv.lo(), p);
      raw.emplace_back(p, iv.hi());
    } else {
      raw.push_back(iv);
    }
  }
  return OpenIntervalUnion::normalize(std::move(raw));
}

bool contains(const OpenIntervalUnion& a, const Rational& p) {
  const auto ivs = a.intervals();
  // First member with hi > p; only it can contain p.
  auto it = std::upper_bound(ivs.begin(), ivs.end(), p,
                             [](const Rational& x, const OpenInterval& iv) {
                               return x < iv.hi();
                             });
  return it != ivs.end() && it->contains(p);
}

bool is_subset(const OpenIntervalUnion& a, const OpenIntervalUnion& b) {
  // Each member of a is connected, so it must fit inside a single member of b.
  auto ib = b.intervals().begin();
  for (const auto& iv : a.intervals()) {
    while (ib != b.intervals().end() && ib->hi() < iv.hi()) ++ib;
    if (ib == b.intervals().end()) return false;
    if (iv.lo() < ib->lo()) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const OpenInterval& i) {
  return os << '(' << i.lo() << ", " << i.hi() << ')';
}

std::ostream& operator<<(std::ostream& os, const OpenIntervalUnion& u) {
  if (u.empty()) return os << "{}";
  bool first = true;
  for (const auto& iv : u.intervals()) {
    if (!first) os << " u ";
    os << iv;
    first = false;
  }
  return os;
}

}  // namespace chordset
