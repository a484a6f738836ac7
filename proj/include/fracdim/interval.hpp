// Copyright 2026 The fracdim Authors
//
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

#ifndef FRACDIM_INTERVAL_HPP
#define FRACDIM_INTERVAL_HPP

#include <optional>
#include <ostream>
#include <string>

#include "fracdim/rational.hpp"

namespace fracdim {

// Nonempty interval with rational endpoints and explicit closure flags.
// A degenerate interval (lo == hi) must be closed on both sides.
class Interval {
 public:
  Interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed);

  static Interval closed(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi), true, true};
  }
  static Interval half_open(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi), true, false};
  }
  static Interval open(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi), false, false};
  }
  static Interval point(const Rational& x) { return {x, x, true, true}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  Rational length() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const;
  // True when every point of `other` lies in this interval.
  bool contains(const Interval& other) const;

  // "[0,1/2)" style.
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
  bool lo_closed_;
  bool hi_closed_;
};

std::optional<Interval> interval_intersect(const Interval& a,
                                           const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace fracdim

#endif  // FRACDIM_INTERVAL_HPP
