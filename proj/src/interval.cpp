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

#include "fracdim/interval.hpp"

#include "fracdim/errors.hpp"

namespace fracdim {

Interval::Interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)),
      hi_(std::move(hi)),
      lo_closed_(lo_closed),
      hi_closed_(hi_closed) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi");
  if (lo_ == hi_ && !(lo_closed_ && hi_closed_)) {
    throw DomainError("empty interval");
  }
}

bool Interval::contains(const Rational& x) const {
  const auto c_lo = x <=> lo_;
  const auto c_hi = x <=> hi_;
  const bool above = c_lo > 0 || (c_lo == 0 && lo_closed_);
  const bool below = c_hi < 0 || (c_hi == 0 && hi_closed_);
  return above && below;
}

bool Interval::contains(const Interval& other) const {
  const auto c_lo = other.lo_ <=> lo_;
  const auto c_hi = other.hi_ <=> hi_;
  const bool lo_ok = c_lo > 0 || (c_lo == 0 && (lo_closed_ || !other.lo_closed_));
  const bool hi_ok = c_hi < 0 || (c_hi == 0 && (hi_closed_ || !other.hi_closed_));
  return lo_ok && hi_ok;
}

std::string Interval::to_string() const {
  return std::string(lo_closed_ ? "[" : "(") + lo_.to_string() + "," +
         hi_.to_string() + (hi_closed_ ? "]" : ")");
}

std::optional<Interval> interval_intersect(const Interval& a,
                                           const Interval& b) {
  Rational lo;
  bool lo_closed;
  if (const auto c = a.lo() <=> b.lo(); c == 0) {
    lo = a.lo();
    lo_closed = a.lo_closed() && b.lo_closed();
  } else if (c > 0) {
    lo = a.lo();
    lo_closed = a.lo_closed();
  } else {
    lo = b.lo();
    lo_closed = b.lo_closed();
  }
  Rational hi;
  bool hi_closed;
  if (const auto c = a.hi() <=> b.hi(); c == 0) {
    hi = a.hi();
    hi_closed = a.hi_closed() && b.hi_closed();
  } else if (c < 0) {
    hi = a.hi();
    hi_closed = a.hi_closed();
  } else {
    hi = b.hi();
    hi_closed = b.hi_closed();
  }
  if (lo < hi || (lo == hi && lo_closed && hi_closed)) {
    return Interval(std::move(lo), std::move(hi), lo_closed, hi_closed);
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << iv.to_string();
}

}  // namespace fracdim
