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

#include "fracdim/brute_force.hpp"

#include <numeric>

#include "fracdim/errors.hpp"

namespace fracdim {

namespace {

using i128 = __int128;

struct Fraction {
  i128 num;
  i128 den;
};

Fraction reduced(i128 num, i128 den) {
  const auto g = std::gcd(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  return {num / g, den / g};
}

i128 ceil_div(i128 a, i128 b) { return (a + b - 1) / b; }

// Greedy Egyptian digits of num/den in (0, 1].
std::vector<i128> greedy_digits(Fraction x) {
  std::vector<i128> out;
  while (x.num > 0) {
    const i128 a = ceil_div(x.den, x.num);
    out.push_back(a);
    x = reduced(x.num * a - x.den, x.den * a);
  }
  return out;
}

std::vector<i128> engel_digits(Fraction x) {
  std::vector<i128> out;
  while (x.num > 0) {
    const i128 a = ceil_div(x.den, x.num);
    out.push_back(a);
    x = reduced(x.num * a - x.den, x.den);
  }
  return out;
}

class Marker {
 public:
  Marker(unsigned j_max, std::uint64_t domain_len, BruteForceOccupancy& out)
      : j_max_(j_max), len_(domain_len), out_(out) {
    for (unsigned j = 0; j <= j_max; ++j) {
      out_.occupied.emplace_back(len_ << j, 0);
    }
  }

  void mark(Fraction x) {
    for (unsigned j = 0; j <= j_max_; ++j) {
      auto& row = out_.occupied[j];
      auto k = static_cast<std::uint64_t>((x.num << j) / x.den);
      if (k >= row.size()) k = row.size() - 1;
      row[k] = 1;
    }
  }

 private:
  unsigned j_max_;
  std::uint64_t len_;
  BruteForceOccupancy& out_;
};

bool same(const std::vector<i128>& a, std::initializer_list<i128> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

BruteForceOccupancy brute_force_occupancy(const SetDescriptor& set,
                                          unsigned j_max,
                                          const EnumerationBounds& bounds) {
  const unsigned m = set.m();
  if (m > 2) throw DomainError("brute-force enumeration supports m <= 2");
  if (set.alpha() != 1) throw DomainError("brute-force enumeration needs alpha = 1");
  if (j_max > 20) throw DomainError("brute-force enumeration supports j <= 20");

  BruteForceOccupancy out{bounds, {}};
  const bool sumset = set.family() == Family::kSumset;
  Marker marker(j_max, sumset ? m : 1, out);
  const i128 top = bounds.denominator;
  const i128 cf_top = bounds.cf_digit;

  switch (set.family()) {
    case Family::kContinuedFraction:
      if (m == 1) {
        for (i128 a = 2; a <= cf_top; ++a) marker.mark({1, a});
      } else {
        // 1/(a + 1/b) = b/(ab + 1)
        for (i128 a = 1; a <= cf_top; ++a) {
          for (i128 b = 2; b <= cf_top; ++b) marker.mark({b, a * b + 1});
        }
      }
      break;
    case Family::kEgyGreedy:
    case Family::kEgyLeq: {
      const bool leq = set.family() == Family::kEgyLeq;
      if (leq) marker.mark({0, 1});
      if (m == 1 || leq) {
        for (i128 a = 1; a <= top; ++a) marker.mark({1, a});
      }
      if (m == 2) {
        for (i128 a = 1; a <= top; ++a) {
          for (i128 b = a + 1; b <= top; ++b) {
            const Fraction x = reduced(a + b, a * b);
            if (x.num > x.den) continue;
            if (same(greedy_digits(x), {a, b})) marker.mark(x);
          }
        }
      }
      break;
    }
    case Family::kEngel:
    case Family::kEngelLeq: {
      const bool leq = set.family() == Family::kEngelLeq;
      if (m == 1 || leq) {
        for (i128 a = 1; a <= top; ++a) marker.mark({1, a});
      }
      if (m == 2) {
        // 1/a + 1/(ab) = (b + 1)/(ab)
        for (i128 a = 1; a <= top; ++a) {
          for (i128 b = a; b <= top; ++b) {
            const Fraction x = reduced(b + 1, a * b);
            if (x.num > x.den) continue;
            if (same(engel_digits(x), {a, b})) marker.mark(x);
          }
        }
      }
      break;
    }
    case Family::kSumset:
      marker.mark({0, 1});
      for (i128 a = 1; a <= top; ++a) {
        marker.mark({1, a});
        if (m == 2) {
          for (i128 b = a; b <= top; ++b) marker.mark(reduced(a + b, a * b));
        }
      }
      break;
  }
  return out;
}

}  // namespace fracdim
