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

#ifndef FRACDIM_SET_DESCRIPTOR_HPP
#define FRACDIM_SET_DESCRIPTOR_HPP

#include <string>
#include <string_view>

#include "fracdim/interval.hpp"
#include "fracdim/rational.hpp"

namespace fracdim {

enum class Family {
  kContinuedFraction,  // C_m: CF expansion of length exactly m
  kEgyGreedy,          // E_m: greedy Egyptian expansion of length exactly m
  kEgyLeq,             // A_m: greedy Egyptian length at most m, including 0
  kEngel,              // E*_m: Engel expansion of length exactly m
  kEngelLeq,           // A*_m: Engel expansion of length 1..m
  kSumset,             // m-fold sums of {1/n^alpha} ∪ {0}; alpha = 1 is F_m
};

// Symbolic description of one of the target sets.
class SetDescriptor {
 public:
  // Throws DomainError for m == 0, alpha <= 0, or alpha != 1 outside kSumset.
  SetDescriptor(Family family, unsigned m, Rational alpha = 1);

  static SetDescriptor cf(unsigned m) { return {Family::kContinuedFraction, m}; }
  static SetDescriptor egy(unsigned m) { return {Family::kEgyGreedy, m}; }
  static SetDescriptor egy_leq(unsigned m) { return {Family::kEgyLeq, m}; }
  static SetDescriptor engel(unsigned m) { return {Family::kEngel, m}; }
  static SetDescriptor engel_leq(unsigned m) { return {Family::kEngelLeq, m}; }
  static SetDescriptor sumset(unsigned m, Rational alpha = 1) {
    return {Family::kSumset, m, std::move(alpha)};
  }

  // Parses "cf:M", "egy:M", "egy-leq:M", "engel:M", "engel-leq:M" and
  // "sumset:M[:alpha=P/Q]". Throws DomainError on malformed input.
  static SetDescriptor parse(std::string_view spec);

  Family family() const { return family_; }
  unsigned m() const { return m_; }
  const Rational& alpha() const { return alpha_; }

  // [0, m] for sumsets, [0, 1] otherwise.
  Interval default_domain() const;

  // Family tag used in CSV output ("cf", "egy-leq", ...).
  std::string_view name() const;
  // Round-trips through parse().
  std::string to_string() const;

  friend bool operator==(const SetDescriptor&, const SetDescriptor&) = default;

 private:
  Family family_;
  unsigned m_;
  Rational alpha_;
};

}  // namespace fracdim

#endif  // FRACDIM_SET_DESCRIPTOR_HPP
