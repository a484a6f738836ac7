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

#ifndef FRACDIM_WORD_HPP
#define FRACDIM_WORD_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fracdim/rational.hpp"

namespace fracdim {

// CF words carry arbitrary positive digits, EGY words are strictly increasing,
// ENG words are nondecreasing.
enum class WordKind { kContinuedFraction, kEgyptian, kEngel };

std::string_view to_string(WordKind kind);

// A finite digit sequence tagged with the expansion it belongs to. The
// ordering invariant of the kind is checked on construction.
class Word {
 public:
  explicit Word(WordKind kind = WordKind::kContinuedFraction) : kind_(kind) {}
  Word(WordKind kind, std::vector<BigInt> digits);

  static Word cf(std::initializer_list<long> digits);
  static Word egy(std::initializer_list<long> digits);
  static Word engel(std::initializer_list<long> digits);

  WordKind kind() const { return kind_; }
  const std::vector<BigInt>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  const BigInt& operator[](std::size_t i) const { return digits_[i]; }
  const BigInt& back() const { return digits_.back(); }

  // Returns a copy with `digit` appended; re-validates the kind invariant.
  Word extended(const BigInt& digit) const;

  // Same digits, different kind tag (validated).
  Word as(WordKind kind) const { return Word(kind, digits_); }

  // "[2,3]"; the empty word prints as "[]".
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.kind_ == b.kind_ && a.digits_ == b.digits_;
  }

 private:
  WordKind kind_;
  std::vector<BigInt> digits_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// The word with its last digit removed (â). Throws DomainError when empty.
Word word_parent(const Word& a);

// The word with its last digit reduced by one (a⁻). Throws DomainError when
// empty or when the last digit is 1.
Word word_decrement_last(const Word& a);

// Product of digits; 1 for the empty word.
BigInt word_product(const Word& a);

}  // namespace fracdim

#endif  // FRACDIM_WORD_HPP
