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

#include "fracdim/word.hpp"

#include <sstream>

#include "fracdim/errors.hpp"

namespace fracdim {

std::string_view to_string(WordKind kind) {
  switch (kind) {
    case WordKind::kContinuedFraction:
      return "cf";
    case WordKind::kEgyptian:
      return "egy";
    case WordKind::kEngel:
      return "engel";
  }
  return "?";
}

namespace {

void check_pair(WordKind kind, const BigInt& prev, const BigInt& next) {
  if (kind == WordKind::kEgyptian && !(prev < next)) {
    throw DomainError("Egyptian word digits must strictly increase");
  }
  if (kind == WordKind::kEngel && next < prev) {
    throw DomainError("Engel word digits must be nondecreasing");
  }
}

std::vector<BigInt> to_big(std::initializer_list<long> digits) {
  std::vector<BigInt> out;
  out.reserve(digits.size());
  for (long d : digits) out.emplace_back(d);
  return out;
}

}  // namespace

Word::Word(WordKind kind, std::vector<BigInt> digits)
    : kind_(kind), digits_(std::move(digits)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] < 1) throw DomainError("word digits must be positive");
    if (i > 0) check_pair(kind_, digits_[i - 1], digits_[i]);
  }
}

Word Word::cf(std::initializer_list<long> digits) {
  return Word(WordKind::kContinuedFraction, to_big(digits));
}

Word Word::egy(std::initializer_list<long> digits) {
  return Word(WordKind::kEgyptian, to_big(digits));
}

Word Word::engel(std::initializer_list<long> digits) {
  return Word(WordKind::kEngel, to_big(digits));
}

Word Word::extended(const BigInt& digit) const {
  if (digit < 1) throw DomainError("word digits must be positive");
  if (!digits_.empty()) check_pair(kind_, digits_.back(), digit);
  Word out = *this;
  out.digits_.push_back(digit);
  return out;
}

std::string Word::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) os << ',';
    os << digits_[i].get_str();
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.to_string();
}

Word word_parent(const Word& a) {
  if (a.empty()) throw DomainError("parent of the empty word");
  std::vector<BigInt> digits(a.digits().begin(), a.digits().end() - 1);
  return Word(a.kind(), std::move(digits));
}

Word word_decrement_last(const Word& a) {
  if (a.empty()) throw DomainError("decrement of the empty word");
  if (a.back() < 2) throw DomainError("last digit is 1; cannot decrement");
  std::vector<BigInt> digits = a.digits();
  digits.back() -= 1;
  return Word(a.kind(), std::move(digits));
}

BigInt word_product(const Word& a) {
  BigInt p = 1;
  for (const auto& d : a.digits()) p *= d;
  return p;
}

}  // namespace fracdim
