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

#include "fracdim/expansions.hpp"

#include <limits>

#include "fracdim/errors.hpp"

namespace fracdim {

Word cf_expand(const Rational& x) {
  if (x.sign() <= 0 || x >= 1) {
    throw DomainError("continued fraction expansion needs x in (0,1), got " +
                      x.to_string());
  }
  std::vector<BigInt> digits;
  Rational t = x;
  while (!t.is_zero()) {
    const Rational inv = t.reciprocal();
    BigInt a = inv.floor();
    t = inv - Rational(a);
    digits.push_back(std::move(a));
  }
  return Word(WordKind::kContinuedFraction, std::move(digits));
}

Rational cf_eval(const Word& a) {
  Rational v;
  for (auto it = a.digits().rbegin(); it != a.digits().rend(); ++it) {
    v = (Rational(*it) + v).reciprocal();
  }
  return v;
}

std::optional<Word> egy_expand_within(const Rational& x,
                                      std::size_t max_length) {
  if (x.sign() <= 0 || x > 1) {
    throw DomainError("Egyptian expansion needs x in (0,1], got " +
                      x.to_string());
  }
  std::vector<BigInt> digits;
  Rational rem = x;
  while (!rem.is_zero()) {
    if (digits.size() == max_length) return std::nullopt;
    BigInt a = rem.reciprocal().ceil();
    rem -= Rational(1, a);
    digits.push_back(std::move(a));
  }
  return Word(WordKind::kEgyptian, std::move(digits));
}

Word egy_expand(const Rational& x) {
  return *egy_expand_within(x, std::numeric_limits<std::size_t>::max());
}

Rational egy_eval(const Word& a) {
  Rational s;
  for (const auto& d : a.digits()) s += Rational(1, d);
  return s;
}

std::optional<Word> engel_expand_within(const Rational& x,
                                        std::size_t max_length) {
  if (x.sign() <= 0 || x > 1) {
    throw DomainError("Engel expansion needs x in (0,1], got " + x.to_string());
  }
  std::vector<BigInt> digits;
  Rational t = x;
  while (!t.is_zero()) {
    if (digits.size() == max_length) return std::nullopt;
    BigInt a = t.reciprocal().ceil();
    t = Rational(a) * t - 1;
    digits.push_back(std::move(a));
  }
  return Word(WordKind::kEngel, std::move(digits));
}

Word engel_expand(const Rational& x) {
  return *engel_expand_within(x, std::numeric_limits<std::size_t>::max());
}

Rational engel_eval(const Word& a) {
  Rational v;
  for (auto it = a.digits().rbegin(); it != a.digits().rend(); ++it) {
    v = (v + 1) / Rational(*it);
  }
  return v;
}

bool is_greedy_admissible(const Word& a) {
  const auto& d = a.digits();
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (!(d[i - 1] < d[i])) {
      throw DomainError("greedy admissibility needs strictly increasing digits");
    }
  }
  Rational tail;
  for (std::size_t i = d.size(); i-- > 0;) {
    tail += Rational(1, d[i]);
    if (d[i] == 1) {
      if (i != 0 || tail > 1) return false;
    } else if (!(tail < Rational(1, d[i] - 1))) {
      return false;
    }
  }
  return true;
}

Expansion expand(WordKind kind, const Rational& x) {
  Word w(kind);
  switch (kind) {
    case WordKind::kContinuedFraction:
      w = cf_expand(x);
      break;
    case WordKind::kEgyptian:
      if (!x.is_zero()) w = egy_expand(x);
      break;
    case WordKind::kEngel:
      w = engel_expand(x);
      break;
  }
  const std::size_t len = w.size();
  return {std::move(w), x, len};
}

Rational evaluate(const Word& a) {
  switch (a.kind()) {
    case WordKind::kContinuedFraction:
      return cf_eval(a);
    case WordKind::kEgyptian:
      return egy_eval(a);
    case WordKind::kEngel:
      return engel_eval(a);
  }
  return {};
}

}  // namespace fracdim
