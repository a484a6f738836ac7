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

#ifndef FRACDIM_EXPANSIONS_HPP
#define FRACDIM_EXPANSIONS_HPP

#include <cstddef>
#include <optional>

#include "fracdim/rational.hpp"
#include "fracdim/word.hpp"

namespace fracdim {

// A value together with its canonical expansion.
struct Expansion {
  Word word;
  Rational value;
  std::size_t length = 0;
};

// Canonical continued fraction of x in (0,1) via the Gauss map; the last
// digit is always >= 2. Throws DomainError outside (0,1).
Word cf_expand(const Rational& x);

// Finite continued fraction value, evaluated bottom-up. Empty word -> 0.
Rational cf_eval(const Word& a);

// Greedy Egyptian expansion of x in (0,1]: each digit is the ceiling of the
// reciprocal of the running remainder. Throws DomainError outside (0,1].
Word egy_expand(const Rational& x);

// Greedy expansion truncated at `max_length` digits. Returns nullopt when the
// remainder is still nonzero after that many digits.
std::optional<Word> egy_expand_within(const Rational& x, std::size_t max_length);

// Sum of reciprocals of the digits. Any positive digits are accepted.
Rational egy_eval(const Word& a);

// Engel expansion of x in (0,1] via x <- a*x - 1, a = ceil(1/x).
Word engel_expand(const Rational& x);

std::optional<Word> engel_expand_within(const Rational& x,
                                        std::size_t max_length);

// 1/a1 + 1/(a1 a2) + ... + 1/(a1 ... ak).
Rational engel_eval(const Word& a);

// Tail-sum test of the greedy condition on a strictly increasing word:
// 1/a_l <= t_l < 1/(a_l - 1) for every l (t_1 <= 1 when a_1 = 1). The empty
// word is admissible (it expands 0). Throws DomainError if the digits do not
// strictly increase.
bool is_greedy_admissible(const Word& a);

// Dispatches on kind. Egyptian expansion of 0 is the empty word (length 0);
// continued fraction and Engel reject 0.
Expansion expand(WordKind kind, const Rational& x);
Rational evaluate(const Word& a);

}  // namespace fracdim

#endif  // FRACDIM_EXPANSIONS_HPP
