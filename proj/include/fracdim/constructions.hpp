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

#ifndef FRACDIM_CONSTRUCTIONS_HPP
#define FRACDIM_CONSTRUCTIONS_HPP

#include <compare>
#include <random>
#include <utility>
#include <vector>

#include "fracdim/interval.hpp"
#include "fracdim/rational.hpp"
#include "fracdim/word.hpp"

namespace fracdim {

// Target length m and scale base n shared by the good-word predicates.
struct GoodWordContext {
  GoodWordContext(unsigned m, unsigned long n);

  unsigned m;
  unsigned long n;
};

// A constructed word together with its exact value.
struct Approximation {
  Word word;
  Rational value;
};

struct CoverElement {
  Word word;
  Interval interval;
};

// Continued fraction [n, c, ..., c] of length m with c = max(2, ceil(2/eps)),
// whose value is within eps of 1/n. For m == 1 returns [n] (n >= 2).
Approximation cf_near_unit_fraction(unsigned long n, const Rational& eps,
                                    unsigned m);

// Greedy Egyptian word of length exactly m within n^(-2^m) of x, for
// 0 < x < 1/n. When the greedy expansion of x stops early at length k < m the
// remaining digits are max(a_k^3, n^(2^(m+1))) followed by successive cubes.
Approximation egy_approximate(const Rational& x, unsigned long n, unsigned m);

// Canonical Engel word of length exactly m within n^(-m-1) of x, for
// 0 < x < 1/n. When the Engel iteration stops early at length k < m every
// remaining digit is max(a_k, m n^(m+1)).
Approximation engel_approximate(const Rational& x, unsigned long n,
                                unsigned m);

// pi(a) <= n^m.
bool is_cf_good(const Word& a, const GoodWordContext& ctx);

// theta = n^m / pi(a). Throws DomainError unless a is CF-good.
Rational cf_theta(const Word& a, const GoodWordContext& ctx);

// All nondecreasing words of length k with a_i <= n^(2^(i-1)), in
// lexicographic order. k == 0 yields the single empty word.
std::vector<Word> enumerate_egf_good(unsigned k, unsigned long n);

// I(a) = [xi(a), xi(a) + m n^(-2^k)] for every EGF-good a of length k <= m,
// with I(empty) = [0, m/n].
std::vector<CoverElement> egf_cover(unsigned m, unsigned long n);

// pi(a) * a_k^(m-k+1) <= n^(m+1); the empty word is ENF-good. Words longer
// than m are never ENF-good.
bool is_enf_good(const Word& a, const GoodWordContext& ctx);

// gamma = (n^(m+1) / pi(a))^(1/(m-k+1)), kept implicit: only comparisons
// against integers are exposed, decided by exact integer powers.
class EnfGamma {
 public:
  EnfGamma(BigInt product, unsigned root, BigInt target)
      : product_(std::move(product)), root_(root), target_(std::move(target)) {}

  // Ordering of t relative to gamma: t^root * pi(a) vs n^(m+1).
  std::strong_ordering compare_to_integer(const BigInt& t) const;

  unsigned root() const { return root_; }

 private:
  BigInt product_;
  unsigned root_;
  BigInt target_;
};

// Throws DomainError unless a is ENF-good.
EnfGamma enf_gamma(const Word& a, const GoodWordContext& ctx);

// Rational bracket [lower, upper] around ln(n) with width below `tolerance`.
std::pair<Rational, Rational> ln_bracket(const BigInt& n,
                                         const Rational& tolerance);

// (2 m ln n + 8)^m n^m, with ln n replaced by a certified upper bound
// (error < 1e-6), so the result never under-approximates.
Rational bound_cf(unsigned m, unsigned long n);
// m (m+1) n^(2^m - 1).
BigInt bound_sumset(unsigned m, unsigned long n);
// (3m+1)^m n^m.
BigInt bound_engel(unsigned m, unsigned long n);

// Reproducible sample x in (0, 1/n): q log-uniform on [n+1, 10^6], numerator
// uniform on [1, q-1], rejected until x < 1/n.
Rational sample_below_unit_fraction(std::mt19937_64& rng, unsigned long n);

}  // namespace fracdim

#endif  // FRACDIM_CONSTRUCTIONS_HPP
