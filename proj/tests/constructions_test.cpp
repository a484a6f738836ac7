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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "fracdim/constructions.hpp"
#include "fracdim/errors.hpp"
#include "fracdim/expansions.hpp"

using namespace fracdim;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

Rational inverse_power(unsigned long n, unsigned long k) {
  return Rational(BigInt(1), pow(BigInt(n), k));
}

Word cf_word(std::vector<BigInt> d) { return Word(WordKind::kContinuedFraction, std::move(d)); }

}  // namespace

TEST_CASE("continued fraction near a unit fraction") {
  const auto a = cf_near_unit_fraction(3, q("1/10"), 2);
  CHECK(a.word == Word::cf({3, 20}));
  CHECK(a.value == q("20/61"));
  const auto b = cf_near_unit_fraction(5, q("1/2"), 1);
  CHECK(b.word == Word::cf({5}));
  CHECK(b.value == q("1/5"));
  const auto c = cf_near_unit_fraction(2, q("1/100"), 3);
  CHECK(c.word == Word::cf({2, 200, 200}));
  CHECK((c.value - q("1/2")).abs() < q("1/100"));
  CHECK(cf_near_unit_fraction(1, Rational(5), 2).word.back() >= 2);
  CHECK_THROWS_AS(cf_near_unit_fraction(1, q("1/2"), 1), DomainError);
  CHECK_THROWS_AS(cf_near_unit_fraction(2, Rational(0), 2), DomainError);
}

TEST_CASE("Egyptian approximation examples") {
  const auto a = egy_approximate(q("2/5"), 2, 3);
  CHECK(a.word == Word::egy({3, 15, 65536}));
  CHECK(a.value == q("1/3") + q("1/15") + q("1/65536"));
  CHECK((a.value - q("2/5")).abs() <= inverse_power(2, 8));
  const auto b = egy_approximate(q("2/5"), 2, 2);
  CHECK(b.word == Word::egy({3, 15}));
  CHECK(b.value == q("2/5"));
  const auto c = egy_approximate(q("1/3"), 2, 1);
  CHECK(c.word == Word::egy({3}));
  CHECK_THROWS_AS(egy_approximate(q("1/2"), 2, 1), DomainError);
  CHECK_THROWS_AS(egy_approximate(q("0"), 2, 1), DomainError);
}

TEST_CASE("Engel approximation examples") {
  const auto a = engel_approximate(q("1/3"), 2, 2);
  CHECK(a.word == Word::engel({3, 16}));
  CHECK(a.value == q("17/48"));
  CHECK(engel_expand(a.value) == a.word);
  const auto b = engel_approximate(q("2/5"), 2, 2);
  CHECK(b.word == Word::engel({3, 5}));
  CHECK(b.value == q("2/5"));
  const auto c = engel_approximate(q("1/4"), 3, 1);
  CHECK(c.word == Word::engel({4}));
  CHECK_THROWS_AS(engel_approximate(q("1/3"), 3, 2), DomainError);
}

TEST_CASE("approximations of sampled points land in the target sets") {
  std::mt19937_64 rng(5);
  for (unsigned long n = 2; n <= 4; ++n) {
    for (unsigned m = 1; m <= 3; ++m) {
      for (int i = 0; i < 40; ++i) {
        const Rational x = sample_below_unit_fraction(rng, n);
        const auto e = egy_approximate(x, n, m);
        CHECK(e.word.size() == m);
        CHECK(egy_expand(e.value) == e.word);
        CHECK((x - e.value).abs() <= inverse_power(n, 1UL << m));
        const auto g = engel_approximate(x, n, m);
        CHECK(g.word.size() == m);
        CHECK(engel_expand(g.value) == g.word);
        CHECK((x - g.value).abs() <= inverse_power(n, m + 1));
      }
    }
  }
}

TEST_CASE("sampling is reproducible and stays below 1/n") {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 500; ++i) {
    const Rational x = sample_below_unit_fraction(a, 3);
    CHECK(x == sample_below_unit_fraction(b, 3));
    CHECK(x.sign() > 0);
    CHECK(x < q("1/3"));
    CHECK(x.denominator() <= 1000000);
  }
}

TEST_CASE("CF-good words and theta") {
  const GoodWordContext ctx(2, 3);
  CHECK(cf_theta(cf_word({}), ctx) == 9);
  CHECK(cf_theta(Word::cf({2}), ctx) == q("9/2"));
  CHECK(is_cf_good(Word::cf({3, 3}), ctx));
  CHECK_FALSE(is_cf_good(Word::cf({2, 5}), ctx));
  CHECK_THROWS_AS(cf_theta(Word::cf({2, 5}), ctx), DomainError);
  CHECK_THROWS_AS(GoodWordContext(0, 3), DomainError);
  CHECK_THROWS_AS(GoodWordContext(2, 1), DomainError);
}

TEST_CASE("completions after a digit above theta stay within theta / n^2m") {
  std::size_t checked = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned long n = 2; n <= 4; ++n) {
      const GoodWordContext ctx(m, n);
      const BigInt cap = pow(BigInt(n), m);
      const Rational scale = inverse_power(n, 2UL * m);
      std::vector<BigInt> prefix;
      std::function<void()> visit = [&] {
        const Word a = cf_word(prefix);
        const Rational theta = cf_theta(a, ctx);
        const Rational ga = cf_eval(a);
        const BigInt first = theta.floor() + 1;
        for (BigInt l = first; Rational(l) <= theta + 20; ++l) {
          std::vector<BigInt> b = prefix;
          b.push_back(l);
          std::function<void()> complete = [&] {
            if (b.size() == m) {
              if (b.back() < 2) return;
              ++checked;
              CHECK((cf_eval(cf_word(b)) - ga).abs() <= theta * scale);
              return;
            }
            const long lo = b.size() + 1 == m ? 2 : 1;
            for (long c = lo; c <= 10; ++c) {
              b.push_back(c);
              complete();
              b.pop_back();
            }
          };
          complete();
        }
        if (prefix.size() + 1 >= m) return;
        for (BigInt d = 1; word_product(a) * d <= cap; ++d) {
          prefix.push_back(d);
          visit();
          prefix.pop_back();
        }
      };
      visit();
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("EGF-good enumeration") {
  CHECK(enumerate_egf_good(0, 2).size() == 1);
  CHECK(enumerate_egf_good(0, 2)[0].empty());
  const auto one = enumerate_egf_good(1, 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == Word::engel({1}));
  CHECK(one[1] == Word::engel({2}));
  const auto two = enumerate_egf_good(2, 2);
  const std::vector<Word> expected{Word::engel({1, 1}), Word::engel({1, 2}), Word::engel({1, 3}),
                                   Word::engel({1, 4}), Word::engel({2, 2}), Word::engel({2, 3}),
                                   Word::engel({2, 4})};
  CHECK(two == expected);
  for (unsigned long n = 2; n <= 3; ++n) {
    for (unsigned k = 0; k <= 3; ++k) {
      CHECK(BigInt(static_cast<unsigned long>(enumerate_egf_good(k, n).size())) <=
            pow(BigInt(n), (1UL << k) - 1));
    }
  }
}

TEST_CASE("EGF cover") {
  const auto cover = egf_cover(1, 2);
  REQUIRE(cover.size() == 3);
  CHECK(cover[0].word.empty());
  CHECK(cover[0].interval == Interval::closed(0, q("1/2")));
  CHECK(cover[1].interval == Interval::closed(1, q("5/4")));
  CHECK(cover[2].interval == Interval::closed(q("1/2"), q("3/4")));
  for (unsigned m = 1; m <= 3; ++m) {
    std::size_t expected = 0;
    for (unsigned k = 0; k <= m; ++k) expected += enumerate_egf_good(k, 3).size();
    const auto c = egf_cover(m, 3);
    CHECK(c.size() == expected);
    for (const auto& e : c) {
      CHECK(e.interval.lo() == egy_eval(e.word));
      const Rational len = e.word.empty() ? Rational(BigInt(m), BigInt(3))
                                          : Rational(m) * inverse_power(3, 1UL << e.word.size());
      CHECK(e.interval.length() == len);
    }
  }
}

TEST_CASE("ENF-good words and gamma") {
  const GoodWordContext ctx(2, 2);
  CHECK(enf_gamma(Word(WordKind::kEngel, {}), GoodWordContext(3, 5)).compare_to_integer(5) == 0);
  CHECK(enf_gamma(Word::engel({2}), ctx).compare_to_integer(2) == 0);
  CHECK(enf_gamma(Word::engel({2}), ctx).compare_to_integer(3) > 0);
  CHECK(enf_gamma(Word::engel({2}), ctx).compare_to_integer(1) < 0);
  CHECK_FALSE(is_enf_good(Word::engel({3}), ctx));
  CHECK_THROWS_AS(enf_gamma(Word::engel({3}), ctx), DomainError);
}

TEST_CASE("a word extends to an ENF-good word exactly when the digit is at most gamma") {
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned long n = 2; n <= 3; ++n) {
      const GoodWordContext ctx(m, n);
      const BigInt top = pow(BigInt(n), m + 1UL);
      std::vector<BigInt> prefix;
      std::function<void()> visit = [&] {
        const Word a(WordKind::kEngel, prefix);
        REQUIRE(is_enf_good(a, ctx));
        if (a.size() >= m) return;
        const EnfGamma gamma = enf_gamma(a, ctx);
        const BigInt from = a.empty() ? BigInt(1) : a.back();
        for (BigInt l = from; l <= top + 2; ++l) {
          const bool extends = is_enf_good(a.extended(l), ctx);
          CHECK(extends == (gamma.compare_to_integer(l) <= 0));
          if (extends) {
            prefix.push_back(l);
            visit();
            prefix.pop_back();
          }
        }
      };
      visit();
    }
  }
}

TEST_CASE("closed-form bounds") {
  const Rational cf14 = bound_cf(1, 4);
  CHECK(cf14.to_double() >= (2 * std::log(4.0) + 8) * 4);
  CHECK(cf14.to_double() < (2 * std::log(4.0) + 8) * 4 + 1e-4);
  CHECK(bound_sumset(2, 2) == 48);
  CHECK(bound_sumset(1, 4) == 8);
  CHECK(bound_engel(2, 3) == 441);
  CHECK(bound_engel(1, 2) == 8);
}

TEST_CASE("logarithm brackets contain ln n") {
  for (unsigned long n = 1; n <= 200; ++n) {
    const auto [lo, hi] = ln_bracket(BigInt(n), q("1/1000000"));
    CHECK(lo <= hi);
    CHECK(hi - lo < q("1/1000000"));
    CHECK(lo.to_double() <= std::log(static_cast<double>(n)) + 1e-12);
    CHECK(hi.to_double() >= std::log(static_cast<double>(n)) - 1e-12);
  }
}
