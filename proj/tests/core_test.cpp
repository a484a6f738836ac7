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

#include <random>
#include <sstream>

#include "fracdim/errors.hpp"
#include "fracdim/interval.hpp"
#include "fracdim/rational.hpp"
#include "fracdim/set_descriptor.hpp"
#include "fracdim/word.hpp"

using namespace fracdim;

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Cross-multiplication oracle in 128-bit integers.
struct Frac {
  i128 num;
  i128 den;
};

Frac norm(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  return {num / g, den / g};
}

i128 parse_i128(const std::string& s) {
  i128 v = 0;
  bool neg = false;
  for (const char c : s) {
    if (c == '-') {
      neg = true;
    } else {
      v = v * 10 + (c - '0');
    }
  }
  return neg ? -v : v;
}

// Reads a Rational back through its printed form, independent of GMP.
Frac from_text(const Rational& r) {
  const std::string s = r.to_string();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return {parse_i128(s), 1};
  return {parse_i128(s.substr(0, slash)), parse_i128(s.substr(slash + 1))};
}

bool same(const Rational& r, const Frac& f) {
  const Frac g = from_text(r);
  return g.num == f.num && g.den == f.den;
}

}  // namespace

TEST_CASE("rational arithmetic matches a cross-multiplication oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 20000; ++i) {
    const long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
    const Rational a{BigInt(p), BigInt(q)}, b{BigInt(r), BigInt(s)};
    CHECK(same(a + b, norm(i128(p) * s + i128(r) * q, i128(q) * s)));
    CHECK(same(a - b, norm(i128(p) * s - i128(r) * q, i128(q) * s)));
    CHECK(same(a * b, norm(i128(p) * r, i128(q) * s)));
    if (r != 0) CHECK(same(a / b, norm(i128(p) * s, i128(q) * r)));
    const i128 lhs = i128(p) * s, rhs = i128(r) * q;
    CHECK((a < b) == (lhs < rhs));
    CHECK((a == b) == (lhs == rhs));
  }
}

TEST_CASE("rationals are normalized") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(4).to_string() == "4");
  CHECK(Rational(0).sign() == 0);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
  CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/7") == Rational(BigInt(3), BigInt(7)));
  CHECK(Rational::parse("-2/4") == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("12345678901234567890/3").numerator() ==
        BigInt("4115226300411522630"));
  for (const char* bad : {"", "1/", "/2", "a/b", "1/0", "1//2", "1.5", "--1"}) {
    CHECK_THROWS_AS(Rational::parse(bad), DomainError);
  }
}

TEST_CASE("floor and ceil round toward the right integers") {
  CHECK(Rational::parse("7/2").floor() == 3);
  CHECK(Rational::parse("7/2").ceil() == 4);
  CHECK(Rational::parse("-7/2").floor() == -4);
  CHECK(Rational::parse("-7/2").ceil() == -3);
  CHECK(Rational(5).floor() == 5);
  CHECK(Rational(5).ceil() == 5);
  CHECK(Rational::parse("1/3").is_integer() == false);
}

TEST_CASE("integer roots bracket the true root") {
  for (unsigned long k = 1; k <= 4; ++k) {
    for (unsigned long v = 0; v <= 3000; ++v) {
      const BigInt x(v);
      const BigInt f = floor_root(x, k), c = ceil_root(x, k);
      CHECK(pow(f, k) <= x);
      CHECK(pow(f + 1, k) > x);
      CHECK(pow(c, k) >= x);
      if (c > 0) CHECK(pow(c - 1, k) < x);
    }
  }
}

TEST_CASE("pow on rationals") {
  CHECK(pow(Rational::parse("2/3"), 3) == Rational::parse("8/27"));
  CHECK(pow(Rational::parse("-1/2"), 0) == Rational(1));
}

TEST_CASE("word construction enforces kind invariants") {
  CHECK_NOTHROW(Word::egy({2, 4, 20}));
  CHECK_THROWS_AS(Word::egy({2, 2}), DomainError);
  CHECK_THROWS_AS(Word::egy({3, 2}), DomainError);
  CHECK_NOTHROW(Word::engel({2, 2, 5}));
  CHECK_THROWS_AS(Word::engel({3, 2}), DomainError);
  CHECK_NOTHROW(Word::cf({5, 1, 3}));
  CHECK_THROWS_AS(Word::cf({0, 2}), DomainError);
  CHECK(Word::cf({2, 3}).to_string() == "[2,3]");
  CHECK(Word(WordKind::kEgyptian, {}).to_string() == "[]");
}

TEST_CASE("word parent, decrement and product") {
  CHECK(word_parent(Word::cf({2, 3})) == Word::cf({2}));
  CHECK(word_parent(Word::cf({5})).empty());
  CHECK(word_parent(Word::cf({1, 2, 7})) == Word::cf({1, 2}));
  CHECK(word_decrement_last(Word::cf({2, 3})) == Word::cf({2, 2}));
  CHECK(word_decrement_last(Word::cf({5})) == Word::cf({4}));
  CHECK_THROWS_AS(word_decrement_last(Word::cf({1, 2, 1})), DomainError);
  CHECK(word_product(Word::cf({2, 3})) == 6);
  CHECK(word_product(Word(WordKind::kContinuedFraction, {})) == 1);
  CHECK(word_product(Word::cf({4, 4, 4})) == 64);
}

TEST_CASE("decrementing then taking the parent equals the parent") {
  for (long a = 1; a <= 5; ++a) {
    for (long b = 2; b <= 6; ++b) {
      const Word w = Word::cf({a, b});
      CHECK(word_parent(word_decrement_last(w)) == word_parent(w));
    }
  }
}

TEST_CASE("interval intersection respects endpoint flags") {
  const Rational q = Rational::parse("1/4"), h = Rational::parse("1/2"),
                 t = Rational::parse("3/4");
  const auto a = interval_intersect(Interval::half_open(0, h), Interval::half_open(q, t));
  REQUIRE(a);
  CHECK(*a == Interval::half_open(q, h));
  CHECK_FALSE(interval_intersect(Interval::half_open(0, h), Interval::closed(h, 1)));
  const auto p = interval_intersect(Interval::closed(0, 1), Interval::closed(1, 2));
  REQUIRE(p);
  CHECK(p->is_point());
  CHECK(p->contains(Rational(1)));
}

TEST_CASE("interval containment and validation") {
  const Interval cell = Interval::half_open(0, Rational::parse("1/2"));
  CHECK(cell.contains(Rational(0)));
  CHECK_FALSE(cell.contains(Rational::parse("1/2")));
  CHECK(cell.length() == Rational::parse("1/2"));
  CHECK(cell.to_string() == "[0,1/2)");
  CHECK(Interval::closed(0, 1).contains(cell));
  CHECK_THROWS_AS(Interval::closed(1, 0), DomainError);
  CHECK_THROWS_AS(Interval::open(1, 1), DomainError);
}

TEST_CASE("set descriptors parse and print") {
  const auto s = SetDescriptor::parse("sumset:2:alpha=3/2");
  CHECK(s.family() == Family::kSumset);
  CHECK(s.m() == 2);
  CHECK(s.alpha() == Rational::parse("3/2"));
  CHECK(s.to_string() == "sumset:2:alpha=3/2");
  CHECK(SetDescriptor::parse("sumset:2").to_string() == "sumset:2");
  CHECK(SetDescriptor::parse("egy-leq:3") == SetDescriptor::egy_leq(3));
  CHECK(SetDescriptor::parse("engel-leq:1").name() == "engel-leq");
  CHECK(SetDescriptor::sumset(3).default_domain() == Interval::closed(0, 3));
  CHECK(SetDescriptor::cf(3).default_domain() == Interval::closed(0, 1));
  for (const char* bad : {"cf:0", "cf", "cf:x", "egg:2", "cf:2:alpha=2", "sumset:1:alpha=0",
                          "sumset:1:beta=2", "sumset:1:alpha=-1"}) {
    CHECK_THROWS_AS(SetDescriptor::parse(bad), DomainError);
  }
}
