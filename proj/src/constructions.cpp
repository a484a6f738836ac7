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

#include "fracdim/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracdim/errors.hpp"
#include "fracdim/expansions.hpp"

namespace fracdim {

GoodWordContext::GoodWordContext(unsigned m_, unsigned long n_)
    : m(m_), n(n_) {
  if (m < 1) throw DomainError("good-word context needs m >= 1");
  if (n < 2) throw DomainError("good-word context needs n >= 2");
}

namespace {

BigInt big(unsigned long v) { return BigInt(v); }

void require_below_unit_fraction(const Rational& x, unsigned long n,
                                 unsigned m) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (m < 1) throw DomainError("m must be at least 1");
  if (x.sign() <= 0 || !(x < Rational(1, big(n)))) {
    throw DomainError("x = " + x.to_string() + " is not in (0, 1/" +
                      std::to_string(n) + ")");
  }
}

}  // namespace

Approximation cf_near_unit_fraction(unsigned long n, const Rational& eps,
                                    unsigned m) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (m < 1) throw DomainError("m must be at least 1");
  if (eps.sign() <= 0) throw DomainError("eps must be positive");
  std::vector<BigInt> digits{big(n)};
  if (m == 1) {
    if (n < 2) throw DomainError("1 has no canonical length-1 continued fraction");
  } else {
    const BigInt fill = std::max(BigInt(2), (Rational(2) / eps).ceil());
    digits.insert(digits.end(), m - 1, fill);
  }
  Word w(WordKind::kContinuedFraction, std::move(digits));
  Rational y = cf_eval(w);
  if (!((y - Rational(1, big(n))).abs() < eps)) {
    throw std::logic_error("cf_near_unit_fraction missed its tolerance");
  }
  return {std::move(w), std::move(y)};
}

Approximation egy_approximate(const Rational& x, unsigned long n, unsigned m) {
  require_below_unit_fraction(x, n, m);
  std::vector<BigInt> digits;
  Rational rem = x;
  while (!rem.is_zero() && digits.size() < m) {
    BigInt a = rem.reciprocal().ceil();
    rem -= Rational(1, a);
    digits.push_back(std::move(a));
  }
  if (rem.is_zero() && digits.size() < m) {
    BigInt next = pow(digits.back(), 3);
    const BigInt floor_digit = pow(big(n), 1UL << (m + 1));
    if (next < floor_digit) next = floor_digit;
    digits.push_back(next);
    while (digits.size() < m) digits.push_back(pow(digits.back(), 3));
  }
  Word w(WordKind::kEgyptian, std::move(digits));
  Rational y = egy_eval(w);
  if ((x - y).abs() > Rational(1, pow(big(n), 1UL << m))) {
    throw std::logic_error("egy_approximate exceeded n^(-2^m)");
  }
  return {std::move(w), std::move(y)};
}

Approximation engel_approximate(const Rational& x, unsigned long n,
                                unsigned m) {
  require_below_unit_fraction(x, n, m);
  std::vector<BigInt> digits;
  Rational t = x;
  while (!t.is_zero() && digits.size() < m) {
    BigInt a = t.reciprocal().ceil();
    t = Rational(a) * t - 1;
    digits.push_back(std::move(a));
  }
  if (digits.size() < m) {
    BigInt fill = BigInt(m) * pow(big(n), m + 1);
    if (fill < digits.back()) fill = digits.back();
    digits.insert(digits.end(), m - digits.size(), fill);
  }
  Word w(WordKind::kEngel, std::move(digits));
  Rational y = engel_eval(w);
  if ((x - y).abs() > Rational(1, pow(big(n), m + 1))) {
    throw std::logic_error("engel_approximate exceeded n^(-m-1)");
  }
  return {std::move(w), std::move(y)};
}

bool is_cf_good(const Word& a, const GoodWordContext& ctx) {
  return word_product(a) <= pow(big(ctx.n), ctx.m);
}

Rational cf_theta(const Word& a, const GoodWordContext& ctx) {
  const BigInt limit = pow(big(ctx.n), ctx.m);
  const BigInt p = word_product(a);
  if (p > limit) {
    throw DomainError("word " + a.to_string() + " is not CF-good");
  }
  return Rational(limit, p);
}

std::vector<Word> enumerate_egf_good(unsigned k, unsigned long n) {
  if (n < 2) throw DomainError("EGF-good words need n >= 2");
  std::vector<BigInt> caps;
  for (unsigned i = 0; i < k; ++i) caps.push_back(pow(big(n), 1UL << i));

  std::vector<Word> out;
  std::vector<BigInt> digits;
  // Depth-first in lexicographic order; digit i ranges over [a_{i-1}, cap_i].
  auto walk = [&](auto&& self, unsigned depth) -> void {
    if (depth == k) {
      out.emplace_back(WordKind::kEngel, digits);
      return;
    }
    BigInt d = depth == 0 ? BigInt(1) : digits.back();
    for (; d <= caps[depth]; ++d) {
      digits.push_back(d);
      self(self, depth + 1);
      digits.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

std::vector<CoverElement> egf_cover(unsigned m, unsigned long n) {
  if (m < 1) throw DomainError("egf_cover needs m >= 1");
  std::vector<CoverElement> out;
  for (unsigned k = 0; k <= m; ++k) {
    const Rational len(BigInt(m), pow(big(n), 1UL << k));
    for (auto& w : enumerate_egf_good(k, n)) {
      const Rational lo = egy_eval(w);
      out.push_back({std::move(w), Interval::closed(lo, lo + len)});
    }
  }
  return out;
}

bool is_enf_good(const Word& a, const GoodWordContext& ctx) {
  if (a.empty()) return true;
  if (a.size() > ctx.m) return false;
  const auto root = static_cast<unsigned long>(ctx.m - a.size() + 1);
  return word_product(a) * pow(a.back(), root) <= pow(big(ctx.n), ctx.m + 1);
}

std::strong_ordering EnfGamma::compare_to_integer(const BigInt& t) const {
  const int c = cmp(pow(t, root_) * product_, target_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

EnfGamma enf_gamma(const Word& a, const GoodWordContext& ctx) {
  if (!is_enf_good(a, ctx)) {
    throw DomainError("word " + a.to_string() + " is not ENF-good");
  }
  return EnfGamma(word_product(a), ctx.m - static_cast<unsigned>(a.size()) + 1,
                  pow(big(ctx.n), ctx.m + 1));
}

namespace {

// Bracket around ln(y) for rational y in [1, 2] from the series
// ln y = 2 sum z^(2k+1)/(2k+1), z = (y-1)/(y+1); the tail after the last
// kept term is at most 2 z^(2K+3) / ((2K+3)(1 - z^2)).
std::pair<Rational, Rational> ln_bracket_near_one(const Rational& y,
                                                  const Rational& tolerance) {
  const Rational z = (y - 1) / (y + 1);
  const Rational z2 = z * z;
  Rational power = z;
  Rational sum;
  for (unsigned long k = 0;; ++k) {
    sum += Rational(2) * power / Rational(2 * k + 1);
    power *= z2;
    const Rational tail =
        Rational(2) * power / (Rational(2 * k + 3) * (Rational(1) - z2));
    if (tail < tolerance) return {sum, sum + tail};
  }
}

}  // namespace

std::pair<Rational, Rational> ln_bracket(const BigInt& n,
                                         const Rational& tolerance) {
  if (n < 1) throw DomainError("ln_bracket needs n >= 1");
  const unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
  const Rational mantissa(n, pow(BigInt(2), e));
  const Rational share = tolerance / Rational(e + 2);
  const auto [ln2_lo, ln2_hi] = ln_bracket_near_one(Rational(2), share);
  const auto [lm_lo, lm_hi] = ln_bracket_near_one(mantissa, share);
  return {Rational(e) * ln2_lo + lm_lo, Rational(e) * ln2_hi + lm_hi};
}

Rational bound_cf(unsigned m, unsigned long n) {
  const Rational ln_hi = ln_bracket(big(n), Rational(1, 1000000)).second;
  const Rational eta = Rational(2 * m) * ln_hi + 8;
  return pow(eta, m) * Rational(pow(big(n), m));
}

BigInt bound_sumset(unsigned m, unsigned long n) {
  return BigInt(m) * BigInt(m + 1) * pow(big(n), (1UL << m) - 1);
}

BigInt bound_engel(unsigned m, unsigned long n) {
  return pow(BigInt(3 * m + 1), m) * pow(big(n), m);
}

Rational sample_below_unit_fraction(std::mt19937_64& rng, unsigned long n) {
  constexpr double kMaxDenominator = 1e6;
  if (n < 1 || static_cast<double>(n) + 1 > kMaxDenominator) {
    throw DomainError("sampling needs 1 <= n < 10^6");
  }
  std::uniform_real_distribution<double> log_q(
      std::log(static_cast<double>(n) + 1), std::log(kMaxDenominator));
  for (;;) {
    auto q = static_cast<unsigned long>(std::floor(std::exp(log_q(rng))));
    q = std::clamp(q, n + 1, static_cast<unsigned long>(kMaxDenominator));
    std::uniform_int_distribution<unsigned long> num(1, q - 1);
    // x < 1/n  <=>  p n < q
    const unsigned long p = num(rng);
    if (p * n < q) return Rational(big(p), big(q));
  }
}

}  // namespace fracdim
