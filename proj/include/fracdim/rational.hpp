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

#ifndef FRACDIM_RATIONAL_HPP
#define FRACDIM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace fracdim {

using BigInt = mpz_class;

BigInt pow(const BigInt& base, unsigned long exponent);

// Largest e >= 0 with e^k <= v (v >= 0, k >= 1).
BigInt floor_root(const BigInt& v, unsigned long k);

// Smallest e >= 0 with e^k >= v (k >= 1); 0 when v <= 0.
BigInt ceil_root(const BigInt& v, unsigned long k);

std::string to_string(const BigInt& v);

// Fits in an unsigned 64-bit integer.
bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);

// Exact rational number, always held in lowest terms with a positive
// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      q_ = static_cast<long>(v);
    } else {
      q_ = static_cast<unsigned long>(v);
    }
  }

  Rational(const BigInt& v);  // NOLINT(google-explicit-constructor)

  // Throws DomainError when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p/q" or "p" with an optional leading sign.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;

  // Throws DomainError for zero.
  Rational reciprocal() const;
  Rational abs() const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

// r^k for k >= 0.
Rational pow(const Rational& r, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fracdim

#endif  // FRACDIM_RATIONAL_HPP
