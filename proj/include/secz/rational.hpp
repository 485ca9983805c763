// Copyright 2026 The secz Authors
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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace secz {

using Integer = mpz_class;

Integer make_integer(std::int64_t v);
// Throws std::overflow_error when v does not fit.
std::int64_t to_int64(const Integer& v);

// Exact signed fraction, always kept in lowest terms with a positive
// denominator. Serializes as "p/q", or "p" when the denominator is one.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : v_(make_integer(static_cast<std::int64_t>(n))) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Integer& n) : v_(n) {}
  // Unevaluated integer expressions such as k + 1 or p * q.
  template <class E>
  explicit Rational(const __gmp_expr<mpz_t, E>& e) : v_(Integer(e)) {}
  explicit Rational(mpq_class v);

  // Exact binary value of a finite double.
  static Rational from_double(double x);
  // Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  Integer floor() const;
  Rational frac() const;  // x - floor(x), in [0, 1)
  Rational pow(int e) const;
  Rational reciprocal() const;

  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Throws std::domain_error on a zero divisor.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class v_{0};
};

enum class ArithOp { add, sub, mul, div };

// Dispatching form used by the CLI and tests.
Rational rational_arith(const Rational& x, const Rational& y, ArithOp op);

}  // namespace secz
