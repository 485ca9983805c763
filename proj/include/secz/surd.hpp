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

#include <compare>
#include <cstdint>
#include <string>

#include "secz/rational.hpp"

namespace secz {

// n = root^2 * radicand.
struct SqrtDecomposition {
  std::int64_t radicand;  // square-free
  std::int64_t root;
};

// Requires n >= 1. Throws std::invalid_argument otherwise.
SqrtDecomposition sqrt_decompose(std::int64_t n);

// Element a + b*sqrt(d) of the quadratic field Q(sqrt d).
//
// Invariants: d is square-free, and b == 0 implies d == 1, so every rational
// has exactly one representation. Binary operations require both operands to
// live in the same field; a rational operand adopts the other's radicand.
class Surd {
 public:
  Surd() = default;
  template <std::integral I>
  Surd(I n) : a_(n) {}  // NOLINT
  Surd(Rational a) : a_(std::move(a)) {}  // NOLINT
  // Any radicand >= 1 is accepted and reduced, e.g. (0, 1, 8) -> 2*sqrt(2).
  Surd(Rational a, Rational b, std::int64_t radicand);

  // sqrt(x) for rational x >= 0. Throws std::domain_error for x < 0.
  static Surd sqrt(const Rational& x);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  Surd conj() const;
  // a^2 - d b^2, i.e. x * conj(x).
  Rational norm() const;
  int sign() const;
  Integer floor() const;
  Surd abs() const { return sign() < 0 ? -*this : *this; }
  Surd reciprocal() const;

  double to_double() const;
  // "a+b*sqrt(d)", "a-b*sqrt(d)", "b*sqrt(d)" or plain "a".
  std::string to_string() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

 private:
  std::int64_t common_radicand(const Surd& o) const;
  void canonicalize();

  Rational a_;
  Rational b_;
  std::int64_t d_ = 1;
};

Surd surd_arith(const Surd& x, const Surd& y, ArithOp op);

}  // namespace secz
