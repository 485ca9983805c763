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

#include "secz/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace secz {

SqrtDecomposition sqrt_decompose(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("sqrt_decompose requires n >= 1");
  std::int64_t radicand = 1;
  std::int64_t root = 1;
  for (std::int64_t f = 2; f <= n / f; ++f) {
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= f;
    if (e % 2 == 1) radicand *= f;
  }
  radicand *= n;  // leftover prime (or 1)
  return {radicand, root};
}

Surd::Surd(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)) {
  const auto [d, m] = sqrt_decompose(radicand);
  d_ = d;
  b_ *= Rational(m);
  canonicalize();
}

void Surd::canonicalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_.is_zero()) d_ = 1;
}

Surd Surd::sqrt(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("square root of negative rational");
  if (x.is_zero()) return Surd();
  // sqrt(p/q) = sqrt(p*q)/q
  const Integer pq = x.num() * x.den();
  return Surd(Rational(0), Rational(Integer(1), x.den()), to_int64(pq));
}

std::int64_t Surd::common_radicand(const Surd& o) const {
  if (o.is_rational()) return d_;
  if (is_rational()) return o.d_;
  if (d_ != o.d_) {
    throw std::invalid_argument("mixed radicands sqrt(" + std::to_string(d_) +
                                ") and sqrt(" + std::to_string(o.d_) + ")");
  }
  return d_;
}

Surd Surd::conj() const {
  Surd out = *this;
  out.b_ = -b_;
  return out;
}

Rational Surd::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

int Surd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger square wins; equality is impossible for
  // square-free d > 1.
  return (a_ * a_ > Rational(d_) * b_ * b_) ? sa : sb;
}

Integer Surd::floor() const {
  if (is_rational()) return a_.floor();
  Integer k(std::floor(to_double()));
  while (Surd(Rational(k)) > *this) k -= 1;
  while (Surd(Rational(Integer(k + 1))) <= *this) k += 1;
  return k;
}

Surd Surd::reciprocal() const { return Surd(1) / *this; }

double Surd::to_double() const {
  if (is_rational()) return a_.to_double();
  const long double root = std::sqrt(static_cast<long double>(d_));
  const long double x = a_.to_double();
  const long double y = static_cast<long double>(b_.to_double()) * root;
  if (a_.sign() != 0 && a_.sign() != b_.sign()) {
    // a + b sqrt(d) = norm / (a - b sqrt(d)) avoids the cancellation.
    return static_cast<double>(norm().to_double() / (x - y));
  }
  return static_cast<double>(x + y);
}

std::string Surd::to_string() const {
  if (is_rational()) return a_.to_string();
  const Rational mag = b_.abs();
  std::string coef = (mag == Rational(1))
                         ? "sqrt(" + std::to_string(d_) + ")"
                         : mag.to_string() + "*sqrt(" + std::to_string(d_) + ")";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + coef;
  return a_.to_string() + (b_.sign() < 0 ? "-" : "+") + coef;
}

Surd Surd::operator-() const {
  Surd out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  canonicalize();
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  canonicalize();
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  const std::int64_t d = common_radicand(o);
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  canonicalize();
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  if (o.is_zero()) throw std::domain_error("division by zero surd");
  common_radicand(o);
  const Rational n = o.norm();
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Surd surd_arith(const Surd& x, const Surd& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace secz
