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

// Shared test helpers: seeded generators for property tests and small
// independent oracles that do not go through the library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>

#include "secz/function.hpp"
#include "secz/rational.hpp"
#include "secz/surd.hpp"

namespace secz::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  // Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  Rational rational(std::int64_t max_num = 50, std::int64_t max_den = 50) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational nonzero_rational(std::int64_t max_num = 50,
                            std::int64_t max_den = 50) {
    std::int64_t n = 0;
    while (n == 0) n = integer(-max_num, max_num);
    return Rational(n, integer(1, max_den));
  }

  Surd surd(std::int64_t d) { return Surd(rational(), rational(), d); }

 private:
  std::mt19937_64 rng_;
};

// int64 fraction, reduced; enough for small operands.
struct Frac {
  std::int64_t n;
  std::int64_t d;

  Frac(std::int64_t num, std::int64_t den) {
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num, den);
    n = g ? num / g : num;
    d = g ? den / g : den;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
  friend Frac operator-(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
  friend Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
  friend Frac operator/(Frac a, Frac b) { return {a.n * b.d, a.d * b.n}; }
  bool matches(const Rational& q) const {
    return q.num() == n && q.den() == d;
  }
};

// Straight long double partial sum, scaled; the test-side series oracle.
inline long double oracle_series(Function fn, long double r, std::int64_t terms) {
  const long double pi = std::numbers::pi_v<long double>;
  long double s = 0.0L;
  for (std::int64_t i = 0; i < terms; ++i) {
    const long double m = fn == Function::psi ? i + 1 : 2 * i + 1;
    s += 1.0L / (m * m * std::cos(pi * std::fmod(m * r, 2.0L)));
  }
  return 4.0L * s / (pi * pi);
}

}  // namespace secz::testing
