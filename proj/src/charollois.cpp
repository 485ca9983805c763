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

#include "secz/charollois.hpp"

#include <omp.h>

#include <array>
#include <string>
#include <vector>

#include "secz/closed_form.hpp"
#include "secz/polynomial.hpp"

namespace secz::charollois {
namespace {

constexpr std::int64_t kChunk = 2048;

using LSums = std::array<Rational, 4>;

// Sum over j in [first, last] of B_l(x_j) B_{3-l}(y_j), one entry per l.
LSums partial_sums(const ModularWitness& w, std::int64_t first,
                   std::int64_t last) {
  LSums s;
  const Integer four_c = 4 * w.c;
  for (std::int64_t j = first; j <= last; ++j) {
    // x_j = (4j - 1)/(4c); y_j = frac(d x_j) = (d (4j - 1) mod 4c)/(4c).
    const Integer num = make_integer(4 * j - 1);
    const Integer y_num = (w.d * num) % four_c;
    const Rational x(num, four_c);
    const Rational y(y_num, four_c);
    const std::array<Rational, 4> bx = {bernoulli(0, x), bernoulli(1, x),
                                        bernoulli(2, x), bernoulli(3, x)};
    const std::array<Rational, 4> by = {bernoulli(0, y), bernoulli(1, y),
                                        bernoulli(2, y), bernoulli(3, y)};
    for (int l = 0; l < 4; ++l) s[l] += bx[l] * by[3 - l];
  }
  return s;
}

std::string cost_message(std::int64_t p, const Integer& terms,
                         std::int64_t bound) {
  return "cg: p=" + std::to_string(p) + " needs " + terms.get_str() +
         " exact terms, above the bound of " + std::to_string(bound) +
         " (use force to run anyway)";
}

}  // namespace

CostError::CostError(std::int64_t p, const Integer& terms, std::int64_t bound)
    : std::runtime_error(cost_message(p, terms, bound)), terms_(terms) {}

ModularWitness build_witness(std::int64_t p, bool squared) {
  if (p < 1) throw std::invalid_argument("cg: p must be >= 1");
  ModularWitness w;
  w.p = p;
  w.n = p * (p + 1);
  w.squared = squared;
  const Integer t = make_integer(2 * p + 1);
  const Integer n = make_integer(w.n);
  if (squared) {
    w.a = t * t + 4 * n;
    w.b = 8 * t;
    w.c = 2 * n * t;
    w.d = w.a;
  } else {
    w.a = t;
    w.b = 4;
    w.c = n;
    w.d = t;
  }
  if (w.a * w.d - w.b * w.c != 1) {
    throw std::logic_error("cg: witness determinant is not 1");
  }
  const Surd two_r = Surd(2) * Surd::sqrt(Rational(1, w.n));
  w.lambda = Surd(Rational(w.c)) * two_r + Surd(Rational(w.d));
  const Surd row0 = Surd(Rational(w.a)) * two_r + Surd(Rational(w.b));
  const Surd row1 = Surd(Rational(w.c)) * two_r + Surd(Rational(w.d));
  if (row0 != w.lambda * two_r || row1 != w.lambda) {
    throw std::logic_error("cg: (2r, 1) is not an eigenvector");
  }
  return w;
}

bool left_eigen_congruence(const ModularWitness& w) {
  // [1/4, 0] V = [a/4, b/4].
  return (w.a - 1) % 4 == 0 && w.b % 4 == 0;
}

CGResult cg_eval(std::int64_t p, bool squared, const CGOptions& opts) {
  const ModularWitness w = build_witness(p, squared);
  if (w.c > opts.cost_bound && !opts.force) {
    throw CostError(p, w.c, opts.cost_bound);
  }
  const std::int64_t c = to_int64(w.c);
  const std::int64_t chunks = (c + kChunk - 1) / kChunk;
  std::vector<LSums> parts(chunks);
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t k = 0; k < chunks; ++k) {
    const std::int64_t first = 1 + k * kChunk;
    parts[k] = partial_sums(w, first, std::min(c, first + kChunk - 1));
  }
  LSums total;
  for (const auto& part : parts) {
    for (int l = 0; l < 4; ++l) total[l] += part[l];
  }

  // Horner in -L over the four l-sums, with 1/(l! (3-l)!) folded in.
  static const std::array<Rational, 4> inv_fact = {
      Rational(1, 6), Rational(1, 2), Rational(1, 2), Rational(1, 6)};
  const Surd minus_lambda = -w.lambda;
  Surd acc;
  for (int l = 3; l >= 0; --l) {
    acc = acc * minus_lambda + Surd(total[l] * inv_fact[l]);
  }
  CGResult out;
  out.value = Surd(32) / (w.lambda * (w.lambda - Surd(1))) * acc;
  out.rational_part = out.value.a();
  out.irrational_part_zero = out.value.is_rational();
  return out;
}

CGComparison cg_compare(std::int64_t p, const CGOptions& opts) {
  CGComparison out{p, cg_eval(p, false, opts), cg_eval(p, true, opts),
                   std::nullopt, false, std::nullopt, std::nullopt};
  out.plain_equals_squared = out.plain.value == out.squared.value;
  const auto exact = closed_form::psi_sqrt(p * (p + 1));
  if (exact.value.is_finite()) {
    out.closed_form = exact.value.value();
    out.match_plain = out.plain.value == Surd(*out.closed_form);
    out.match_squared = out.squared.value == Surd(*out.closed_form);
  }
  return out;
}

}  // namespace secz::charollois
