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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "secz/charollois.hpp"
#include "secz/closed_form.hpp"
#include "secz/series.hpp"

using namespace secz;
using namespace secz::charollois;

namespace {

Surd inv_sqrt(std::int64_t n) { return Surd(1) / Surd::sqrt(Rational(n)); }

}  // namespace

TEST_CASE("witness examples") {
  const auto a = build_witness(1, false);
  CHECK(a.c == 2);
  CHECK(a.d == 3);
  CHECK(a.lambda == Surd(3, 2, 2));
  const auto b = build_witness(1, true);
  CHECK(b.c == 12);
  CHECK(b.d == 17);
  CHECK(b.lambda == Surd(17, 12, 2));
  CHECK(b.lambda == a.lambda * a.lambda);
  const auto c = build_witness(2, false);
  CHECK(c.c == 6);
  CHECK(c.d == 5);
  CHECK(c.lambda == Surd(5, 2, 6));
  CHECK_THROWS_AS(build_witness(0, false), std::invalid_argument);
}

TEST_CASE("witness invariants") {
  for (std::int64_t p = 1; p <= 60; ++p) {
    CAPTURE(p);
    const auto plain = build_witness(p, false);
    const auto sq = build_witness(p, true);
    CHECK(plain.n == p * (p + 1));
    CHECK(plain.a * plain.d - plain.b * plain.c == 1);
    CHECK(sq.a * sq.d - sq.b * sq.c == 1);
    CHECK(plain.a == 2 * p + 1);
    CHECK(plain.b == 4);
    CHECK(sq.c == 2 * p * (p + 1) * (2 * p + 1));
    CHECK(sq.d == (2 * p + 1) * (2 * p + 1) + 4 * p * (p + 1));
    CHECK(sq.lambda == plain.lambda * plain.lambda);
    // lambda = 2 r c + d with r = 1/sqrt(n)
    const Surd two_r = Surd(2) * inv_sqrt(p * (p + 1));
    CHECK(plain.lambda == two_r * Surd(Rational(plain.c)) + Surd(Rational(plain.d)));
    // The eigen relation in both rows.
    CHECK(Surd(Rational(plain.a)) * two_r + Surd(Rational(plain.b)) == plain.lambda * two_r);
    CHECK(left_eigen_congruence(sq));
    CHECK(left_eigen_congruence(plain) == (p % 2 == 0));
  }
}

TEST_CASE("cg examples") {
  const auto two = cg_eval(2, false);
  CHECK(two.irrational_part_zero);
  CHECK(two.rational_part == Rational(3, 2));
  CHECK(cg_eval(1, true).value == Surd(Rational(-5, 6)));
  CHECK(cg_eval(4, true).value == Surd(Rational(67, 60)));
  CHECK(cg_eval(1, false).value != Surd(Rational(-5, 6)));
}

TEST_CASE("cg odd plain values are purely irrational") {
  const auto one = cg_eval(1, false);
  CHECK_FALSE(one.irrational_part_zero);
  CHECK(one.value == Surd(Rational(0), Rational(5, 6), 2));
  const auto three = cg_eval(3, false);
  CHECK_FALSE(three.irrational_part_zero);
  CHECK(three.value == Surd(Rational(0), Rational(-1, 18), 3));
  CHECK(three.rational_part == Rational(0));
}

TEST_CASE("squared variant is rational and matches closed forms") {
  int compared = 0;
  for (std::int64_t p = 1; p <= 14; ++p) {
    CAPTURE(p);
    const auto sq = cg_eval(p, true);
    CHECK(sq.irrational_part_zero);
    CHECK(sq.value == Surd(sq.rational_part));
    const auto exact = closed_form::psi_sqrt(p * (p + 1));
    if (exact.value.is_finite()) {
      CHECK(sq.rational_part == exact.value.value());
      ++compared;
    }
    if (p % 2 == 0) CHECK(cg_eval(p, false).value == sq.value);
  }
  CHECK(compared >= 4);
}

TEST_CASE("squared variant agrees with the series") {
  for (std::int64_t p = 5; p <= 9; ++p) {
    const double r = 1.0 / std::sqrt(static_cast<double>(p * (p + 1)));
    series::SeriesConfig cfg;
    cfg.terms = 1000000;
    const auto s = series::eval_psi(r, cfg);
    CAPTURE(p);
    CHECK(std::abs(s.value - cg_eval(p, true).rational_part.to_double()) < 1e-2);
  }
}

TEST_CASE("compare report") {
  const auto one = cg_compare(1);
  CHECK(one.closed_form == Rational(-5, 6));
  CHECK(one.match_squared == true);
  CHECK(one.match_plain == false);
  CHECK_FALSE(one.plain_equals_squared);
  const auto two = cg_compare(2);
  CHECK(two.match_plain == true);
  CHECK(two.match_squared == true);
  CHECK(two.plain_equals_squared);
  const auto three = cg_compare(3);
  CHECK(three.closed_form == Rational(1, 12));
  CHECK(three.match_squared == true);
  CHECK(three.match_plain == false);
}

TEST_CASE("thread count does not change the exact sum") {
  CGOptions one;
  one.threads = 1;
  CGOptions many;
  many.threads = 4;
  for (std::int64_t p : {7, 10}) {
    CHECK(cg_eval(p, true, one).value == cg_eval(p, true, many).value);
  }
}

TEST_CASE("cost bound") {
  CGOptions tight;
  tight.cost_bound = 100;
  CHECK_NOTHROW(cg_eval(2, true, tight));  // c = 60
  try {
    cg_eval(3, true, tight);  // c = 168
    FAIL("cost bound not enforced");
  } catch (const CostError& e) {
    CHECK(e.terms() == 168);
  }
  tight.force = true;
  CHECK(cg_eval(3, true, tight).value == Surd(Rational(1, 12)));
  CHECK_THROWS_AS(cg_eval(0, true), std::invalid_argument);
}
