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

#include "secz/abel.hpp"
#include "secz/closed_form.hpp"
#include "support.hpp"

using namespace secz;
using namespace secz::abel;

namespace {

Rational frac(std::int64_t num, std::int64_t den) { return Rational(num, den); }

}  // namespace

TEST_CASE("map examples") {
  CHECK(apply_map(MapKind::phi, frac(1, 2)) == frac(1, 4));
  CHECK(apply_map(MapKind::g, frac(1, 2)) == frac(1, 6));
  CHECK(apply_map(MapKind::phi, apply_map(MapKind::phi, frac(1, 3))) == frac(1, 7));
  CHECK(apply_map(MapKind::g, frac(1, 3)) == frac(1, 7));
  CHECK(apply_map(MapKind::phi_inverse, frac(1, 4)) == frac(1, 2));
  CHECK(apply_map(MapKind::g_inverse, frac(1, 6)) == frac(1, 2));
  CHECK(apply_map(MapKind::unit_shift_left, frac(1, 3)) == frac(-2, 3));
  CHECK_THROWS_AS(apply_map(MapKind::phi, frac(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(apply_map(MapKind::g, Surd(frac(-1, 4))), std::domain_error);
}

TEST_CASE("orbit examples") {
  CHECK(orbit(frac(1, 2), MapKind::phi, 2) == frac(1, 6));
  CHECK(orbit(frac(1, 1), MapKind::phi, 1) == frac(1, 3));
  CHECK(orbit(frac(1, 1), MapKind::phi, 0) == frac(1, 1));
  CHECK(orbit(frac(5, 2), MapKind::unit_shift_left, 3) == frac(-1, 2));
  const auto s0 = closed_form::f_chain_start(1, -1).point;
  CHECK(orbit(s0, MapKind::g, 1) == Surd(1) / Surd::sqrt(Rational(8)));
  // -1/(2 r0) = 2 lies on the orbit, so the second step hits the pole.
  CHECK_THROWS_AS(orbit(frac(-1, 4), MapKind::phi, 3), std::domain_error);
  CHECK_NOTHROW(orbit(frac(-1, 4), MapKind::phi, 1));
  CHECK_THROWS_AS(orbit(frac(1, 2), MapKind::phi, -1), std::invalid_argument);
  CHECK_THROWS_AS(orbit(-0.25, MapKind::phi, 3), std::domain_error);
}

TEST_CASE("map identities on random rationals and surds") {
  secz::testing::Gen gen(17);
  for (int i = 0; i < 500; ++i) {
    const Rational r = gen.nonzero_rational(40, 40);
    if (r.sign() < 0) continue;  // keep clear of the poles
    CHECK(apply_map(MapKind::phi, apply_map(MapKind::phi, r)) == apply_map(MapKind::g, r));
    CHECK(Rational(2) * apply_map(MapKind::g, r) == apply_map(MapKind::phi, Rational(2) * r));
    CHECK(apply_map(MapKind::phi, r).reciprocal() == r.reciprocal() + Rational(2));
    CHECK(apply_map(MapKind::phi_inverse, apply_map(MapKind::phi, r)) == r);
    const std::int64_t k = gen.integer(0, 30);
    Rational it = r;
    for (std::int64_t j = 0; j < k; ++j) it = apply_map(MapKind::g, it);
    CHECK(orbit(r, MapKind::g, k) == it);
    CHECK(orbit(r, MapKind::g, k).reciprocal() == r.reciprocal() + Rational(4 * k));

    const Surd s = Surd(r) + Surd(0, gen.nonzero_rational(5, 7), 3);
    if (s.sign() <= 0) continue;
    CHECK(apply_map(MapKind::phi, apply_map(MapKind::phi, s)) == apply_map(MapKind::g, s));
    CHECK(orbit(s, MapKind::phi, 2 * k) == orbit(s, MapKind::g, k));
  }
}

TEST_CASE("double orbit matches iteration") {
  double r = 0.3;
  for (int k = 0; k < 20; ++k) {
    CHECK(orbit(0.3, MapKind::phi, k) == doctest::Approx(r).epsilon(1e-14));
    r = apply_map(MapKind::phi, r);
  }
}

TEST_CASE("transform examples") {
  const Surd r = Surd(1) / Surd::sqrt(Rational(2));
  const Surd big_phi = transform(TransformKind::big_phi, r, Surd(frac(-5, 6)));
  // (3/4)(-(5/6) sqrt 2 + sqrt(2)/2) = -(1/4) sqrt 2
  CHECK(big_phi == Surd(Rational(0), frac(-1, 4), 2));
  CHECK(transform(TransformKind::pi, Rational(0), frac(2, 3)) == frac(2, 3));
  CHECK(transform(TransformKind::big_g, frac(1, 4), frac(1, 2)) == frac(1, 1));
  CHECK(transform(TransformKind::phi_tilde, frac(1, 2), frac(0, 1)) ==
        frac(3, 8) - frac(1, 1));
  CHECK_THROWS_AS(transform(TransformKind::big_phi, Rational(0), frac(2, 3)),
                  std::domain_error);
  CHECK_THROWS_AS(transform(TransformKind::big_g, 0.0, 0.5), std::domain_error);
  secz::testing::Gen gen(23);
  for (int i = 0; i < 200; ++i) {
    const Rational x = gen.nonzero_rational(), v = gen.rational();
    CHECK(psi_from_big_phi(x, transform(TransformKind::big_phi, x, v)) == v);
  }
}

TEST_CASE("abel equation along the K=1, p=-1 chain") {
  const auto c = closed_form::psi_chain(1, -1);
  const Surd p0 = transform(TransformKind::big_phi, c.r0, Surd(c.psi_r0));
  const Surd p1 = transform(TransformKind::big_phi, c.rK, Surd(c.psi_rK));
  CHECK(p1 - p0 == Surd(1));
  CHECK(c.rK == Surd(1) / Surd::sqrt(Rational(2)));
  CHECK(apply_map(MapKind::phi, c.r0) == c.rK);
}

TEST_CASE("homothety examples") {
  const auto h = f_graph_homothety();
  // r* = -1 on the point (-1, f(-1) = -1/2) lands on (1/3, 5/6).
  const GraphPoint<Rational> start{frac(-1, 1), frac(-1, 2)};
  const auto image = homothety(h, start, frac(-1, 1), 1);
  CHECK(image.r == frac(1, 3));
  CHECK(image.y == frac(5, 6));
  const auto same = homothety(h, start, frac(3, 7), 0);
  CHECK(same.r == start.r);
  CHECK(same.y == start.y);
  CHECK_THROWS_AS(homothety(h, start, frac(-1, 4), 1), std::domain_error);
  // l/(1+4l): scaling (l, f(l) = (-1)^l/2) by r* = l gives the accumulation
  // family y - 1/2 = ((-1)^l - 1)/(2(1+4l)).
  for (std::int64_t l = 1; l <= 40; ++l) {
    const Rational fl = l % 2 == 0 ? frac(1, 2) : frac(-1, 2);
    const auto pt = homothety(h, GraphPoint<Rational>{Rational(l), fl}, Rational(l), 1);
    CHECK(pt.r == frac(l, 1 + 4 * l));
    CHECK(pt.y - frac(1, 2) == Rational((l % 2 == 0 ? 1 : -1) - 1) / Rational(2 * (1 + 4 * l)));
  }
  const auto hp = pi_graph_homothety();
  CHECK(hp.centre_y == frac(2, 3));
  CHECK(hp.rate == 2);
  const auto dp = homothety(h, GraphPoint<double>{1.0, 1.0}, 0.5, 1);
  CHECK(dp.r == doctest::Approx(1.0 / 3.0));
  CHECK(dp.y == doctest::Approx(0.5 + 0.5 / 3.0));
}

TEST_CASE("homothety reproduces the similarity on exact f values") {
  // Scaling a known point (r, f(r)) with r* = r must give f(r/(1+4r)).
  for (std::int64_t q = 3; q <= 200; ++q) {
    const Rational r = frac(1, q);
    const auto fr = closed_form::f_unit_fraction(q);
    const auto fs = closed_form::f_unit_fraction(q + 4);
    if (!fr.is_finite()) continue;
    const auto pt = homothety(f_graph_homothety(), GraphPoint<Rational>{r, fr.value()}, r, 1);
    CHECK(pt.r == frac(1, q + 4));
    REQUIRE(fs.is_finite());
    CHECK(pt.y == fs.value());
  }
}

TEST_CASE("shift orbit step") {
  const auto a = shift_orbit_step(GraphPoint<Rational>{frac(0, 1), frac(1, 2)});
  CHECK(a.r == frac(1, 3));
  CHECK(a.y == frac(5, 6));
  const auto b = shift_orbit_step(GraphPoint<Rational>{frac(1, 4), frac(1, 2)});
  CHECK(b.r == frac(3, 8));
  CHECK(b.y == frac(1, 1));
  CHECK_THROWS_AS(shift_orbit_step(GraphPoint<Rational>{frac(1, 1), frac(0, 1)}),
                  std::domain_error);
  CHECK_THROWS_AS(shift_orbit_step(GraphPoint<Rational>{frac(3, 4), frac(0, 1)}),
                  std::domain_error);
  // K steps agree with the closed-form orbit for both starting points.
  for (int l : {1, 2}) {
    // s0 = 0 or 1/4, where f = 1/2 in both cases.
    GraphPoint<Rational> pt{frac(1, 2) - frac(1, 2 * l), frac(1, 2)};
    for (std::int64_t K = 1; K <= 25; ++K) {
      pt = shift_orbit_step(pt);
      const auto ref = closed_form::f_shift_orbit(K, l);
      CHECK(pt.r == ref.point);
      CHECK(pt.y == ref.value);
    }
  }
}

TEST_CASE("shift orbit converges to one half from any start") {
  secz::testing::Gen gen(29);
  for (int i = 0; i < 50; ++i) {
    GraphPoint<double> pt{gen.unit() * 0.7, 0.0};
    for (int k = 0; k < 4000; ++k) pt = shift_orbit_step(pt);
    CHECK(std::abs(pt.r - 0.5) < 1e-3);
  }
}

TEST_CASE("map and transform names") {
  CHECK(to_string(MapKind::phi) == "phi");
  CHECK(to_string(MapKind::g_inverse) == "g_inverse");
  CHECK(to_string(TransformKind::big_phi) == "big_phi");
  CHECK(to_string(TransformKind::phi_tilde) == "phi_tilde");
}
