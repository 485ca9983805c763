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

// Moebius maps phi(r) = r/(1+2r) and g = phi o phi, the functions built from
// psi and f that satisfy Abel equations along their orbits, and the graph
// homotheties those equations encode.
//
// Everything here is generic over the scalar: Rational and Surd give exact
// results, double is used by the numeric identity checks.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <type_traits>

#include "secz/rational.hpp"
#include "secz/surd.hpp"

namespace secz::abel {

template <class T>
concept Scalar = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Surd& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

template <class T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, double>) {
    return q.to_double();
  } else {
    return T(q);
  }
}

enum class MapKind { phi, phi_inverse, g, g_inverse, unit_shift_left };

std::string_view to_string(MapKind kind);

namespace detail {

// Coefficient c of the map r -> r/(1 + c r); nullopt for the shift.
inline std::optional<int> mobius_rate(MapKind kind) {
  switch (kind) {
    case MapKind::phi: return 2;
    case MapKind::phi_inverse: return -2;
    case MapKind::g: return 4;
    case MapKind::g_inverse: return -4;
    case MapKind::unit_shift_left: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

// Throws std::domain_error at the pole of the map.
template <Scalar T>
T apply_map(MapKind kind, const T& r) {
  const auto rate = detail::mobius_rate(kind);
  if (!rate) return r - T(1);
  const T den = T(1) + T(*rate) * r;
  if (is_zero(den)) throw std::domain_error("pole of the Moebius map");
  return r / den;
}

// k-fold iterate. For the Moebius maps 1/r_k = 1/r_0 + c k, so the closed
// form r_0/(1 + c k r_0) is used; an intermediate pole (1 + c j r_0 = 0 for
// some 1 <= j <= k) is still reported.
template <Scalar T>
T orbit(const T& r0, MapKind kind, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("orbit length must be >= 0");
  const auto rate = detail::mobius_rate(kind);
  if (!rate) return r0 - T(k);
  if (k == 0 || is_zero(r0)) return r0;
  // -1/(c r0) in {1..k} means the iteration passes through infinity.
  const T hit = T(-1) / (T(*rate) * r0);
  if (hit >= T(1) && hit <= T(k) && T(Rational(hit.floor())) == hit) {
    throw std::domain_error("orbit hits a pole");
  }
  return r0 / (T(1) + T(*rate) * T(k) * r0);
}

template <>
inline double orbit<double>(const double& r0, MapKind kind, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("orbit length must be >= 0");
  const auto rate = detail::mobius_rate(kind);
  const double kd = static_cast<double>(k);
  if (!rate) return r0 - kd;
  if (k == 0 || r0 == 0.0) return r0;
  const double hit = -1.0 / (*rate * r0);
  if (hit >= 1.0 && hit <= kd && hit == std::floor(hit)) {
    throw std::domain_error("orbit hits a pole");
  }
  return r0 / (1.0 + *rate * kd * r0);
}

enum class TransformKind { big_phi, big_g, pi, phi_tilde };

std::string_view to_string(TransformKind kind);

// base_value is psi(r) for big_phi, pi and phi_tilde, f(r) for big_g.
//   big_phi:   (3/4)(psi/r + r)
//   big_g:     f/(2r)
//   pi:        psi + r^2
//   phi_tilde: big_phi - 1/(2r)
// Throws std::domain_error at r = 0 except for pi.
template <Scalar T>
T transform(TransformKind kind, const T& r, const T& base_value) {
  if (kind != TransformKind::pi && is_zero(r)) {
    throw std::domain_error("transform is infinite at r = 0");
  }
  const T three_quarters = from_rational<T>(Rational(3, 4));
  switch (kind) {
    case TransformKind::big_phi:
      return three_quarters * (base_value / r + r);
    case TransformKind::big_g:
      return base_value / (T(2) * r);
    case TransformKind::pi:
      return base_value + r * r;
    case TransformKind::phi_tilde:
      return three_quarters * (base_value / r + r) - T(1) / (T(2) * r);
  }
  throw std::invalid_argument("unknown transform");
}

// Inverse of big_phi: psi = (4/3) r Phi - r^2.
template <Scalar T>
T psi_from_big_phi(const T& r, const T& big_phi) {
  return from_rational<T>(Rational(4, 3)) * r * big_phi - r * r;
}

// Homothety leaving a function graph invariant: centre (0, centre_y), ratio
// 1/(1 + rate * K * r_star). For f the centre is (0, f(0)) = (0, 1/2) and the
// rate 4; for Pi = psi + r^2 the centre is (0, 2/3) and the rate 2.
struct GraphHomothety {
  Rational centre_y;
  int rate;
};

inline GraphHomothety f_graph_homothety() { return {Rational(1, 2), 4}; }
inline GraphHomothety pi_graph_homothety() { return {Rational(2, 3), 2}; }

template <class T>
struct GraphPoint {
  T r;
  T y;
};

template <Scalar T>
GraphPoint<T> homothety(const GraphHomothety& h, const GraphPoint<T>& point,
                        const T& r_star, std::int64_t steps) {
  const T den = T(1) + T(h.rate) * T(steps) * r_star;
  if (is_zero(den)) throw std::domain_error("homothety ratio is infinite");
  const T alpha = T(1) / den;
  const T c = from_rational<T>(h.centre_y);
  return {alpha * point.r, c + alpha * (point.y - c)};
}

template <>
inline GraphPoint<double> homothety<double>(const GraphHomothety& h,
                                            const GraphPoint<double>& point,
                                            const double& r_star,
                                            std::int64_t steps) {
  const double den = 1.0 + h.rate * static_cast<double>(steps) * r_star;
  if (den == 0.0) throw std::domain_error("homothety ratio is infinite");
  const double alpha = 1.0 / den;
  const double c = h.centre_y.to_double();
  return {alpha * point.r, c + alpha * (point.y - c)};
}

// One step of the alternating shift/similarity orbit for f:
//   s' = g(s - 1),  f(s') = s' (2 + f(s) / (1 - s)).
// Throws std::domain_error at s = 1 or s = 3/4 (pole of g).
template <Scalar T>
GraphPoint<T> shift_orbit_step(const GraphPoint<T>& current) {
  const T one_minus = T(1) - current.r;
  if (is_zero(one_minus)) throw std::domain_error("shift orbit step at s = 1");
  const T next = apply_map(MapKind::g, current.r - T(1));
  return {next, next * (T(2) + current.y / one_minus)};
}

}  // namespace secz::abel
