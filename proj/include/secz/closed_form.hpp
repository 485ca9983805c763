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

// Exact values of psi and f at the point families reachable by summing the
// Abel equations along phi/g orbits and closing them with periodicity:
// sqrt(p/q) and (1/2) sqrt(p/q) with q = 2K(2pK+1), unit fractions 1/q, the
// orbit start points, and the shift/similarity orbit through 1/2.

#include <cstdint>
#include <optional>
#include <string>

#include "secz/function.hpp"
#include "secz/rational.hpp"
#include "secz/surd.hpp"

namespace secz::closed_form {

class ExactValue {
 public:
  enum class Kind { finite, singular, not_representable };

  static ExactValue finite(Rational v) { return ExactValue(Kind::finite, std::move(v)); }
  static ExactValue singular() { return ExactValue(Kind::singular, Rational()); }
  static ExactValue not_representable() {
    return ExactValue(Kind::not_representable, Rational());
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  // Throws std::logic_error unless finite.
  const Rational& value() const;
  ExactValue negated() const;
  // Rational string, "singular" or "not_representable".
  std::string to_string() const;

  friend bool operator==(const ExactValue&, const ExactValue&) = default;

 private:
  ExactValue(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

enum class Target { psi_sqrt, f_sqrt };

// Witness tying 1/sqrt(n) to an orbit instance: q = 2K(2pK+1) and
// n p = q (psi_sqrt: 1/sqrt(n) = sqrt(p/q)) or n p = 4q
// (f_sqrt: 1/sqrt(n) = (1/2) sqrt(p/q)).
struct Representation {
  std::int64_t K;
  std::int64_t p;
  std::int64_t q;
  Target target;

  friend bool operator==(const Representation&, const Representation&) = default;
};

std::int64_t orbit_denominator(std::int64_t K, std::int64_t p);

// Smallest-K witness with K in 1..ceil(sqrt n), or nullopt.
std::optional<Representation> represent(std::int64_t n, Target target);

// Same for a point whose square is t: t = p/q (psi_sqrt) or p/(4q) (f_sqrt).
std::optional<Representation> represent_ratio(const Rational& t,
                                             Target target);

struct PointValue {
  Surd point;
  Rational value;
};

struct SurdPointValue {
  Surd point;
  Surd value;
};

// All (K, p) operations require K > 0 and p != 0 and throw
// std::invalid_argument otherwise.

// psi(sqrt(p/q)) = 2/3 + p/K - p/q.
PointValue psi_sqrt_ratio(std::int64_t K, std::int64_t p);
// r0 = p + p sqrt(1 + 1/(2pK)), psi(r0) = 2/3 + p/(2K).
PointValue psi_chain_start(std::int64_t K, std::int64_t p);
// f((1/2) sqrt(p/q)) = 1/2 for even p, 1/2 - K/q for odd p.
PointValue f_half_sqrt_ratio(std::int64_t K, std::int64_t p);
// s0 = (p/2)(1 + sqrt(1 + 1/(2pK))), f(s0) = 1/2 (p even) or -2K s_K.
SurdPointValue f_chain_start(std::int64_t K, std::int64_t p);
// psi((1/2) sqrt(p/q)) = 2/3 + p/(4K) - p/(4q) - [p odd] K/q.
PointValue psi_half_sqrt_ratio(std::int64_t K, std::int64_t p);

// f(1/q) by q mod 4: 1/2, 1/2 - 1/q, singular, 1/2 + 1/q.
ExactValue f_unit_fraction(std::int64_t q);
// psi(1/q): singular for even q, 2/3 - 1/q^2 for odd q.
ExactValue psi_unit_fraction(std::int64_t q);

struct RationalPointValue {
  Rational point;
  Rational value;
};

// K steps of s -> g(s - 1) from s0 = 1/2 - 1/(2l), l in {1, 2}:
// s_K = 1/2 - 1/(4K + 2l), f(s_K) = (1/4)/(1 - 2s_K) + (2 - l)(1 - 2s_K)/4.
RationalPointValue f_shift_orbit(std::int64_t K, int l);

// r = sqrt(2p(2p+1)) - 2p in (0, 1/2), f(r) = 2p + 1/2, for p >= 1.
PointValue f_shifted_root(std::int64_t p);

struct ExactResult {
  ExactValue value;
  std::optional<Representation> witness;
  std::string route;
};

// Exact psi(1/sqrt(n)) / f(1/sqrt(n)) for n >= 1, trying every available
// route: unit fractions for perfect squares, a direct witness, and for f the
// relation f(r) = psi(r) - psi(2r)/4 when 4 | n.
ExactResult psi_sqrt(std::int64_t n);
ExactResult f_sqrt(std::int64_t n);

enum class PointForm { rational_point, inverse_sqrt, general_surd };

struct Classification {
  Surd canonical;           // in [0, 1] for psi, [0, 1/2] for f
  int sign;                 // value(r) = sign * value(canonical)
  bool singular;
  PointForm form;
  std::int64_t inverse_sqrt_n;  // canonical = 1/sqrt(n) when form == inverse_sqrt
};

// Reduces r using 2-periodicity and evenness (psi), or 1-antiperiodicity and
// antisymmetry about 1/2 (f). psi is singular at rationals with even reduced
// denominator, f at those with denominator = 2 mod 4.
Classification classify(Function fn, const Surd& r);

// Exact value at an arbitrary point when some route applies.
ExactResult evaluate(Function fn, const Surd& r);

// Orbit r0 -> r_K = phi^K(r0) -> r_2K = r0 - 2p with independent closed forms
// at all three points.
struct PsiChain {
  std::int64_t K, p;
  Surd r0, rK, r2K;
  Rational psi_r0, psi_rK, psi_r2K;
};
PsiChain psi_chain(std::int64_t K, std::int64_t p);

// Orbit s0 -> s_K = g^K(s0) -> s_2K = s0 - p.
struct FChain {
  std::int64_t K, p;
  Surd s0, sK, s2K;
  Surd f_s0, f_sK, f_s2K;
};
FChain f_chain(std::int64_t K, std::int64_t p);

}  // namespace secz::closed_form
