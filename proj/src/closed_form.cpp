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

#include "secz/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "secz/abel.hpp"

namespace secz::closed_form {
namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<std::int64_t> exact_root(std::int64_t n) {
  const std::int64_t r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

void require_kp(std::int64_t K, std::int64_t p) {
  if (K <= 0) throw std::invalid_argument("K must be positive");
  if (p == 0) throw std::invalid_argument("p must be nonzero");
}

// sqrt(p/q), checked real.
Surd sqrt_ratio(std::int64_t K, std::int64_t p) {
  const std::int64_t q = orbit_denominator(K, p);
  const Rational ratio(p, q);
  if (ratio.sign() <= 0) throw std::domain_error("p/q must be positive");
  return Surd::sqrt(ratio);
}

// sqrt(1 + 1/(2pK))
Surd chain_root(std::int64_t K, std::int64_t p) {
  const Rational arg = Rational(1) + Rational(1, 2 * p * K);
  if (arg.sign() < 0) throw std::domain_error("negative discriminant");
  return Surd::sqrt(arg);
}

bool is_odd(std::int64_t p) { return p % 2 != 0; }

}  // namespace

const Rational& ExactValue::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("exact value is not finite");
  return value_;
}

ExactValue ExactValue::negated() const {
  if (kind_ != Kind::finite) return *this;
  return finite(-value_);
}

std::string ExactValue::to_string() const {
  switch (kind_) {
    case Kind::finite: return value_.to_string();
    case Kind::singular: return "singular";
    case Kind::not_representable: return "not_representable";
  }
  return "?";
}

std::int64_t orbit_denominator(std::int64_t K, std::int64_t p) {
  require_kp(K, p);
  return 2 * K * (2 * p * K + 1);
}

std::optional<Representation> represent_ratio(const Rational& t,
                                             Target target) {
  if (t.sign() <= 0) return std::nullopt;
  // t = u/v = p/q (psi) or p/(4q) (f) with q = 2K(2pK+1):
  // p (v - c u K^2) = l u K with (c, l) = (4, 2) or (16, 8).
  const Integer u = t.num();
  const Integer v = t.den();
  const int square_coef = target == Target::psi_sqrt ? 4 : 16;
  const int linear_coef = target == Target::psi_sqrt ? 2 : 8;
  // |p| >= 1 forces c u K^2 - v <= l u K, so K stays near sqrt(v / (c u)).
  const double k_bound =
      std::sqrt(v.get_d() / (square_coef * u.get_d())) + 2.0;
  for (std::int64_t K = 1; static_cast<double>(K) <= k_bound; ++K) {
    const Integer den = v - square_coef * u * K * K;
    if (den == 0) continue;
    const Integer num = linear_coef * u * K;
    if (num % den != 0) continue;
    const Integer p = num / den;
    if (!p.fits_slong_p()) continue;
    const std::int64_t pi = p.get_si();
    return Representation{K, pi, orbit_denominator(K, pi), target};
  }
  return std::nullopt;
}

std::optional<Representation> represent(std::int64_t n, Target target) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return represent_ratio(Rational(1, n), target);
}

PointValue psi_sqrt_ratio(std::int64_t K, std::int64_t p) {
  require_kp(K, p);
  const std::int64_t q = orbit_denominator(K, p);
  return {sqrt_ratio(K, p), Rational(2, 3) + Rational(p, K) - Rational(p, q)};
}

PointValue psi_chain_start(std::int64_t K, std::int64_t p) {
  require_kp(K, p);
  const Surd r0 = Surd(p) + Surd(p) * chain_root(K, p);
  return {r0, Rational(2, 3) + Rational(p, 2 * K)};
}

PointValue f_half_sqrt_ratio(std::int64_t K, std::int64_t p) {
  require_kp(K, p);
  const std::int64_t q = orbit_denominator(K, p);
  const Surd s = Surd(Rational(1, 2)) * sqrt_ratio(K, p);
  if (!is_odd(p)) return {s, Rational(1, 2)};
  return {s, Rational(1, 2) - Rational(K, q)};
}

SurdPointValue f_chain_start(std::int64_t K, std::int64_t p) {
  require_kp(K, p);
  const Rational half_p(p, 2);
  const Surd s0 = Surd(half_p) + Surd(half_p) * chain_root(K, p);
  if (!is_odd(p)) return {s0, Surd(Rational(1, 2))};
  const Surd sK = Surd(Rational(1, 2)) * sqrt_ratio(K, p);
  return {s0, Surd(-2 * K) * sK};
}

PointValue psi_half_sqrt_ratio(std::int64_t K, std::int64_t p) {
  require_kp(K, p);
  const std::int64_t q = orbit_denominator(K, p);
  Rational value = Rational(2, 3) + Rational(p, 4 * K) - Rational(p, 4 * q);
  if (is_odd(p)) value -= Rational(K, q);
  return {Surd(Rational(1, 2)) * sqrt_ratio(K, p), value};
}

ExactValue f_unit_fraction(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  switch (q % 4) {
    case 0: return ExactValue::finite(Rational(1, 2));
    case 1: return ExactValue::finite(Rational(1, 2) - Rational(1, q));
    case 2: return ExactValue::singular();
    default: return ExactValue::finite(Rational(1, 2) + Rational(1, q));
  }
}

ExactValue psi_unit_fraction(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  if (q % 2 == 0) return ExactValue::singular();
  return ExactValue::finite(Rational(2, 3) - Rational(1, q * q));
}

RationalPointValue f_shift_orbit(std::int64_t K, int l) {
  if (K < 0) throw std::invalid_argument("K must be >= 0");
  if (l != 1 && l != 2) throw std::invalid_argument("l must be 1 or 2");
  const Rational s = Rational(1, 2) - Rational(1, 4 * K + 2 * l);
  const Rational gap = Rational(1) - Rational(2) * s;
  const Rational value =
      Rational(1, 4) / gap + Rational(2 - l) * gap / Rational(4);
  return {s, value};
}

PointValue f_shifted_root(std::int64_t p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  const Surd r(Rational(-2 * p), Rational(1), 2 * p * (2 * p + 1));
  return {r, Rational(2 * p) + Rational(1, 2)};
}

ExactResult psi_sqrt(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (const auto q = exact_root(n)) {
    return {psi_unit_fraction(*q), std::nullopt, "unit_fraction"};
  }
  if (const auto w = represent(n, Target::psi_sqrt)) {
    return {ExactValue::finite(psi_sqrt_ratio(w->K, w->p).value), w,
            "sqrt_ratio"};
  }
  if (const auto w = represent(n, Target::f_sqrt)) {
    return {ExactValue::finite(psi_half_sqrt_ratio(w->K, w->p).value), w,
            "half_sqrt_ratio"};
  }
  return {ExactValue::not_representable(), std::nullopt, "none"};
}

ExactResult f_sqrt(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (const auto q = exact_root(n)) {
    return {f_unit_fraction(*q), std::nullopt, "unit_fraction"};
  }
  if (const auto w = represent(n, Target::f_sqrt)) {
    return {ExactValue::finite(f_half_sqrt_ratio(w->K, w->p).value), w,
            "half_sqrt_ratio"};
  }
  if (n % 4 == 0) {
    // f(1/sqrt n) = psi(1/sqrt n) - psi(1/sqrt(n/4))/4
    const ExactResult whole = psi_sqrt(n);
    const ExactResult quarter = psi_sqrt(n / 4);
    if (whole.value.is_finite() && quarter.value.is_finite()) {
      return {ExactValue::finite(whole.value.value() -
                                 quarter.value.value() / Rational(4)),
              whole.witness, "relation"};
    }
  }
  return {ExactValue::not_representable(), std::nullopt, "none"};
}

// Finds (K, p) with r0 = sigma x + period * m, where r0 is the orbit start
// p + p sqrt(1 + 1/(2pK)) (psi, period 2) or half of it (f, period 1, even p
// only, since odd p gives an irrational value).
std::optional<ExactResult> match_chain_start(Function fn, const Surd& x) {
  if (x.is_rational() || x.a().is_zero()) return std::nullopt;
  const bool psi = fn == Function::psi;
  // 2r0 for f has the psi shape, so work with y = x (psi) or 2x (f).
  const Surd y = psi ? x : Surd(2) * x;
  if (!y.a().is_integer()) return std::nullopt;
  const Rational b2d = y.b() * y.b() * Rational(y.d());
  const auto bound = static_cast<std::int64_t>(std::sqrt(b2d.to_double())) + 2;
  for (int sigma : {1, -1}) {
    const Rational a = y.a() * Rational(sigma);
    const int b_sign = y.b().sign() * sigma;
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (p == 0 || (p > 0 ? 1 : -1) != b_sign) continue;
      // Shift must be a whole period: 2m (psi) or 2m in the doubled f frame.
      const Rational shift = Rational(p) - a;
      if (!shift.is_integer() || shift.num() % 2 != 0) continue;
      if (!psi && p % 2 != 0) continue;
      // K = p / (2 (b^2 d - p^2))
      const Rational gap = b2d - Rational(p * p);
      if (gap.is_zero()) continue;
      const Rational k = Rational(p) / (Rational(2) * gap);
      if (!k.is_integer() || k.sign() <= 0 || !k.num().fits_slong_p()) continue;
      const std::int64_t K = k.num().get_si();
      if (psi) {
        const PointValue start = psi_chain_start(K, p);
        if (start.point != Surd(Rational(sigma)) * x + Surd(shift)) continue;
        return ExactResult{ExactValue::finite(start.value), std::nullopt,
                           "chain_start"};
      }
      const SurdPointValue start = f_chain_start(K, p);
      const Rational m = shift / Rational(2);
      if (start.point != Surd(Rational(sigma)) * x + Surd(m)) continue;
      // f(x) = (-1)^m f(sigma x + m)
      const bool flip = m.num() % 2 != 0;
      const Rational v = start.value.a();
      return ExactResult{ExactValue::finite(flip ? -v : v), std::nullopt,
                         "chain_start"};
    }
  }
  return std::nullopt;
}

Classification classify(Function fn, const Surd& r) {
  Classification out{r, 1, false, PointForm::general_surd, 0};
  Surd x = r;
  if (fn == Function::psi) {
    const Integer k = (x / Surd(2)).floor();
    x -= Surd(Rational(k * 2));
    if (x > Surd(1)) x = Surd(2) - x;
  } else {
    const Integer k = x.floor();
    x -= Surd(Rational(k));
    if (k % 2 != 0) out.sign = -out.sign;
    if (x > Surd(Rational(1, 2))) {
      x = Surd(1) - x;
      out.sign = -out.sign;
    }
  }
  out.canonical = x;
  if (x.is_rational()) {
    out.form = PointForm::rational_point;
    const Integer den = x.a().den();
    if (fn == Function::psi) {
      out.singular = (den % 2 == 0);
    } else {
      out.singular = (den % 4 == 2);
    }
    return out;
  }
  if (x.a().is_zero() && x.b().sign() > 0) {
    const Rational inv_sq = (x.b() * x.b() * Rational(x.d())).reciprocal();
    if (inv_sq.is_integer() && inv_sq.num().fits_slong_p()) {
      out.form = PointForm::inverse_sqrt;
      out.inverse_sqrt_n = to_int64(inv_sq.num());
    }
  }
  return out;
}

ExactResult evaluate(Function fn, const Surd& r) {
  const Classification c = classify(fn, r);
  auto signed_result = [&](ExactResult res) {
    if (c.sign < 0) res.value = res.value.negated();
    return res;
  };
  if (c.singular) return {ExactValue::singular(), std::nullopt, "singular"};
  if (c.form == PointForm::inverse_sqrt) {
    return signed_result(fn == Function::psi ? psi_sqrt(c.inverse_sqrt_n)
                                             : f_sqrt(c.inverse_sqrt_n));
  }
  if (c.form == PointForm::rational_point) {
    const Rational& x = c.canonical.a();
    if (x.is_zero()) {
      return signed_result({ExactValue::finite(fn == Function::psi
                                                   ? Rational(2, 3)
                                                   : Rational(1, 2)),
                            std::nullopt, "special_value"});
    }
    if (x.num() == 1) {
      const std::int64_t q = to_int64(x.den());
      return signed_result({fn == Function::psi ? psi_unit_fraction(q)
                                                : f_unit_fraction(q),
                            std::nullopt, "unit_fraction"});
    }
    return {ExactValue::not_representable(), std::nullopt, "none"};
  }
  if (c.canonical.a().is_zero()) {
    const Rational t = c.canonical.b() * c.canonical.b() * Rational(c.canonical.d());
    if (fn == Function::psi) {
      if (const auto w = represent_ratio(t, Target::psi_sqrt)) {
        return signed_result({ExactValue::finite(psi_sqrt_ratio(w->K, w->p).value),
                              w, "sqrt_ratio"});
      }
    }
    if (const auto w = represent_ratio(t, Target::f_sqrt)) {
      const Rational v = fn == Function::psi
                             ? psi_half_sqrt_ratio(w->K, w->p).value
                             : f_half_sqrt_ratio(w->K, w->p).value;
      return signed_result({ExactValue::finite(v), w, "half_sqrt_ratio"});
    }
  }
  if (auto res = match_chain_start(fn, c.canonical)) return signed_result(*res);
  if (fn == Function::f) {
    // sqrt(2p(2p+1)) - 2p: a = -2p, (x + 2p)^2 = 2p(2p+1).
    const Rational& a = c.canonical.a();
    if (a.is_integer() && a.sign() < 0 && a.num() % 2 == 0 &&
        c.canonical.b() == Rational(1)) {
      const std::int64_t p = to_int64(-a.num()) / 2;
      if (c.canonical == f_shifted_root(p).point) {
        return signed_result({ExactValue::finite(f_shifted_root(p).value),
                              std::nullopt, "shifted_root"});
      }
    }
  }
  return {ExactValue::not_representable(), std::nullopt, "none"};
}

PsiChain psi_chain(std::int64_t K, std::int64_t p) {
  const PointValue start = psi_chain_start(K, p);
  const PointValue mid = psi_sqrt_ratio(K, p);
  PsiChain chain{K, p, start.point, mid.point, start.point - Surd(2 * p),
                 start.value, mid.value, start.value};
  return chain;
}

FChain f_chain(std::int64_t K, std::int64_t p) {
  const SurdPointValue start = f_chain_start(K, p);
  const PointValue mid = f_half_sqrt_ratio(K, p);
  const Surd f_end = is_odd(p) ? -start.value : start.value;
  return FChain{K, p, start.point, mid.point, start.point - Surd(p),
                start.value, Surd(mid.value), f_end};
}

}  // namespace secz::closed_form
