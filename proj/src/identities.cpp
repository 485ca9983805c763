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

#include "secz/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "secz/abel.hpp"
#include "secz/closed_form.hpp"

namespace secz::abel {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string chain_input(std::int64_t K, std::int64_t p) {
  return "K=" + std::to_string(K) + ",p=" + std::to_string(p);
}

}  // namespace

Evaluator series_evaluator(const series::SeriesConfig& config) {
  return [config](Function fn, DoubleDouble r, std::int64_t terms) {
    series::SeriesConfig cfg = config;
    cfg.terms = terms;
    const auto res = series::evaluate(fn, r, cfg);
    return Sample{res.value, res.tail_estimate};
  };
}

const std::vector<std::string>& numeric_identities() {
  static const std::vector<std::string> ids = {
      "eq3ref", "abel",     "abelf",      "relation", "relation2",
      "fsym",   "fantisym", "similarity", "cont"};
  return ids;
}

bool is_numeric_identity(std::string_view id) {
  const auto& ids = numeric_identities();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Plan plan(std::string_view id, double x, std::int64_t n) {
  const auto psi = Function::psi;
  const auto f = Function::f;
  Plan out;
  if (id == "eq3ref") {
    // (1+t) psi(t/(1+t)) - (1-t) psi(t/(1-t)) = 4 t (2+t^2) / (6 (1-t^2))
    const double t = x;
    out.terms = {{psi, t / (1.0 + t), n, 1.0 + t},
                 {psi, t / (1.0 - t), n, -(1.0 - t)}};
    out.constant = -4.0 * t * (2.0 + t * t) / (6.0 * (1.0 - t * t));
  } else if (id == "abel") {
    // Phi(phi(r)) - Phi(r) = 1
    const double r = x;
    const double s = r / (1.0 + 2.0 * r);
    out.terms = {{psi, s, n, 0.75 / s}, {psi, r, n, -0.75 / r}};
    out.constant = 0.75 * (s - r) - 1.0;
  } else if (id == "abelf") {
    // G(g(r)) - G(r) = 1
    const double r = x;
    const double s = r / (1.0 + 4.0 * r);
    out.terms = {{f, s, n, 0.5 / s}, {f, r, n, -0.5 / r}};
    out.constant = -1.0;
  } else if (id == "relation") {
    out.terms = {{psi, x, 2 * n, 1.0}, {psi, 2.0 * x, n, -0.25}, {f, x, n, -1.0}};
  } else if (id == "relation2") {
    out.terms = {{psi, x, 2 * n, 0.5}, {psi, x + 1.0, 2 * n, -0.5}, {f, x, n, -1.0}};
  } else if (id == "fsym") {
    out.terms = {{f, -x, n, 1.0}, {f, x, n, -1.0}};
  } else if (id == "fantisym") {
    out.terms = {{f, 1.0 - x, n, 1.0}, {f, x, n, 1.0}};
  } else if (id == "similarity") {
    // f(a r) = a f(r) + (1 - a) f(0), a = 1/(1+4r)
    const double a = 1.0 / (1.0 + 4.0 * x);
    out.terms = {{f, a * x, n, 1.0}, {f, x, n, -a}};
    out.constant = -(1.0 - a) * 0.5;
  } else if (id == "cont") {
    // f(l/(1+4l)) - f(1/4) = ((-1)^l - 1) / (2 (1+4l))
    const double l = x;
    const double sign = std::fmod(l, 2.0) == 0.0 ? 1.0 : -1.0;
    out.terms = {{f, l / (1.0 + 4.0 * l), n, 1.0}, {f, 0.25, n, -1.0}};
    out.constant = -(sign - 1.0) / (2.0 * (1.0 + 4.0 * l));
  } else {
    throw std::invalid_argument("unknown identity: " + std::string(id));
  }
  return out;
}

double sample_input(std::string_view id, double r, std::int64_t index) {
  if (id == "eq3ref") return r / (1.0 + r);  // so that t/(1-t) = r
  if (id == "cont") return static_cast<double>(1 + index % 20);
  return r;
}

Residual numeric_residual(std::string_view id, double x, std::int64_t terms,
                          const Evaluator& eval, const ToleranceRule& rule) {
  const Plan pl = plan(id, x, terms);
  DoubleDouble acc{pl.constant, 0.0};
  double tail = 0.0;
  for (const auto& t : pl.terms) {
    const Sample s = eval(t.fn, {t.arg, 0.0}, t.terms);
    acc = dd::add(acc, dd::two_prod(t.coef, s.value));
    tail += std::abs(t.coef) * s.tail;
  }
  Residual out;
  out.identity_id = std::string(id);
  out.input = fmt(x);
  out.residual = std::abs(acc.value());
  out.tolerance_used = std::max(rule.floor, rule.tail_factor * tail);
  out.pass = out.residual <= out.tolerance_used;
  return out;
}

std::vector<Residual> sweep(std::string_view id, std::int64_t samples,
                            std::uint64_t seed, std::int64_t terms,
                            const Evaluator& eval,
                            const series::SingularityGuard& guard,
                            const ToleranceRule& rule) {
  if (!is_numeric_identity(id)) {
    throw std::invalid_argument("unknown identity: " + std::string(id));
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Residual> out;
  for (std::int64_t i = 0; i < samples; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == 10000) {
        throw std::runtime_error("no guarded sample point found");
      }
      const double r = 0.5 * uniform();
      if (r == 0.0) continue;
      const double x = sample_input(id, r, i);
      const Plan pl = plan(id, x, terms);
      const bool clear = std::none_of(
          pl.terms.begin(), pl.terms.end(), [&](const PlanTerm& t) {
            return series::nearest_singularity(t.fn, t.arg, guard).has_value();
          });
      if (!clear) continue;
      // The evaluator may apply a stricter guard of its own.
      try {
        out.push_back(numeric_residual(id, x, terms, eval, rule));
        break;
      } catch (const series::SingularityError&) {
      }
    }
  }
  return out;
}

std::vector<ExactResidual> exact_chain_residuals(std::int64_t K,
                                                 std::int64_t p) {
  const std::string in = chain_input(K, p);
  std::vector<ExactResidual> out;

  const auto c = closed_form::psi_chain(K, p);
  auto big_phi = [](const Surd& r, const Rational& v) {
    return transform(TransformKind::big_phi, r, Surd(v));
  };
  auto phi_tilde = [](const Surd& r, const Rational& v) {
    return transform(TransformKind::phi_tilde, r, Surd(v));
  };
  const Surd p0 = big_phi(c.r0, c.psi_r0);
  const Surd pK = big_phi(c.rK, c.psi_rK);
  const Surd p2K = big_phi(c.r2K, c.psi_r2K);
  out.push_back({"eq0", in, pK - p0 - Surd(K)});
  out.push_back({"eq1", in, p2K - p0 - Surd(2 * K)});
  out.push_back({"discreteder", in, p2K - Surd(2) * pK + p0});
  out.push_back({"abel_homogeneous", in,
                 phi_tilde(c.rK, c.psi_rK) - phi_tilde(c.r0, c.psi_r0)});
  out.push_back({"orbit_closure", in, orbit(c.r0, MapKind::phi, 2 * K) - c.r2K});

  const auto fc = closed_form::f_chain(K, p);
  const Surd g0 = transform(TransformKind::big_g, fc.s0, fc.f_s0);
  const Surd gK = transform(TransformKind::big_g, fc.sK, fc.f_sK);
  const Surd g2K = transform(TransformKind::big_g, fc.s2K, fc.f_s2K);
  out.push_back({"abelf_eq0", in, gK - g0 - Surd(K)});
  out.push_back({"abelf_eq1", in, g2K - g0 - Surd(2 * K)});
  out.push_back({"orbit_closure_g", in, orbit(fc.s0, MapKind::g, 2 * K) - fc.s2K});
  return out;
}

std::optional<ExactResidual> exact_relation(std::int64_t n) {
  if (n < 4 || n % 4 != 0) return std::nullopt;
  const auto psi_r = closed_form::psi_sqrt(n);
  const auto psi_2r = closed_form::psi_sqrt(n / 4);
  const auto w = closed_form::represent(n, closed_form::Target::f_sqrt);
  if (!psi_r.value.is_finite() || !psi_2r.value.is_finite() || !w) {
    return std::nullopt;
  }
  const Rational f_r = closed_form::f_half_sqrt_ratio(w->K, w->p).value;
  const Rational res =
      psi_r.value.value() - psi_2r.value.value() / Rational(4) - f_r;
  return ExactResidual{"relation_exact", "1/sqrt(" + std::to_string(n) + ")", Surd(res)};
}

}  // namespace secz::abel
