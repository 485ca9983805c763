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

// Residuals of the functional identities satisfied by psi and f.
//
// Numeric identities are all linear in psi/f values, so each one is a plan:
// a list of (function, argument, terms, coefficient) plus a constant, with
// residual |sum coef * value + constant|. The tolerance follows from the
// same coefficients applied to the per-evaluation tail estimates.
//
// Exact identities are checked over the closed-form orbit chains and must
// vanish identically in Q(sqrt d).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secz/double_double.hpp"
#include "secz/function.hpp"
#include "secz/series.hpp"
#include "secz/surd.hpp"

namespace secz::abel {

struct Residual {
  std::string identity_id;
  std::string input;
  double residual = 0.0;
  double tolerance_used = 0.0;
  bool pass = false;
};

struct Sample {
  double value;
  double tail;
};

// Supplies psi/f at a point with a given number of terms.
using Evaluator = std::function<Sample(Function, DoubleDouble, std::int64_t)>;

// Series evaluator; terms from the call override config.terms.
Evaluator series_evaluator(const series::SeriesConfig& config);

// eq3ref, abel, abelf, relation, relation2, fsym, fantisym, similarity, cont.
const std::vector<std::string>& numeric_identities();
bool is_numeric_identity(std::string_view id);

struct PlanTerm {
  Function fn;
  double arg;
  std::int64_t terms;
  double coef;
};

struct Plan {
  std::vector<PlanTerm> terms;
  double constant = 0.0;
};

// Input x is tau for eq3ref, the integer l for cont, and r otherwise.
// Truncations are matched so that relation, relation2 and fantisym cancel
// term by term: f at N terms against psi at 2N.
Plan plan(std::string_view id, double x, std::int64_t terms);

// Input used for sample i drawn at point r in (0, 1/2).
double sample_input(std::string_view id, double r, std::int64_t index);

struct ToleranceRule {
  double floor = 1e-3;
  double tail_factor = 5.0;
};

Residual numeric_residual(std::string_view id, double x, std::int64_t terms,
                          const Evaluator& eval, const ToleranceRule& rule = {});

// Seeded sweep: r uniform in (0, 1/2), resampled until every argument of the
// plan clears the guard and the evaluator raises no SingularityError.
std::vector<Residual> sweep(std::string_view id, std::int64_t samples,
                            std::uint64_t seed, std::int64_t terms,
                            const Evaluator& eval,
                            const series::SingularityGuard& guard = {1e-4, 50},
                            const ToleranceRule& rule = {});

struct ExactResidual {
  std::string identity_id;
  std::string input;
  Surd residual;
};

// eq0, eq1, discreteder, abel_homogeneous, orbit_closure over the psi chain
// and abelf_eq0, abelf_eq1, orbit_closure_g over the f chain at (K, p).
std::vector<ExactResidual> exact_chain_residuals(std::int64_t K, std::int64_t p);

// psi(r) - psi(2r)/4 - f(r) at r = 1/sqrt(n) when all three values have
// closed forms.
std::optional<ExactResidual> exact_relation(std::int64_t n);

}  // namespace secz::abel
