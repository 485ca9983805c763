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

// Truncated series for psi and f.
//
// The sum is split into fixed segments that depend only on the number of
// terms, never on the thread count; segments are summed in parallel and
// folded in index order, so results are bitwise reproducible for any
// --threads value.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "secz/double_double.hpp"
#include "secz/function.hpp"
#include "secz/rational.hpp"
#include "secz/surd.hpp"

namespace secz::series {

enum class Strategy { naive, compensated, recurrence };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

// Rejects arguments within delta of a singular rational (2p+1)/(2q) with
// 1 <= q <= max_q (q odd for f). delta = 0 disables the guard.
struct SingularityGuard {
  double delta = 1e-6;
  std::int64_t max_q = 100;
};

struct SeriesConfig {
  std::int64_t terms = 100000;
  Strategy strategy = Strategy::compensated;
  SingularityGuard guard;
  int threads = 0;                  // 0: OpenMP default
  std::int64_t resync_interval = 64;  // recurrence strategy only
  int tail_blocks = 3;
  double tail_block_fraction = 0.01;
};

struct SeriesResult {
  double value = 0.0;
  std::int64_t terms = 0;
  // Empirical: largest gap between the final partial sum and the mean
  // partial sum over each of the trailing blocks, floored at the rounding
  // level. Not a rigorous bound.
  double tail_estimate = 0.0;
  Strategy strategy = Strategy::compensated;
  double max_term_magnitude = 0.0;
};

class SingularityError : public std::domain_error {
 public:
  SingularityError(Function fn, double r, Rational nearest, double distance);
  const Rational& nearest() const { return nearest_; }
  double distance() const { return distance_; }

 private:
  Rational nearest_;
  double distance_;
};

struct NearSingularity {
  Rational point;
  double distance;
};

// Closest guarded singularity to r when it lies within guard.delta.
std::optional<NearSingularity> nearest_singularity(Function fn, double r,
                                                   const SingularityGuard& guard);

DoubleDouble to_double_double(const Rational& q);
DoubleDouble to_double_double(const Surd& s);

// Throws SingularityError when the guard trips, std::invalid_argument for
// terms < 1. Integer arguments (including 0) are returned exactly.
SeriesResult evaluate(Function fn, DoubleDouble r, const SeriesConfig& config);

inline SeriesResult eval_psi(double r, const SeriesConfig& config = {}) {
  return evaluate(Function::psi, {r, 0.0}, config);
}

inline SeriesResult eval_f(double r, const SeriesConfig& config = {}) {
  return evaluate(Function::f, {r, 0.0}, config);
}

struct BatchEntry {
  std::optional<SeriesResult> result;
  std::string error;
};

// One worker per point, each point summed serially in the same segment order
// as evaluate(), so entries equal sequential evaluate() calls bitwise.
std::vector<BatchEntry> batch_eval(Function fn, std::span<const double> points,
                                   const SeriesConfig& config);

enum class ModelKind { rational_approx, pole_asymptote, homothety_extended };

struct ModelSpec {
  ModelKind kind = ModelKind::rational_approx;
  std::int64_t index = 0;  // pole index p, or homothety steps K
};

// rational_approx:    1/18 + (1/36)/(1-6r) + (1/4)/(1-2r) on (1/6, 1/2)
// pole_asymptote(p):  r_p^2/(1 - r/r_p), r_p = 1/(4p+2), on (0, 1/2) \ {r_p}
// homothety_extended(K): rational_approx carried by K steps of the f-graph
//                     homothety onto (1/(4K+6), 1/(4K+2)).
// Throws std::out_of_range outside the validity interval.
double model_eval(const ModelSpec& spec, double r);

// homothety_extended with K chosen so that r in (0, 1/2) is covered.
double model_eval_auto(double r);

// Residue constant of the poles of f at 1/(4p+2), relative to r_p^2:
// (8/pi^3) sum_{l>=0} (-1)^l/(2l+1)^3 = -E_2(1/2) = 1/4.
Rational pole_residue_constant();

}  // namespace secz::series
