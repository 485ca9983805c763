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

// Inner loops of the series evaluation, plus the plain serial reference the
// tests and the benchmark compare them against.
//
// Term index i >= 0 has multiplier m = i + 1 (psi) or m = 2i + 1 (f) and
// value sec(m pi r) / m^2; the 4/pi^2 prefactor is applied by the caller.
// Arguments are expected to be non-negative (both functions are even).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "secz/double_double.hpp"
#include "secz/function.hpp"
#include "secz/series.hpp"

namespace secz::series::kernels {

inline std::int64_t multiplier(Function fn, std::int64_t i) {
  return fn == Function::psi ? i + 1 : 2 * i + 1;
}

// m * r mod 2 for r >= 0, accurate to a few ulps of the reduced phase even
// when m * r ~ 1e7.
inline double reduced_phase(DoubleDouble r, std::int64_t m) {
  const double md = static_cast<double>(m);
  const double p = md * r.hi;
  const double e = std::fma(md, r.hi, -p);
  const double whole = 2.0 * std::floor(0.5 * p);
  return (p - whole) + (e + md * r.lo);
}

// cos(pi t) and sin(pi t), reduced to |u| <= 1/4 around the nearest
// quarter period so values near the zeros keep full relative accuracy.
inline double cos_pi(double t) {
  const double q = std::nearbyint(2.0 * t);
  const double x = std::numbers::pi * (t - 0.5 * q);
  switch (static_cast<std::int64_t>(q) & 3) {
    case 0: return std::cos(x);
    case 1: return -std::sin(x);
    case 2: return -std::cos(x);
    default: return std::sin(x);
  }
}

inline double sin_pi(double t) {
  const double q = std::nearbyint(2.0 * t);
  const double x = std::numbers::pi * (t - 0.5 * q);
  switch (static_cast<std::int64_t>(q) & 3) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

struct SegmentStats {
  DoubleDouble sum;
  double prefix_total = 0.0;  // sum over the segment of the running local sum
  double abs_total = 0.0;
  double max_abs_term = 0.0;
};

// Terms with index in [first, last).
SegmentStats sum_segment(Function fn, DoubleDouble r, std::int64_t first,
                         std::int64_t last, Strategy strategy,
                         std::int64_t resync_interval);

// cos(m pi r) as produced by the recurrence strategy for every m in the
// segment, alongside the direct values; used by tests to bound drift.
struct RecurrenceTrace {
  std::int64_t multiplier;
  double recurrence_cos;
  double direct_cos;
};
std::vector<RecurrenceTrace> trace_recurrence(Function fn, DoubleDouble r,
                                              std::int64_t first,
                                              std::int64_t last,
                                              std::int64_t resync_interval);

}  // namespace secz::series::kernels

namespace secz::series::reference {

// One straight loop over all terms with long double accumulation and
// std::cos on the fmod-reduced argument. No segmentation, no threads, no
// guard. Returns the scaled value.
double sum(Function fn, DoubleDouble r, std::int64_t terms);

}  // namespace secz::series::reference
