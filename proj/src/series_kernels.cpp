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

#include "secz/series_kernels.hpp"

#include <algorithm>
#include <cmath>

namespace secz::series::kernels {
namespace {

inline double term(double m, double c) { return 1.0 / (m * m * c); }

SegmentStats sum_naive(Function fn, DoubleDouble r, std::int64_t first,
                       std::int64_t last) {
  SegmentStats out;
  double s = 0.0;
  for (std::int64_t i = first; i < last; ++i) {
    const double m = static_cast<double>(multiplier(fn, i));
    const double phase = std::fmod(m * r.hi, 2.0);
    const double t = term(m, std::cos(std::numbers::pi * phase));
    s += t;
    out.prefix_total += s;
    out.abs_total += std::abs(t);
    out.max_abs_term = std::max(out.max_abs_term, std::abs(t));
  }
  out.sum = {s, 0.0};
  return out;
}

SegmentStats sum_compensated(Function fn, DoubleDouble r, std::int64_t first,
                             std::int64_t last) {
  SegmentStats out;
  double hi = 0.0;
  double lo = 0.0;
  for (std::int64_t i = first; i < last; ++i) {
    const std::int64_t m = multiplier(fn, i);
    const double t =
        term(static_cast<double>(m), cos_pi(reduced_phase(r, m)));
    const DoubleDouble s = dd::two_sum(hi, t);
    hi = s.hi;
    lo += s.lo;
    out.prefix_total += hi + lo;
    out.abs_total += std::abs(t);
    out.max_abs_term = std::max(out.max_abs_term, std::abs(t));
  }
  out.sum = dd::quick_two_sum(hi, lo);
  return out;
}

// Rotates (cos, sin)(m pi r) by the fixed step angle, restarting from direct
// evaluation every resync_interval terms.
class Rotor {
 public:
  Rotor(Function fn, DoubleDouble r) : r_(r) {
    const std::int64_t step = fn == Function::psi ? 1 : 2;
    const double t = reduced_phase(r, step);
    step_cos_ = cos_pi(t);
    step_sin_ = sin_pi(t);
  }

  void resync(std::int64_t m) {
    const double t = reduced_phase(r_, m);
    c_ = cos_pi(t);
    s_ = sin_pi(t);
  }

  void advance() {
    const double c = c_ * step_cos_ - s_ * step_sin_;
    s_ = s_ * step_cos_ + c_ * step_sin_;
    c_ = c;
  }

  double cos() const { return c_; }

 private:
  DoubleDouble r_;
  double step_cos_ = 1.0;
  double step_sin_ = 0.0;
  double c_ = 1.0;
  double s_ = 0.0;
};

SegmentStats sum_recurrence(Function fn, DoubleDouble r, std::int64_t first,
                            std::int64_t last, std::int64_t resync_interval) {
  SegmentStats out;
  Rotor rotor(fn, r);
  double hi = 0.0;
  double lo = 0.0;
  const std::int64_t every = std::max<std::int64_t>(1, resync_interval);
  for (std::int64_t i = first; i < last; ++i) {
    const std::int64_t m = multiplier(fn, i);
    if ((i - first) % every == 0) {
      rotor.resync(m);
    } else {
      rotor.advance();
    }
    const double t = term(static_cast<double>(m), rotor.cos());
    const DoubleDouble s = dd::two_sum(hi, t);
    hi = s.hi;
    lo += s.lo;
    out.prefix_total += hi + lo;
    out.abs_total += std::abs(t);
    out.max_abs_term = std::max(out.max_abs_term, std::abs(t));
  }
  out.sum = dd::quick_two_sum(hi, lo);
  return out;
}

}  // namespace

SegmentStats sum_segment(Function fn, DoubleDouble r, std::int64_t first,
                         std::int64_t last, Strategy strategy,
                         std::int64_t resync_interval) {
  switch (strategy) {
    case Strategy::naive: return sum_naive(fn, r, first, last);
    case Strategy::compensated: return sum_compensated(fn, r, first, last);
    case Strategy::recurrence:
      return sum_recurrence(fn, r, first, last, resync_interval);
  }
  return {};
}

std::vector<RecurrenceTrace> trace_recurrence(Function fn, DoubleDouble r,
                                              std::int64_t first,
                                              std::int64_t last,
                                              std::int64_t resync_interval) {
  std::vector<RecurrenceTrace> out;
  Rotor rotor(fn, r);
  const std::int64_t every = std::max<std::int64_t>(1, resync_interval);
  for (std::int64_t i = first; i < last; ++i) {
    const std::int64_t m = multiplier(fn, i);
    if ((i - first) % every == 0) {
      rotor.resync(m);
    } else {
      rotor.advance();
    }
    out.push_back({m, rotor.cos(), cos_pi(reduced_phase(r, m))});
  }
  return out;
}

}  // namespace secz::series::kernels

namespace secz::series::reference {

double sum(Function fn, DoubleDouble r, std::int64_t terms) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double x = std::abs(static_cast<long double>(r.hi) + r.lo);
  long double s = 0.0L;
  for (std::int64_t i = 0; i < terms; ++i) {
    const long double m = static_cast<long double>(
        fn == Function::psi ? i + 1 : 2 * i + 1);
    const long double phase = std::fmod(m * x, 2.0L);
    s += 1.0L / (m * m * std::cos(pi * phase));
  }
  return static_cast<double>(s * 4.0L / (pi * pi));
}

}  // namespace secz::series::reference
