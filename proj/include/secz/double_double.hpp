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

#include <cmath>

namespace secz {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Used for series arguments
// (so that m * r mod 2 stays accurate for m ~ 1e7) and for accumulation.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  double value() const { return hi + lo; }
};

namespace dd {

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble add(DoubleDouble x, DoubleDouble y) {
  DoubleDouble s = two_sum(x.hi, y.hi);
  s.lo += x.lo + y.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble add(DoubleDouble x, double y) {
  DoubleDouble s = two_sum(x.hi, y);
  s.lo += x.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble mul(DoubleDouble x, DoubleDouble y) {
  DoubleDouble p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble sqrt(double x) {
  const double s = std::sqrt(x);
  if (s == 0.0) return {};
  return quick_two_sum(s, std::fma(-s, s, x) / (2.0 * s));
}

inline DoubleDouble abs(DoubleDouble x) {
  return x.hi < 0.0 ? DoubleDouble{-x.hi, -x.lo} : x;
}

}  // namespace dd
}  // namespace secz
