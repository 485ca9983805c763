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

#include "secz/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace secz {

bool is_supported(const PolySpec& spec) {
  switch (spec.family) {
    case PolyFamily::bernoulli: return spec.degree >= 0 && spec.degree <= 3;
    case PolyFamily::euler: return spec.degree >= 1 && spec.degree <= 2;
  }
  return false;
}

Rational poly_eval(const PolySpec& spec, const Rational& x) {
  if (!is_supported(spec)) {
    throw std::invalid_argument("unsupported polynomial degree " +
                                std::to_string(spec.degree));
  }
  const Rational half(1, 2);
  if (spec.family == PolyFamily::euler) {
    if (spec.degree == 1) return x - half;
    return x * x - x;
  }
  switch (spec.degree) {
    case 0: return Rational(1);
    case 1: return x - half;
    case 2: return x * x - x + Rational(1, 6);
    default: return ((x - Rational(3, 2)) * x + half) * x;
  }
}

}  // namespace secz
