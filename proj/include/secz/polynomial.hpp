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

#include "secz/rational.hpp"

namespace secz {

enum class PolyFamily { bernoulli, euler };

// Bernoulli degrees 0..3 and Euler degrees 1..2 are supported; that is all
// the Bernoulli double sum and the pole constants need.
struct PolySpec {
  PolyFamily family;
  int degree;
};

bool is_supported(const PolySpec& spec);

// Throws std::invalid_argument for an unsupported degree.
Rational poly_eval(const PolySpec& spec, const Rational& x);

inline Rational bernoulli(int degree, const Rational& x) {
  return poly_eval({PolyFamily::bernoulli, degree}, x);
}

inline Rational euler(int degree, const Rational& x) {
  return poly_eval({PolyFamily::euler, degree}, x);
}

}  // namespace secz
