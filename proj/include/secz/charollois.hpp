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

// Charollois-Greenberg evaluation of psi(1/sqrt(n)), n = p(p+1), as a finite
// Bernoulli double sum over Q(sqrt d):
//
//   psi = 32/(L(L-1)) sum_{j=1..c} sum_{l=0..3}
//             B_l(x_j)/l! * B_{3-l}(y_j)/(3-l)! * (-L)^l
//
// with x_j = (j - 1/4)/c, y_j = frac(d x_j), for an SL2(Z) matrix
// V = [a b; c d] with eigenvector (2r, 1) and eigenvalue L.
//
// The plain matrix [2p+1, 4; n, 2p+1] only satisfies [1/4, 0] V = [1/4, 0]
// mod Z^2 for even p; its square does for every p.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "secz/rational.hpp"
#include "secz/surd.hpp"

namespace secz::charollois {

struct ModularWitness {
  std::int64_t p;
  std::int64_t n;
  Integer a, b, c, d;
  bool squared;
  Surd lambda;
};

// Verifies ad - bc = 1 and V (2r, 1) = L (2r, 1) exactly; throws
// std::logic_error if either fails, std::invalid_argument for p < 1.
ModularWitness build_witness(std::int64_t p, bool squared);

// [1/4, 0] V == [1/4, 0] mod Z^2.
bool left_eigen_congruence(const ModularWitness& w);

struct CGResult {
  Surd value;
  Rational rational_part;
  bool irrational_part_zero;
};

class CostError : public std::runtime_error {
 public:
  CostError(std::int64_t p, const Integer& terms, std::int64_t bound);
  const Integer& terms() const { return terms_; }

 private:
  Integer terms_;
};

struct CGOptions {
  std::int64_t cost_bound = 1000000;  // max j-sum length without force
  bool force = false;
  int threads = 0;  // 0: OpenMP default
};

// Throws CostError when c exceeds the bound and force is off.
CGResult cg_eval(std::int64_t p, bool squared, const CGOptions& opts = {});

struct CGComparison {
  std::int64_t p;
  CGResult plain;
  CGResult squared;
  std::optional<Rational> closed_form;  // psi(1/sqrt(p(p+1))) when known
  bool plain_equals_squared;
  // Against the closed form; nullopt when it is not available.
  std::optional<bool> match_plain;
  std::optional<bool> match_squared;
};

CGComparison cg_compare(std::int64_t p, const CGOptions& opts = {});

}  // namespace secz::charollois
