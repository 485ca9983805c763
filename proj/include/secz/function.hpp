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

#include <optional>
#include <string_view>

namespace secz {

// psi(r) = (4/pi^2) sum_{n>=1} sec(n pi r)/n^2, the secant zeta function.
// f(r)   = (4/pi^2) sum_{k>=0} sec((2k+1) pi r)/(2k+1)^2, its
//          1-antiperiodization (psi(r) - psi(r+1))/2.
enum class Function { psi, f };

inline std::string_view to_string(Function fn) {
  return fn == Function::psi ? "psi" : "f";
}

inline std::optional<Function> parse_function(std::string_view s) {
  if (s == "psi") return Function::psi;
  if (s == "f") return Function::f;
  return std::nullopt;
}

}  // namespace secz
