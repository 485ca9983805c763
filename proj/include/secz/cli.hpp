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

#include <ostream>
#include <string_view>

#include "secz/surd.hpp"

namespace secz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEvaluation = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: exact, eval, verify, cg, conjecture, figure. Results go to out,
// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

// Accepts an integer, p/q, a decimal (read exactly), 1/sqrt(n), or a surd
// written [a+|a-][b*]sqrt(x)[+c|-c] with x an integer or p/q. This is the
// form Surd::to_string produces. Throws std::invalid_argument otherwise.
Surd parse_point(std::string_view text);

}  // namespace secz::cli
