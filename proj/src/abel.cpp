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

#include "secz/abel.hpp"

namespace secz::abel {

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::phi: return "phi";
    case MapKind::phi_inverse: return "phi_inverse";
    case MapKind::g: return "g";
    case MapKind::g_inverse: return "g_inverse";
    case MapKind::unit_shift_left: return "unit_shift_left";
  }
  return "?";
}

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::big_phi: return "big_phi";
    case TransformKind::big_g: return "big_g";
    case TransformKind::pi: return "pi";
    case TransformKind::phi_tilde: return "phi_tilde";
  }
  return "?";
}

}  // namespace secz::abel
