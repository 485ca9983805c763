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

// Scan of f(1/sqrt(n)) against the zero set {16 p (p+1) : p >= 1}.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "secz/closed_form.hpp"
#include "secz/series.hpp"

namespace secz::conjecture {

std::vector<std::int64_t> predicted_zeros(std::int64_t n_max);

// n = 16 m with 4m + 1 an odd square > 1.
bool is_predicted_zero(std::int64_t n);

enum class Status { confirmed, contradicted, inconclusive, singular, error };

std::string_view to_string(Status s);

struct ScanRecord {
  std::int64_t n = 0;
  double r = 0.0;
  double f_value = 0.0;
  double tail_estimate = 0.0;
  bool predicted_zero = false;
  bool classified_zero = false;
  std::optional<closed_form::ExactValue> exact_route;
  bool confident = false;
  Status status = Status::inconclusive;
  std::string note;
};

struct ScanConfig {
  std::int64_t terms = 10000000;
  double zero_tol = 1e-3;
  // A series record is confident when tail_estimate < zero_tol / divisor.
  double confidence_divisor = 10.0;
  int threads = 0;
  series::Strategy strategy = series::Strategy::compensated;
  series::SingularityGuard guard;
};

ScanRecord scan_one(std::int64_t n, const ScanConfig& cfg);

// One record per n in [lo, hi], ordered by n.
std::vector<ScanRecord> scan(std::int64_t lo, std::int64_t hi,
                             const ScanConfig& cfg);

struct Summary {
  std::int64_t confirmed = 0;
  std::int64_t contradicted = 0;
  std::int64_t inconclusive = 0;
  std::int64_t singular = 0;
  std::int64_t errors = 0;
  std::vector<std::int64_t> confident_zeros;
};

Summary summarize(const std::vector<ScanRecord>& records);

inline constexpr std::string_view kCsvHeader =
    "n,r,f_value,tail_estimate,predicted_zero,classified_zero,exact_route,"
    "status,note";

// "# secz-conjecture v1" line, header, records, then a "# summary" line.
void write_csv(std::ostream& out, const std::vector<ScanRecord>& records);

}  // namespace secz::conjecture
