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

#include "secz/conjecture.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace secz::conjecture {
namespace {

bool is_square(std::int64_t x, std::int64_t* root) {
  if (x < 0) return false;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  if (root) *root = s;
  return s * s == x;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::vector<std::int64_t> predicted_zeros(std::int64_t n_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 1; 16 * p * (p + 1) <= n_max; ++p) {
    out.push_back(16 * p * (p + 1));
  }
  return out;
}

bool is_predicted_zero(std::int64_t n) {
  if (n <= 0 || n % 16 != 0) return false;
  std::int64_t s = 0;
  return is_square(4 * (n / 16) + 1, &s) && s > 1;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::confirmed: return "confirmed";
    case Status::contradicted: return "contradicted";
    case Status::inconclusive: return "inconclusive";
    case Status::singular: return "singular";
    case Status::error: return "error";
  }
  return "?";
}

ScanRecord scan_one(std::int64_t n, const ScanConfig& cfg) {
  if (n < 1) throw std::invalid_argument("conjecture: n must be >= 1");
  if (!(cfg.zero_tol > 0.0)) {
    throw std::invalid_argument("conjecture: zero_tol must be > 0");
  }
  ScanRecord rec;
  rec.n = n;
  rec.predicted_zero = is_predicted_zero(n);
  const Surd point = Surd(1) / Surd::sqrt(Rational(n));
  rec.r = point.to_double();
  std::int64_t root = 0;
  if (is_square(n, &root)) rec.note = "perfect square";

  const auto exact = closed_form::f_sqrt(n);
  if (exact.value.kind() == closed_form::ExactValue::Kind::singular) {
    rec.exact_route = exact.value;
    rec.status = Status::singular;
    rec.f_value = NAN;
    return rec;
  }
  if (exact.value.is_finite()) {
    rec.exact_route = exact.value;
    rec.f_value = exact.value.value().to_double();
    rec.classified_zero = exact.value.value().is_zero();
    rec.confident = true;
  } else {
    series::SeriesConfig sc;
    sc.terms = cfg.terms;
    sc.strategy = cfg.strategy;
    sc.guard = cfg.guard;
    sc.threads = 1;
    try {
      const auto res =
          series::evaluate(Function::f, series::to_double_double(point), sc);
      rec.f_value = res.value;
      rec.tail_estimate = res.tail_estimate;
      rec.classified_zero = std::abs(res.value) <= cfg.zero_tol;
      rec.confident =
          res.tail_estimate < cfg.zero_tol / cfg.confidence_divisor;
    } catch (const std::exception& e) {
      rec.status = Status::error;
      rec.f_value = NAN;
      rec.note = e.what();
      return rec;
    }
  }
  if (!rec.confident) {
    rec.status = Status::inconclusive;
  } else {
    rec.status = rec.classified_zero == rec.predicted_zero
                     ? Status::confirmed
                     : Status::contradicted;
  }
  return rec;
}

std::vector<ScanRecord> scan(std::int64_t lo, std::int64_t hi,
                             const ScanConfig& cfg) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("conjecture: bad range");
  std::vector<ScanRecord> out(static_cast<std::size_t>(hi - lo + 1));
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  const std::int64_t count = hi - lo + 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    out[i] = scan_one(lo + i, cfg);
  }
  return out;
}

Summary summarize(const std::vector<ScanRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::confirmed: ++s.confirmed; break;
      case Status::contradicted: ++s.contradicted; break;
      case Status::inconclusive: ++s.inconclusive; break;
      case Status::singular: ++s.singular; break;
      case Status::error: ++s.errors; break;
    }
    if (r.confident && r.classified_zero) s.confident_zeros.push_back(r.n);
  }
  return s;
}

void write_csv(std::ostream& out, const std::vector<ScanRecord>& records) {
  out << "# secz-conjecture v1\n" << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << fmt(r.r) << ',' << fmt(r.f_value) << ','
        << fmt(r.tail_estimate) << ',' << (r.predicted_zero ? 1 : 0) << ','
        << (r.classified_zero ? 1 : 0) << ','
        << (r.exact_route ? r.exact_route->to_string() : "") << ','
        << to_string(r.status) << ',';
    // Notes may contain commas (error messages); quote them.
    if (!r.note.empty()) out << '"' << r.note << '"';
    out << '\n';
  }
  const Summary s = summarize(records);
  out << "# summary confirmed=" << s.confirmed
      << " contradicted=" << s.contradicted
      << " inconclusive=" << s.inconclusive << " singular=" << s.singular
      << " errors=" << s.errors << " zeros=";
  for (std::size_t i = 0; i < s.confident_zeros.size(); ++i) {
    out << (i ? ";" : "") << s.confident_zeros[i];
  }
  out << '\n';
}

}  // namespace secz::conjecture
