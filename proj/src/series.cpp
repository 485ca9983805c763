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

#include "secz/series.hpp"

#include <omp.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <gmpxx.h>

#include "secz/series_kernels.hpp"

namespace secz::series {
namespace {

constexpr std::int64_t kChunk = std::int64_t{1} << 15;
constexpr double kScale = 4.0 / (std::numbers::pi * std::numbers::pi);

struct Segment {
  std::int64_t first;
  std::int64_t last;
  bool tail_block;
};

// Depends on terms and the tail settings only.
std::vector<Segment> plan_segments(std::int64_t terms, const SeriesConfig& cfg) {
  const std::int64_t block = std::max<std::int64_t>(
      1, std::llround(static_cast<double>(terms) * cfg.tail_block_fraction));
  const std::int64_t blocks =
      std::min<std::int64_t>(std::max(0, cfg.tail_blocks), terms / block);
  const std::int64_t head = terms - blocks * block;
  std::vector<Segment> out;
  for (std::int64_t i = 0; i < head; i += kChunk) {
    out.push_back({i, std::min(head, i + kChunk), false});
  }
  for (std::int64_t b = 0; b < blocks; ++b) {
    out.push_back({head + b * block, head + (b + 1) * block, true});
  }
  return out;
}

std::string describe(Function fn, double r, const Rational& nearest,
                     double distance) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s(%.17g): within %.3g of singular point %s",
                std::string(to_string(fn)).c_str(), r, distance,
                nearest.to_string().c_str());
  return buf;
}

SeriesResult integer_value(Function fn, double x, const SeriesConfig& cfg) {
  const bool odd = std::fmod(x, 2.0) != 0.0;
  SeriesResult out;
  if (fn == Function::psi) {
    out.value = odd ? -1.0 / 3.0 : 2.0 / 3.0;
  } else {
    out.value = odd ? -0.5 : 0.5;
  }
  out.terms = cfg.terms;
  out.strategy = cfg.strategy;
  out.max_term_magnitude = 1.0;
  return out;
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::naive: return "naive";
    case Strategy::compensated: return "compensated";
    case Strategy::recurrence: return "recurrence";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "naive") return Strategy::naive;
  if (s == "compensated") return Strategy::compensated;
  if (s == "recurrence") return Strategy::recurrence;
  return std::nullopt;
}

SingularityError::SingularityError(Function fn, double r, Rational nearest,
                                   double distance)
    : std::domain_error(describe(fn, r, nearest, distance)),
      nearest_(std::move(nearest)),
      distance_(distance) {}

std::optional<NearSingularity> nearest_singularity(
    Function fn, double r, const SingularityGuard& guard) {
  if (!(guard.delta > 0.0)) return std::nullopt;
  const double x = std::abs(r);
  std::optional<NearSingularity> best;
  const std::int64_t step = fn == Function::f ? 2 : 1;
  for (std::int64_t q = 1; q <= guard.max_q; q += step) {
    // Singular points (2j+1)/(2q): nearest odd integer to 2qx.
    const double y = 2.0 * static_cast<double>(q) * x;
    const double odd = 2.0 * std::floor(0.5 * y) + 1.0;
    const double dist = std::abs(y - odd) / (2.0 * static_cast<double>(q));
    if (dist < guard.delta && (!best || dist < best->distance)) {
      best = NearSingularity{
          Rational(make_integer(static_cast<std::int64_t>(odd)),
                   make_integer(2 * q)),
          dist};
    }
  }
  return best;
}

DoubleDouble to_double_double(const Rational& q) {
  const double hi = q.to_double();
  const double lo = (q - Rational::from_double(hi)).to_double();
  return dd::quick_two_sum(hi, lo);
}

DoubleDouble to_double_double(const Surd& s) {
  if (s.is_rational()) return to_double_double(s.a());
  const mp_bitcnt_t prec = 256;
  mpf_class root(s.d(), prec);
  root = sqrt(root);
  mpf_class x(s.a().raw(), prec);
  x += mpf_class(s.b().raw(), prec) * root;
  const double hi = x.get_d();
  x -= hi;
  return dd::quick_two_sum(hi, x.get_d());
}

SeriesResult evaluate(Function fn, DoubleDouble r, const SeriesConfig& cfg) {
  if (cfg.terms < 1) throw std::invalid_argument("terms must be >= 1");
  if (!std::isfinite(r.hi) || !std::isfinite(r.lo)) {
    throw std::invalid_argument("argument must be finite");
  }
  const DoubleDouble x = dd::abs(r);
  if (x.lo == 0.0 && x.hi == std::floor(x.hi)) {
    return integer_value(fn, x.hi, cfg);
  }
  if (auto near = nearest_singularity(fn, x.value(), cfg.guard)) {
    throw SingularityError(fn, r.value(), near->point, near->distance);
  }

  const auto segments = plan_segments(cfg.terms, cfg);
  std::vector<kernels::SegmentStats> stats(segments.size());
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(segments.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    stats[i] = kernels::sum_segment(fn, x, segments[i].first, segments[i].last,
                                    cfg.strategy, cfg.resync_interval);
  }

  DoubleDouble total;
  double abs_total = 0.0;
  double max_term = 0.0;
  std::vector<double> block_means;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].tail_block) {
      const double len =
          static_cast<double>(segments[i].last - segments[i].first);
      block_means.push_back(total.value() + stats[i].prefix_total / len);
    }
    total = dd::add(total, stats[i].sum);
    abs_total += stats[i].abs_total;
    max_term = std::max(max_term, stats[i].max_abs_term);
  }

  SeriesResult out;
  out.value = kScale * total.hi + kScale * total.lo;
  out.terms = cfg.terms;
  out.strategy = cfg.strategy;
  out.max_term_magnitude = max_term;
  double spread = 0.0;
  for (double m : block_means) {
    spread = std::max(spread, std::abs(m - total.value()));
  }
  out.tail_estimate = kScale * std::max(spread, DBL_EPSILON * abs_total);
  return out;
}

std::vector<BatchEntry> batch_eval(Function fn, std::span<const double> points,
                                   const SeriesConfig& config) {
  std::vector<BatchEntry> out(points.size());
  SeriesConfig serial = config;
  serial.threads = 1;
  const int threads =
      config.threads > 0 ? config.threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      if (!std::isfinite(points[i])) {
        throw std::invalid_argument("argument must be finite");
      }
      out[i].result = evaluate(fn, {points[i], 0.0}, serial);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  }
  return out;
}

namespace {

double rational_approx(double r) {
  return 1.0 / 18.0 + (1.0 / 36.0) / (1.0 - 6.0 * r) + 0.25 / (1.0 - 2.0 * r);
}

[[noreturn]] void out_of_domain(const char* model, double r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s: r = %.17g outside validity interval",
                model, r);
  throw std::out_of_range(buf);
}

}  // namespace

double model_eval(const ModelSpec& spec, double r) {
  switch (spec.kind) {
    case ModelKind::rational_approx:
      if (!(r > 1.0 / 6.0 && r < 0.5)) out_of_domain("rational_approx", r);
      return rational_approx(r);
    case ModelKind::pole_asymptote: {
      if (spec.index < 0) throw std::out_of_range("pole index must be >= 0");
      const double rp = 1.0 / static_cast<double>(4 * spec.index + 2);
      if (!(r > 0.0 && r < 0.5) || r == rp) out_of_domain("pole_asymptote", r);
      return rp * rp / (1.0 - r / rp);
    }
    case ModelKind::homothety_extended: {
      if (spec.index < 0) throw std::out_of_range("step count must be >= 0");
      const double k4 = 4.0 * static_cast<double>(spec.index);
      if (!(r > 1.0 / (k4 + 6.0) && r < 1.0 / (k4 + 2.0))) {
        out_of_domain("homothety_extended", r);
      }
      // Pull r back to (1/6, 1/2), then scale the base value about (0, 1/2).
      const double base_r = r / (1.0 - k4 * r);
      const double alpha = 1.0 / (1.0 + k4 * base_r);
      return 0.5 + alpha * (rational_approx(base_r) - 0.5);
    }
  }
  return 0.0;
}

double model_eval_auto(double r) {
  if (!(r > 0.0 && r < 0.5)) out_of_domain("model", r);
  const auto k = static_cast<std::int64_t>(std::floor((1.0 / r - 2.0) / 4.0));
  return model_eval({ModelKind::homothety_extended, k}, r);
}

Rational pole_residue_constant() { return Rational(1, 4); }

}  // namespace secz::series
