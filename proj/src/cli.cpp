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

#include "secz/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secz/charollois.hpp"
#include "secz/closed_form.hpp"
#include "secz/conjecture.hpp"
#include "secz/identities.hpp"
#include "secz/series.hpp"

namespace secz::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string fn = "psi";
  std::int64_t n = 0;
  std::string r;
  std::int64_t terms = -1;  // -1: per-command default
  std::string strategy = "compensated";
  int threads = 0;
  double guard_delta = -1.0;  // < 0: per-command default
  std::uint64_t seed = 1;
  std::string format;
  std::string identity = "all";
  std::int64_t samples = 100;
  std::int64_t p = 1;
  bool squared = false;
  bool compare = false;
  bool force = false;
  std::int64_t min = 2;
  std::int64_t max = 200;
  double tol = 1e-3;
  std::string which = "f";
  std::int64_t points = 2000;
  bool full = false;
};

Function function_of(const Options& o) {
  return o.fn == "psi" ? Function::psi : Function::f;
}

series::Strategy strategy_of(const Options& o) {
  return *series::parse_strategy(o.strategy);
}

std::string format_of(const Options& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  return v.dump();
}

void flatten(const json& obj, const std::string& prefix, json& out) {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "_" + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else {
      out[name] = value;
    }
  }
}

// Header from the first row's keys; nested objects become key_subkey.
void write_csv_rows(std::ostream& out, const std::vector<json>& rows) {
  if (rows.empty()) return;
  std::vector<json> flat;
  for (const auto& row : rows) {
    json f = json::object();
    flatten(row, "", f);
    flat.push_back(std::move(f));
  }
  bool first = true;
  for (const auto& [key, value] : flat.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : flat) {
    first = true;
    for (const auto& [key, value] : flat.front().items()) {
      out << (first ? "" : ",")
          << csv_field(row.contains(key) ? row[key] : json());
      first = false;
    }
    out << '\n';
  }
}

void emit(std::ostream& out, const std::string& format, const json& obj) {
  if (format == "csv") {
    write_csv_rows(out, {obj});
  } else {
    out << obj.dump() << '\n';
  }
}

Rational parse_decimal(const std::string& text) {
  static const std::regex re(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, re) || (m[2].length() + m[3].length()) == 0) {
    throw std::invalid_argument("not a number: " + text);
  }
  const std::string digits = m[2].str() + m[3].str();
  long exp10 = -static_cast<long>(m[3].length());
  if (m[4].matched) exp10 += std::stol(m[4].str());
  if (exp10 > 4000 || exp10 < -4000) {
    throw std::invalid_argument("exponent out of range: " + text);
  }
  Integer num(digits, 10);
  if (m[1] == "-") num = -num;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  return exp10 >= 0 ? Rational(Integer(num * scale)) : Rational(num, scale);
}

Rational parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rational::parse(text);
  return parse_decimal(text);
}

Surd point_arg(const std::string& text) {
  try {
    return parse_point(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--r: ") + e.what());
  }
}

json exact_value_json(const closed_form::ExactValue& v) {
  return v.to_string();
}

json witness_json(const std::optional<closed_form::Representation>& w) {
  if (!w) return nullptr;
  return json{{"K", w->K}, {"p", w->p}, {"q", w->q}};
}

series::SeriesConfig series_config(const Options& o, std::int64_t terms,
                                   double delta, std::int64_t max_q) {
  series::SeriesConfig cfg;
  cfg.terms = o.terms > 0 ? o.terms : terms;
  cfg.strategy = strategy_of(o);
  cfg.threads = o.threads;
  cfg.guard = {o.guard_delta >= 0.0 ? o.guard_delta : delta, max_q};
  return cfg;
}

int cmd_exact(const Options& o, std::ostream& out) {
  const Function fn = function_of(o);
  json j;
  auto res = closed_form::ExactResult{closed_form::ExactValue::not_representable(),
                                      std::nullopt, "none"};
  if (!o.r.empty()) {
    const Surd point = point_arg(o.r);
    res = closed_form::evaluate(fn, point);
    j["input"] = point.to_string();
    j["input_n"] = nullptr;
  } else {
    if (o.n < 1) throw UsageError("exact: need --n >= 1 or --r");
    res = fn == Function::psi ? closed_form::psi_sqrt(o.n)
                              : closed_form::f_sqrt(o.n);
    j["input"] = "1/sqrt(" + std::to_string(o.n) + ")";
    j["input_n"] = o.n;
  }
  j["function"] = std::string(to_string(fn));
  j["value"] = exact_value_json(res.value);
  j["witness"] = witness_json(res.witness);
  j["route"] = res.route;
  emit(out, format_of(o, "json"), j);
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Function fn = function_of(o);
  Surd point;
  if (!o.r.empty()) {
    point = point_arg(o.r);
  } else if (o.n >= 1) {
    point = Surd(1) / Surd::sqrt(Rational(o.n));
  } else {
    throw UsageError("eval: need --r or --n");
  }
  const auto cfg = series_config(o, 100000, 1e-6, 100);
  const auto res =
      series::evaluate(fn, series::to_double_double(point), cfg);
  json j;
  j["function"] = std::string(to_string(fn));
  j["r"] = point.to_string();
  j["r_value"] = point.to_double();
  j["value"] = res.value;
  j["terms"] = res.terms;
  j["tail_estimate"] = res.tail_estimate;
  j["strategy"] = std::string(series::to_string(res.strategy));
  j["max_term_magnitude"] = res.max_term_magnitude;
  emit(out, format_of(o, "json"), j);
  return kExitOk;
}

json residual_json(const abel::Residual& r) {
  return json{{"identity_id", r.identity_id}, {"input", r.input},
              {"residual", r.residual}, {"tolerance_used", r.tolerance_used},
              {"pass", r.pass}};
}

json exact_residual_json(const abel::ExactResidual& r) {
  const bool zero = r.residual.is_zero();
  return json{{"identity_id", r.identity_id}, {"input", r.input},
              {"residual", zero ? 0.0 : std::abs(r.residual.to_double())},
              {"tolerance_used", 0.0}, {"pass", zero},
              {"exact_residual", r.residual.to_string()}};
}

const std::vector<std::string>& exact_identities() {
  static const std::vector<std::string> ids = {
      "eq0",           "eq1",       "discreteder",     "abel_homogeneous",
      "orbit_closure", "abelf_eq0", "abelf_eq1",       "orbit_closure_g",
      "relation_exact"};
  return ids;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const bool all = o.identity == "all";
  const auto& exact_ids = exact_identities();
  const bool is_exact = std::find(exact_ids.begin(), exact_ids.end(),
                                  o.identity) != exact_ids.end();
  if (!all && !is_exact && !abel::is_numeric_identity(o.identity)) {
    throw UsageError("verify: unknown identity " + o.identity);
  }
  if (o.samples < 0) throw UsageError("verify: --samples must be >= 0");
  std::vector<json> rows;
  bool ok = true;

  const double delta = o.guard_delta >= 0.0 ? o.guard_delta : 1e-4;
  const series::SingularityGuard guard{delta, 50};
  auto cfg = series_config(o, 100000, delta, 50);
  const auto eval = abel::series_evaluator(cfg);
  std::vector<std::string> numeric;
  if (all) {
    numeric = abel::numeric_identities();
  } else if (!is_exact) {
    numeric = {o.identity};
  }
  for (const auto& id : numeric) {
    for (const auto& r :
         abel::sweep(id, o.samples, o.seed, cfg.terms, eval, guard)) {
      ok = ok && r.pass;
      rows.push_back(residual_json(r));
    }
  }

  if (all || is_exact) {
    // Chain grid K = 1..3, p = +-1..+-3; relation over n < 400.
    for (std::int64_t K = 1; K <= 3; ++K) {
      for (std::int64_t p = -3; p <= 3; ++p) {
        if (p == 0) continue;
        for (const auto& r : abel::exact_chain_residuals(K, p)) {
          if (!all && r.identity_id != o.identity) continue;
          ok = ok && r.residual.is_zero();
          rows.push_back(exact_residual_json(r));
        }
      }
    }
    if (all || o.identity == "relation_exact") {
      for (std::int64_t n = 4; n < 400; n += 4) {
        if (auto r = abel::exact_relation(n)) {
          ok = ok && r->residual.is_zero();
          rows.push_back(exact_residual_json(*r));
        }
      }
    }
  }

  if (format_of(o, "json") == "csv") {
    write_csv_rows(out, rows);
  } else {
    for (const auto& row : rows) out << row.dump() << '\n';
  }
  return ok ? kExitOk : kExitEvaluation;
}

json cg_result_json(const charollois::CGResult& r) {
  return json{{"value", r.value.to_string()},
              {"rational_part", r.rational_part.to_string()},
              {"irrational_part_zero", r.irrational_part_zero},
              {"approx", r.value.to_double()}};
}

int cmd_cg(const Options& o, std::ostream& out) {
  if (o.p < 1) throw UsageError("cg: --p must be >= 1");
  charollois::CGOptions opts;
  opts.force = o.force;
  opts.threads = o.threads;
  json j;
  if (o.compare) {
    const auto c = charollois::cg_compare(o.p, opts);
    j["p"] = c.p;
    j["cg_plain"] = cg_result_json(c.plain);
    j["cg_squared"] = cg_result_json(c.squared);
    j["closedform_value"] =
        c.closed_form ? json(c.closed_form->to_string()) : json(nullptr);
    j["match_plain"] = c.match_plain ? json(*c.match_plain) : json(nullptr);
    j["match_squared"] =
        c.match_squared ? json(*c.match_squared) : json(nullptr);
    j["plain_equals_squared"] = c.plain_equals_squared;
  } else {
    const auto w = charollois::build_witness(o.p, o.squared);
    const auto r = charollois::cg_eval(o.p, o.squared, opts);
    j["p"] = o.p;
    j["n"] = w.n;
    j["squared"] = o.squared;
    j["witness"] = json{{"a", w.a.get_str()}, {"b", w.b.get_str()},
                        {"c", w.c.get_str()}, {"d", w.d.get_str()}};
    j["lambda"] = w.lambda.to_string();
    j["left_eigen_congruence"] = charollois::left_eigen_congruence(w);
    const json rj = cg_result_json(r);
    for (const auto& [k, v] : rj.items()) j[k] = v;
  }
  emit(out, format_of(o, "json"), j);
  return kExitOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  if (o.min < 1 || o.max < o.min) throw UsageError("conjecture: bad range");
  if (!(o.tol > 0.0)) throw UsageError("conjecture: --tol must be > 0");
  conjecture::ScanConfig cfg;
  cfg.terms = o.terms > 0 ? o.terms : 10000000;
  cfg.zero_tol = o.tol;
  cfg.threads = o.threads;
  cfg.strategy = strategy_of(o);
  if (o.guard_delta >= 0.0) cfg.guard.delta = o.guard_delta;
  const auto records = conjecture::scan(o.min, o.max, cfg);
  if (format_of(o, "csv") == "csv") {
    conjecture::write_csv(out, records);
    return kExitOk;
  }
  json arr = json::array();
  for (const auto& r : records) {
    arr.push_back(json{
        {"n", r.n}, {"r", r.r},
        {"f_value", std::isfinite(r.f_value) ? json(r.f_value) : json(nullptr)},
        {"tail_estimate", r.tail_estimate}, {"predicted_zero", r.predicted_zero},
        {"classified_zero", r.classified_zero},
        {"exact_route", r.exact_route ? json(r.exact_route->to_string())
                                      : json(nullptr)},
        {"status", std::string(conjecture::to_string(r.status))},
        {"note", r.note}});
  }
  const auto s = conjecture::summarize(records);
  out << json{{"records", arr},
              {"summary",
               {{"confirmed", s.confirmed}, {"contradicted", s.contradicted},
                {"inconclusive", s.inconclusive}, {"singular", s.singular},
                {"errors", s.errors}, {"zeros", s.confident_zeros}}}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_figure(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.which != "psi" && o.which != "f" && o.which != "model") {
    throw UsageError("figure: --which must be psi, f or model");
  }
  const std::int64_t count = o.full ? 200000 : o.points;
  if (count < 0) throw UsageError("figure: --points must be >= 0");
  const bool model = o.which == "model";
  const Function fn = o.which == "psi" ? Function::psi : Function::f;
  auto cfg = series_config(o, o.full ? 100000 : 10000, 1e-6, 100);

  // Uniform in (0, 1), or (0, 1/2) for the model; redrawn near singularities.
  std::mt19937_64 rng(o.seed);
  const double width = model ? 0.5 : 1.0;
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  while (static_cast<std::int64_t>(pts.size()) < count) {
    const double r = width * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (r == 0.0) continue;
    if (series::nearest_singularity(fn, r, cfg.guard)) continue;
    pts.push_back(r);
  }
  std::sort(pts.begin(), pts.end());

  std::vector<json> rows;
  rows.reserve(pts.size());
  if (model) {
    for (double r : pts) {
      rows.push_back(json{{"r", r}, {"value", series::model_eval_auto(r)},
                          {"terms", 0}, {"tail_estimate", 0.0}});
    }
  } else {
    const auto results = series::batch_eval(fn, pts, cfg);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!results[i].result) {
        err << "figure: r=" << pts[i] << ": " << results[i].error << '\n';
        return kExitEvaluation;
      }
      const auto& res = *results[i].result;
      rows.push_back(json{{"r", pts[i]}, {"value", res.value},
                          {"terms", res.terms},
                          {"tail_estimate", res.tail_estimate}});
    }
  }
  if (format_of(o, "csv") == "csv") {
    out << "# secz-figure v1 which=" << o.which << '\n'
        << "r,value,terms,tail_estimate\n";
    for (const auto& row : rows) {
      out << csv_field(row["r"]) << ',' << csv_field(row["value"]) << ','
          << csv_field(row["terms"]) << ',' << csv_field(row["tail_estimate"])
          << '\n';
    }
  } else {
    out << json(rows).dump() << '\n';
  }
  return kExitOk;
}

void add_series_flags(CLI::App* sub, Options& o) {
  sub->add_option("--terms", o.terms, "number of series terms");
  sub->add_option("--strategy", o.strategy, "summation strategy")
      ->check(CLI::IsMember({"naive", "compensated", "recurrence"}));
  sub->add_option("--threads", o.threads, "worker threads (0 = all)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--guard-delta", o.guard_delta,
                  "singularity guard distance (0 disables)")
      ->check(CLI::NonNegativeNumber);
}

void add_format_flag(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

Surd parse_point(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw std::invalid_argument("empty point");
  static const std::regex inv_sqrt(R"(1/sqrt\(([^)]+)\))");
  // [a(+|-)][b*]sqrt(x)[(+|-)c]
  static const std::regex surd(
      R"((?:([^s]*?)([+-]))?(?:([^s*+-]+)\*)?sqrt\(([^)]+)\)(?:([+-])(.+))?)");
  std::smatch m;
  if (std::regex_match(s, m, inv_sqrt)) {
    const Rational x = parse_rational(m[1].str());
    if (x.sign() <= 0) throw std::invalid_argument("sqrt of non-positive");
    return Surd(1) / Surd::sqrt(x);
  }
  if (std::regex_match(s, m, surd)) {
    const Rational x = parse_rational(m[4].str());
    if (x.sign() < 0) throw std::invalid_argument("sqrt of negative");
    Surd out = Surd::sqrt(x);
    if (m[3].matched) out = out * Surd(parse_rational(m[3].str()));
    if (m[2].matched) {
      if (m[2] == "-") out = -out;
      if (m[1].length() > 0) out = out + Surd(parse_rational(m[1].str()));
    }
    if (m[5].matched) {
      const Surd c(parse_rational(m[6].str()));
      out = m[5] == "-" ? out - c : out + c;
    }
    return out;
  }
  return Surd(parse_rational(s));
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Secant zeta function: exact values, series, identities"};
  app.name("secz");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  auto* exact = app.add_subcommand("exact", "closed-form value at 1/sqrt(n) or a point");
  exact->add_option("--fn", o.fn, "function")->check(CLI::IsMember({"psi", "f"}));
  exact->add_option("--n", o.n, "evaluate at 1/sqrt(n)");
  exact->add_option("--r", o.r, "point: p/q, decimal, 1/sqrt(n), sqrt(x)");
  add_format_flag(exact, o);

  auto* eval = app.add_subcommand("eval", "truncated series value");
  eval->add_option("--fn", o.fn, "function")->check(CLI::IsMember({"psi", "f"}));
  eval->add_option("--r", o.r, "point: p/q, decimal, 1/sqrt(n), sqrt(x)");
  eval->add_option("--n", o.n, "evaluate at 1/sqrt(n)");
  add_series_flags(eval, o);
  add_format_flag(eval, o);

  auto* verify = app.add_subcommand("verify", "identity residuals");
  verify->add_option("--identity", o.identity,
                     "identity id, or all (numeric: eq3ref abel abelf relation "
                     "relation2 fsym fantisym similarity cont; exact: eq0 eq1 "
                     "discreteder abel_homogeneous orbit_closure abelf_eq0 "
                     "abelf_eq1 orbit_closure_g relation_exact)");
  verify->add_option("--samples", o.samples, "random points per numeric identity");
  verify->add_option("--seed", o.seed, "sampler seed");
  add_series_flags(verify, o);
  add_format_flag(verify, o);

  auto* cg = app.add_subcommand("cg", "Bernoulli double sum for psi(1/sqrt(p(p+1)))");
  cg->add_option("--p", o.p, "p >= 1");
  cg->add_flag("--squared", o.squared, "use the squared matrix");
  cg->add_flag("--compare", o.compare, "compare both matrices with the closed form");
  cg->add_flag("--force", o.force, "ignore the cost bound");
  cg->add_option("--threads", o.threads, "worker threads (0 = all)")
      ->check(CLI::NonNegativeNumber);
  add_format_flag(cg, o);

  auto* conj = app.add_subcommand("conjecture", "scan f(1/sqrt(n)) for zeros");
  conj->add_option("--min", o.min, "first n");
  conj->add_option("--max", o.max, "last n");
  conj->add_option("--tol", o.tol, "zero tolerance");
  add_series_flags(conj, o);
  add_format_flag(conj, o);

  auto* fig = app.add_subcommand("figure", "random-point data for plotting");
  fig->add_option("--which", o.which, "psi, f or model")
      ->check(CLI::IsMember({"psi", "f", "model"}));
  fig->add_option("--points", o.points, "number of points");
  fig->add_option("--seed", o.seed, "sampler seed");
  fig->add_flag("--full", o.full, "full scale: 2e5 points, 1e5 terms");
  add_series_flags(fig, o);
  add_format_flag(fig, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (o.terms == 0 || o.terms < -1) throw UsageError("--terms must be >= 1");
    if (*exact) return cmd_exact(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*cg) return cmd_cg(o, out);
    if (*conj) return cmd_conjecture(o, out);
    if (*fig) return cmd_figure(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluation;
  }
  return kExitUsage;
}

}  // namespace secz::cli
