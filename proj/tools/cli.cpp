#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qseries/sampling.hpp"

namespace qseries::cli {

using json = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (samples == 0) {
    throw UsageError("--samples must be >= 1");
  }
  if (!(tolerance > 0.0)) {
    throw UsageError("--tol must be > 0");
  }
  if (order == 0) {
    throw UsageError("--order must be >= 1");
  }
  if (jobs == 0) {
    throw UsageError("--jobs must be >= 1");
  }
  try {
    policy.validate();
    quadrature.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void apply_environment(RunConfig& config) {
  if (const char* tol = std::getenv("QSERIES_TOL"); tol != nullptr && *tol != '\0') {
    char* end = nullptr;
    const double value = std::strtod(tol, &end);
    if (end == tol || *end != '\0' || !(value > 0.0)) {
      throw UsageError(std::string("QSERIES_TOL is not a positive number: ") + tol);
    }
    config.tolerance = value;
  }
  if (const char* jobs = std::getenv("QSERIES_JOBS"); jobs != nullptr && *jobs != '\0') {
    char* end = nullptr;
    const long value = std::strtol(jobs, &end, 10);
    if (end == jobs || *end != '\0' || value < 1) {
      throw UsageError(std::string("QSERIES_JOBS is not a positive integer: ") + jobs);
    }
    config.jobs = static_cast<unsigned>(value);
  }
}

Summary tally(const std::vector<CheckRecord>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.outcome) {
      case Outcome::passed:
        ++s.passed;
        break;
      case Outcome::failed:
        ++s.failed;
        break;
      case Outcome::near_trivial:
        ++s.near_trivial;
        break;
      case Outcome::skipped:
        ++s.skipped;
        break;
      case Outcome::error:
        ++s.errors;
        break;
    }
  }
  return s;
}

int exit_status(const SuiteReport& report) {
  return report.summary.failed == 0 && report.summary.errors == 0 ? kExitPass : kExitFailures;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json to_json(const Complex& z) { return json::array({format_double(z.real()), format_double(z.imag())}); }

json to_json(const FormalSeries& s) {
  json coeffs = json::array();
  for (const Rational& c : s.coefficients()) {
    coeffs.push_back(c.get_str());
  }
  return coeffs;
}

namespace {

json config_json(const RunConfig& c) {
  json only = json::array();
  for (IdentityId id : c.only) {
    only.push_back(std::string(identity_name(id)));
  }
  return json{{"mode", std::string(mode_name(c.mode))},
              {"seed", c.seed},
              {"samples", c.samples},
              {"tolerance", format_double(c.tolerance)},
              {"order", c.order},
              {"policy",
               {{"max_terms", c.policy.max_terms},
                {"max_factors", c.policy.max_factors},
                {"tail_tol", format_double(c.policy.tail_tol)},
                {"pole_margin", format_double(c.policy.pole_margin)}}},
              {"quadrature",
               {{"panel_order", c.quadrature.panel_order},
                {"abs_tol", format_double(c.quadrature.abs_tol)},
                {"rel_tol", format_double(c.quadrature.rel_tol)},
                {"max_panels", c.quadrature.max_panels}}},
              {"only", only},
              {"jobs", c.jobs}};
}

}  // namespace

json to_json(const SuiteReport& report, bool include_timing) {
  json results = json::array();
  for (const auto& r : report.results) {
    json point = json::object();
    for (const auto& [name, value] : r.point) {
      point[name] = value;
    }
    results.push_back(json{{"check", r.check},
                           {"index", r.index},
                           {"mode", std::string(mode_name(r.mode))},
                           {"point", point},
                           {"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"abs_err", format_double(r.abs_err)},
                           {"rel_err", format_double(r.rel_err)},
                           {"pass", r.pass},
                           {"outcome", std::string(outcome_name(r.outcome))},
                           {"diagnostics", r.diagnostics}});
  }
  const Summary& s = report.summary;
  json out{{"command", report.command},
           {"config", config_json(report.config)},
           {"results", results},
           {"summary",
            {{"total", s.total()},
             {"passed", s.passed},
             {"failed", s.failed},
             {"near_trivial", s.near_trivial},
             {"skipped", s.skipped},
             {"errors", s.errors}}}};
  if (include_timing) {
    out["timing"] = {{"duration_s", format_double(report.duration_s)}};
  }
  return out;
}

namespace {

std::string lower(std::string s) {
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

std::string slot_list(const IdentityDef& def) {
  std::string out;
  for (Slot s : def.slots) {
    if (!out.empty()) {
      out += ",";
    }
    out += slot_name(s);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string list_table(const std::string& filter) {
  const std::string key = lower(filter);
  std::ostringstream os;
  os << std::left << std::setw(16) << "NAME" << "  " << std::setw(14) << "SLOTS" << "  "
     << std::setw(5) << "EXACT" << "  " << std::setw(42) << "CITATION" << "  DOMAIN\n";
  for (const auto& def : registry()) {
    if (!key.empty() && lower(std::string(def.name)).find(key) == std::string::npos) {
      continue;
    }
    os << std::left << std::setw(16) << def.name << "  " << std::setw(14) << slot_list(def)
       << "  " << std::setw(5) << (def.exact ? "yes" : "no") << "  " << std::setw(42)
       << def.citation << "  " << def.domain << "\n";
  }
  return os.str();
}

namespace {

template <Scalar S>
std::vector<std::pair<std::string, json>> point_json(const IdentityDef& def,
                                                     const ParameterPoint<S>& p) {
  std::vector<std::pair<std::string, json>> out;
  out.emplace_back("q", to_json(p.q()));
  for (Slot s : def.slots) {
    out.emplace_back(std::string(slot_name(s)), to_json(p[s]));
  }
  return out;
}

json value_json(const AnyValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

template <Scalar S>
CheckRecord evaluate_point(IdentityId id, std::size_t index, const ParameterPoint<S>& p,
                           const RunConfig& config) {
  const IdentityDef& def = identity(id);
  CheckRecord rec;
  rec.check = std::string(def.name);
  rec.index = index;
  rec.mode = ScalarTraits<S>::exact ? Mode::exact : Mode::numeric;
  rec.point = point_json(def, p);
  std::string why;
  if (!in_domain(id, p, &why)) {
    rec.outcome = Outcome::skipped;
    rec.diagnostics = "outside domain: " + why;
    return rec;
  }
  try {
    const IdentityReport rep = [&] {
      if constexpr (ScalarTraits<S>::exact) {
        return check_identity(id, p, config.policy);
      } else {
        return check_identity(id, p, config.policy, config.tolerance);
      }
    }();
    rec.lhs = value_json(rep.lhs);
    rec.rhs = value_json(rep.rhs);
    rec.abs_err = rep.abs_err;
    rec.rel_err = rep.rel_err;
    rec.pass = rep.pass;
    rec.outcome = rep.outcome;
    rec.diagnostics = rep.diagnostics;
  } catch (const Error& e) {
    rec.outcome = Outcome::error;
    rec.diagnostics = e.what();
  }
  return rec;
}

CheckRecord error_record(std::string check, Mode mode, const std::string& what) {
  CheckRecord rec;
  rec.check = std::move(check);
  rec.mode = mode;
  rec.outcome = Outcome::error;
  rec.diagnostics = what;
  return rec;
}

// Runs tasks on up to jobs threads; results land at their task index so the
// report does not depend on completion order.
std::vector<CheckRecord> run_tasks(const std::vector<std::function<CheckRecord()>>& tasks,
                                   unsigned jobs) {
  std::vector<CheckRecord> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = tasks[i]();
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& th : pool) {
    th.join();
  }
  return results;
}

std::vector<IdentityId> selected(const RunConfig& config) {
  if (!config.only.empty()) {
    return config.only;
  }
  std::vector<IdentityId> ids;
  for (const auto& def : registry()) {
    if (config.mode == Mode::numeric || def.exact) {
      ids.push_back(def.id);
    }
  }
  return ids;
}

// Samples serially (deterministic), then evaluates in parallel.
void append_tasks(IdentityId id, const RunConfig& config,
                  std::vector<std::function<CheckRecord()>>& tasks) {
  const IdentityDef& def = identity(id);
  if (config.mode == Mode::exact) {
    if (!def.exact) {
      tasks.push_back([name = std::string(def.name)] {
        CheckRecord rec;
        rec.check = name;
        rec.mode = Mode::exact;
        rec.outcome = Outcome::skipped;
        rec.diagnostics = "no exact-mode formula for this entry";
        return rec;
      });
      return;
    }
    try {
      auto points = sample_exact(id, config.seed, config.samples, config.order);
      for (std::size_t i = 0; i < points.size(); ++i) {
        tasks.push_back([id, i, p = std::move(points[i]), &config] {
          return evaluate_point(id, i, p, config);
        });
      }
    } catch (const Error& e) {
      tasks.push_back([name = std::string(def.name), what = std::string(e.what())] {
        return error_record(name, Mode::exact, what);
      });
    }
    return;
  }
  try {
    auto points = sample_domain(id, config.seed, config.samples);
    for (std::size_t i = 0; i < points.size(); ++i) {
      tasks.push_back(
          [id, i, p = points[i], &config] { return evaluate_point(id, i, p, config); });
    }
  } catch (const Error& e) {
    tasks.push_back([name = std::string(def.name), what = std::string(e.what())] {
      return error_record(name, Mode::numeric, what);
    });
  }
}

SuiteReport finish(std::string command, const RunConfig& config,
                   std::vector<CheckRecord> results,
                   std::chrono::steady_clock::time_point start) {
  SuiteReport rep;
  rep.command = std::move(command);
  rep.config = config;
  rep.results = std::move(results);
  rep.summary = tally(rep.results);
  rep.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

SuiteReport run_suite(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::function<CheckRecord()>> tasks;
  for (IdentityId id : selected(config)) {
    append_tasks(id, config, tasks);
  }
  return finish("suite", config, run_tasks(tasks, config.jobs), start);
}

SuiteReport run_check(IdentityId id, const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::function<CheckRecord()>> tasks;
  append_tasks(id, config, tasks);
  return finish("check", config, run_tasks(tasks, config.jobs), start);
}

SuiteReport run_check_point(IdentityId id, const ParameterPoint<Complex>& point,
                            const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  return finish("check", config, {evaluate_point(id, 0, point, config)}, start);
}

SuiteReport run_check_point(IdentityId id, const ParameterPoint<FormalSeries>& point,
                            const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  if (!identity(id).exact) {
    throw UsageError(std::string(identity_name(id)) + " has no exact-mode formula");
  }
  return finish("check", config, {evaluate_point(id, 0, point, config)}, start);
}

namespace {

CheckRecord integral_record(std::string check, std::size_t index,
                            std::vector<std::pair<std::string, json>> point) {
  CheckRecord rec;
  rec.check = std::move(check);
  rec.index = index;
  rec.mode = Mode::numeric;
  rec.point = std::move(point);
  return rec;
}

json real_json(double x) { return to_json(Complex(x, 0.0)); }

void settle(CheckRecord& rec, const Complex& lhs, const Complex& rhs, double tol,
            bool absolute) {
  rec.lhs = to_json(lhs);
  rec.rhs = to_json(rhs);
  rec.abs_err = std::abs(lhs - rhs);
  rec.rel_err = rec.abs_err / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  rec.absolute = absolute;
  rec.pass = absolute ? rec.abs_err <= tol : rec.rel_err <= tol;
  rec.outcome = rec.pass ? Outcome::passed : Outcome::failed;
  if (absolute) {
    rec.diagnostics = "judged on abs_err";
  }
}

template <class F>
std::function<CheckRecord()> guarded(CheckRecord base, F body) {
  return [base = std::move(base), body]() mutable {
    try {
      body(base);
    } catch (const Error& e) {
      base.outcome = Outcome::error;
      base.diagnostics = e.what();
    }
    return base;
  };
}

}  // namespace

// Tolerances pinned for the four quadrature checks.
namespace tol {
constexpr double kAskeyWilson = 1e-8;
constexpr double kBeta = 1e-7;
constexpr double kOffDiagonal = 1e-9;
constexpr double kDiagonal = 1e-8;
constexpr double kGeneratingFunction = 1e-10;
}  // namespace tol

SuiteReport run_integrals(const RunConfig& config) {
  config.validate();
  if (config.mode != Mode::numeric) {
    throw UsageError("integrals: the theta integrals are numeric-only; use --mode numeric");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto params = sample_integral_params(config.seed, config.samples);
  const TruncationPolicy policy = config.policy;
  const QuadratureConfig quad = config.quadrature;
  std::vector<std::function<CheckRecord()>> tasks;

  for (std::size_t i = 0; i < params.size(); ++i) {
    const IntegralParams p = params[i];
    tasks.push_back(guarded(
        integral_record("ASKEY_WILSON", i,
                        {{"q", real_json(p.q)},
                         {"a", real_json(p.a)},
                         {"b", real_json(p.b)},
                         {"c", real_json(p.c)},
                         {"d", real_json(p.d)}}),
        [p, policy, quad](CheckRecord& rec) {
          const auto r = askey_wilson_integral(p.a, p.b, p.c, p.d, p.q, policy, quad);
          const auto chk = make_check(r, askey_wilson_closed_form(p.a, p.b, p.c, p.d, p.q, policy));
          settle(rec, chk.value, chk.reference, tol::kAskeyWilson, false);
          rec.diagnostics = "err_estimate=" + format_double(chk.err_estimate) + " " + chk.diagnostics;
        }));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    const IntegralParams p = params[i];
    tasks.push_back(guarded(
        integral_record("BETA_INTEGRAL", i,
                        {{"q", real_json(p.q)},
                         {"a", real_json(p.a)},
                         {"b", real_json(p.b)},
                         {"c", real_json(p.c)},
                         {"d", real_json(p.d)},
                         {"r", real_json(p.r)}}),
        [p, policy, quad](CheckRecord& rec) {
          const auto r = beta_integral(p.a, p.b, p.c, p.d, p.r, p.q, policy, quad);
          const auto chk =
              make_check(r, beta_closed_form(p.a, p.b, p.c, p.d, p.r, p.q, policy));
          settle(rec, chk.value, chk.reference, tol::kBeta, false);
          rec.diagnostics = "err_estimate=" + format_double(chk.err_estimate) + " " + chk.diagnostics;
        }));
  }
  std::size_t grid_index = 0;
  for (double q : {0.3, 0.5, 0.7}) {
    for (long m = 0; m <= 6; ++m) {
      for (long n = 0; n <= 6; ++n) {
        tasks.push_back(guarded(
            integral_record("QHERMITE_ORTHO", grid_index++,
                            {{"q", real_json(q)}, {"m", m}, {"n", n}}),
            [q, m, n, policy, quad](CheckRecord& rec) {
              const auto r = qhermite_orthogonality(m, n, q, policy, quad);
              const Complex expected = qhermite_norm(m, n, q, policy);
              settle(rec, r.value, expected, m == n ? tol::kDiagonal : tol::kOffDiagonal, m != n);
            }));
      }
    }
  }
  Rng rng(splitmix64(config.seed ^ 0x4845524d495445ULL));
  for (std::size_t i = 0; i < config.samples; ++i) {
    const double q = rng.uniform(0.05, 0.8);
    const Complex t = std::polar(rng.uniform(0.0, 0.8), rng.uniform(-std::numbers::pi, std::numbers::pi));
    const double theta = rng.uniform(0.0, std::numbers::pi);
    tasks.push_back(guarded(
        integral_record("QHERMITE_GF", i,
                        {{"q", real_json(q)}, {"t", to_json(t)}, {"theta", format_double(theta)}}),
        [q, t, theta, policy](CheckRecord& rec) {
          const auto cmp = qhermite_gf_check(t, theta, q, policy, tol::kGeneratingFunction);
          settle(rec, cmp.lhs, cmp.rhs, tol::kGeneratingFunction, false);
        }));
  }
  return finish("integrals", config, run_tasks(tasks, config.jobs), start);
}

Complex parse_complex(const std::string& text) {
  static const std::regex number(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  static const std::regex pair(R"(\s*([^,]+)\s*,\s*([^,]+)\s*)");
  auto to_double = [&](const std::string& s) {
    if (!std::regex_match(s, number)) {
      throw UsageError("not a number: '" + s + "'");
    }
    return std::stod(s);
  };
  std::smatch m;
  if (std::regex_match(text, m, pair)) {
    return {to_double(m[1].str()), to_double(m[2].str())};
  }
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += c;
    }
  }
  if (s.empty()) {
    throw UsageError("empty value");
  }
  if (s.back() != 'i' && s.back() != 'j') {
    return {to_double(s), 0.0};
  }
  s.pop_back();
  // split at the last sign that is not part of an exponent
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      std::string im = s.substr(k);
      if (im == "+" || im == "-") {
        im += "1";
      }
      return {to_double(s.substr(0, k)), to_double(im)};
    }
  }
  if (s.empty() || s == "+" || s == "-") {
    s += "1";
  }
  return {0.0, to_double(s)};
}

FormalSeries parse_exact(const std::string& text, std::size_t order) {
  static const std::regex shape(R"(\s*([^*t]+?)?\s*\*?\s*(t(\^(\d+))?)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, shape) || (!m[1].matched && !m[2].matched)) {
    throw UsageError("not an exact value: '" + text + "' (expected r or r*t^m)");
  }
  Rational coeff(1);
  if (m[1].matched) {
    try {
      coeff = parse_rational(m[1].str());
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  std::size_t power = 0;
  if (m[2].matched) {
    power = m[4].matched ? std::stoul(m[4].str()) : 1;
  }
  return FormalSeries::monomial(coeff, power, order);
}

std::string summary_text(const SuiteReport& report) {
  std::ostringstream os;
  const Summary& s = report.summary;
  // per-check tallies in first-seen order
  std::vector<std::string> names;
  std::map<std::string, Summary> per;
  for (const auto& r : report.results) {
    if (per.find(r.check) == per.end()) {
      names.push_back(r.check);
    }
    per[r.check] = Summary{};
  }
  for (const auto& r : report.results) {
    auto& t = per[r.check];
    switch (r.outcome) {
      case Outcome::passed: ++t.passed; break;
      case Outcome::failed: ++t.failed; break;
      case Outcome::near_trivial: ++t.near_trivial; break;
      case Outcome::skipped: ++t.skipped; break;
      case Outcome::error: ++t.errors; break;
    }
  }
  for (const auto& name : names) {
    const auto& t = per[name];
    double worst = 0.0;
    std::string note;
    for (const auto& r : report.results) {
      if (r.check == name) {
        if (r.outcome == Outcome::passed || r.outcome == Outcome::failed) {
          worst = std::max(worst, r.absolute ? r.abs_err : r.rel_err);
        }
        if ((r.outcome == Outcome::skipped || r.outcome == Outcome::error) && note.empty()) {
          note = r.diagnostics;
        }
      }
    }
    os << std::left << std::setw(16) << name << " " << (t.failed + t.errors == 0 ? "ok  " : "FAIL")
       << "  pass " << t.passed << "  fail " << t.failed << "  trivial " << t.near_trivial
       << "  skip " << t.skipped << "  error " << t.errors << "  max err "
       << std::setprecision(3) << worst;
    if (!note.empty()) {
      os << "  (" << note << ")";
    }
    os << "\n";
  }
  os << "total " << s.total() << ": " << s.passed << " passed, " << s.failed << " failed, "
     << s.near_trivial << " near-trivial, " << s.skipped << " skipped, " << s.errors
     << " errors in " << std::setprecision(3) << report.duration_s << " s\n";
  return os.str();
}

namespace {

void write_report(const SuiteReport& report) {
  const std::string& path = report.config.out;
  if (path.empty()) {
    return;
  }
  const std::string body = to_json(report).dump(2) + "\n";
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream os(path);
  if (!os) {
    throw UsageError("cannot write report to " + path);
  }
  os << body;
}

IdentityId parse_identity(const std::string& name) {
  auto id = identity_from_name(name);
  if (!id) {
    throw UsageError("unknown identity '" + name + "' (see `qseries list`)");
  }
  return *id;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"q-series identity verification harness"};
  app.require_subcommand(1);

  RunConfig config;
  std::string mode = "numeric";
  std::string only;
  std::optional<std::size_t> samples;
  std::optional<double> tolerance;
  std::optional<unsigned> jobs;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "numeric or exact")
        ->check(CLI::IsMember({"numeric", "exact"}));
    sub->add_option("--seed", config.seed, "64-bit sampling seed");
    sub->add_option("--samples", samples, "points per identity (default 100 numeric, 5 exact, 20 integrals)");
    sub->add_option("--tol", tolerance, "relative tolerance (default 1e-9, env QSERIES_TOL)");
    sub->add_option("--order", config.order, "exact-mode series order N");
    sub->add_option("--out", config.out, "write the JSON report here ('-' for stdout)");
    sub->add_option("--jobs", jobs, "worker threads (env QSERIES_JOBS)");
    sub->add_option("--max-terms", config.policy.max_terms, "series term cap");
    sub->add_option("--max-factors", config.policy.max_factors, "product factor cap");
    sub->add_option("--tail-tol", config.policy.tail_tol, "series and product tail tolerance");
    sub->add_option("--pole-margin", config.policy.pole_margin, "minimum denominator modulus");
  };

  std::string list_filter;
  auto* list = app.add_subcommand("list", "show the identity registry");
  list->add_option("filter", list_filter, "substring of identity names");

  auto* suite = app.add_subcommand("suite", "run every registry entry at sampled points");
  add_run_flags(suite);
  suite->add_option("--only", only, "comma-separated identity names");

  std::string check_name;
  std::map<Slot, std::string> slot_values;
  std::string q_value;
  std::optional<double> theta;
  auto* check = app.add_subcommand("check", "check one identity at a point or sampled points");
  check->add_option("identity", check_name, "identity name")->required();
  add_run_flags(check);
  check->add_option("--q", q_value, "base q (exact mode: the factor lambda in q = lambda t)");
  for (Slot s : kAllSlots) {
    check->add_option_function<std::string>(
        "--" + std::string(slot_name(s)),
        [&slot_values, s](const std::string& v) { slot_values[s] = v; },
        "value of slot " + std::string(slot_name(s)));
  }
  check->add_option("--theta", theta, "angle in [0, pi]");

  auto* integrals = app.add_subcommand("integrals", "run the theta-integral checks");
  add_run_flags(integrals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list->parsed()) {
      std::cout << list_table(list_filter);
      return kExitPass;
    }
    apply_environment(config);
    config.mode = mode == "exact" ? Mode::exact : Mode::numeric;
    if (tolerance) {
      config.tolerance = *tolerance;
    }
    if (jobs) {
      config.jobs = *jobs;
    }
    if (samples) {
      config.samples = *samples;
    } else if (integrals->parsed()) {
      config.samples = 20;
    } else {
      config.samples = config.mode == Mode::exact ? 5 : 100;
    }
    if (!only.empty()) {
      std::stringstream ss(only);
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (!name.empty()) {
          config.only.push_back(parse_identity(name));
        }
      }
    }

    SuiteReport report;
    if (suite->parsed()) {
      report = run_suite(config);
    } else if (integrals->parsed()) {
      report = run_integrals(config);
    } else {
      const IdentityId id = parse_identity(check_name);
      config.only = {id};
      const bool explicit_point = !q_value.empty() || !slot_values.empty() || theta.has_value();
      if (theta && !(*theta >= 0.0 && *theta <= std::numbers::pi)) {
        throw UsageError("--theta must be a real angle in [0, pi]");
      }
      if (!explicit_point) {
        if (!samples) {
          config.samples = 1;
        }
        report = run_check(id, config);
      } else if (config.mode == Mode::numeric) {
        ParameterPoint<Complex> p(q_value.empty() ? Complex(0.5) : parse_complex(q_value));
        for (const auto& [slot, text] : slot_values) {
          p.set(slot, parse_complex(text));
        }
        if (theta) {
          p.set_theta(*theta);
        }
        report = run_check_point(id, p, config);
      } else {
        Rational lambda(1);
        if (!q_value.empty()) {
          try {
            lambda = parse_rational(q_value);
          } catch (const Error& e) {
            throw UsageError(e.what());
          }
        }
        ParameterPoint<FormalSeries> p(FormalSeries::monomial(lambda, 1, config.order));
        for (const auto& [slot, text] : slot_values) {
          p.set(slot, parse_exact(text, config.order));
        }
        report = run_check_point(id, p, config);
      }
    }
    write_report(report);
    (config.out == "-" ? std::cerr : std::cout) << summary_text(report);
    return exit_status(report);
  } catch (const UsageError& e) {
    std::cerr << "qseries: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "qseries: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qseries::cli
