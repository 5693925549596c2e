#ifndef QSERIES_TOOLS_CLI_HPP
#define QSERIES_TOOLS_CLI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qseries/identities.hpp"
#include "qseries/quadrature.hpp"

namespace qseries::cli {

/// Exit statuses.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

/// Raised for invalid configurations; maps to kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Mode mode = Mode::numeric;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  double tolerance = 1e-9;
  // exact mode series order
  std::size_t order = 40;
  TruncationPolicy policy;
  QuadratureConfig quadrature;
  std::vector<IdentityId> only;
  std::string out;
  unsigned jobs = 1;

  void validate() const;
};

/// Applies QSERIES_TOL and QSERIES_JOBS when set; flags given later win.
void apply_environment(RunConfig& config);

/// One evaluated (or skipped) point of one check.
struct CheckRecord {
  std::string check;
  std::size_t index = 0;
  Mode mode = Mode::numeric;
  // slot name -> serialized value, in slot order, q first
  std::vector<std::pair<std::string, nlohmann::ordered_json>> point;
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  // judged on abs_err rather than rel_err (reference value 0)
  bool absolute = false;
  Outcome outcome = Outcome::error;
  std::string diagnostics;
};

struct Summary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t near_trivial = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;

  std::size_t total() const { return passed + failed + near_trivial + skipped + errors; }
};

struct SuiteReport {
  RunConfig config;
  std::string command;
  std::vector<CheckRecord> results;
  Summary summary;
  double duration_s = 0.0;
};

Summary tally(const std::vector<CheckRecord>& results);

/// Status for a finished report: 0 iff no failures and no evaluation errors.
int exit_status(const SuiteReport& report);

/// 17 significant digits, round-trip exact.
std::string format_double(double x);
nlohmann::ordered_json to_json(const Complex& z);
nlohmann::ordered_json to_json(const FormalSeries& s);
nlohmann::ordered_json to_json(const SuiteReport& report, bool include_timing = true);

/// Registry table; rows whose name contains filter (case-insensitive).
std::string list_table(const std::string& filter = "");

/// Every filtered registry entry at config.samples sampled points.
SuiteReport run_suite(const RunConfig& config);

/// One identity at sampled points.
SuiteReport run_check(IdentityId id, const RunConfig& config);

/// One identity at an explicit point; a point outside the domain is reported
/// as skipped with the reason.
SuiteReport run_check_point(IdentityId id, const ParameterPoint<Complex>& point,
                            const RunConfig& config);
SuiteReport run_check_point(IdentityId id, const ParameterPoint<FormalSeries>& point,
                            const RunConfig& config);

/// The quadrature checks (Askey-Wilson, beta integral, q-Hermite
/// orthogonality, q-Hermite generating function). Numeric mode only.
SuiteReport run_integrals(const RunConfig& config);

/// Parses "0.3", "-1.5e-2", "0.3+0.2i", "0.3-0.2i", "2i" or "0.3,0.2".
Complex parse_complex(const std::string& text);

/// Parses an exact value "r" or "r*t^m" / "rt^m" / "r*t" with r rational and
/// t the formal variable.
FormalSeries parse_exact(const std::string& text, std::size_t order);

/// Human summary printed after every run.
std::string summary_text(const SuiteReport& report);

/// Entry point used by main; returns the exit status.
int run(int argc, char** argv);

}  // namespace qseries::cli

#endif  // QSERIES_TOOLS_CLI_HPP
