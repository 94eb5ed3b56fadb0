#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "univalence/criteria.hpp"

namespace univalence {

/// Bad command line or configuration file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

enum class RowStatus { Pass, Fail, Skip };

/// One (parameter tuple x quantity) result. Skipped rows carry no numbers and
/// name the reason in `quantity`.
struct ReportRow {
  std::vector<double> params;
  std::string quantity;
  std::optional<double> bound;
  std::optional<double> attained;
  std::optional<double> margin;
  RowStatus status = RowStatus::Skip;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Report {
  std::vector<std::string> param_names;
  std::vector<ReportRow> rows;

  /// Every non-skipped row passed.
  bool all_passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Verification tolerance on margins.
inline constexpr double kMarginTolerance = 1e-9;

struct RunConfig {
  std::string command;  ///< constants | bounds-verify | criteria | scan | injectivity
  std::string which = "H";

  // sweep axes; empty optional = command default, empty vector = empty sweep
  std::optional<std::vector<double>> v, b, lambda, gamma;
  std::optional<std::vector<int>> n;
  std::optional<std::vector<std::complex<double>>> d, mu, eta, c, zeta;

  int m_index = 1;
  int order = kDefaultTruncation;
  std::optional<DiskGrid> grid;
  QuadratureSpec quad;
  std::uint64_t seed = 42;
  std::uint64_t pair_budget = 2'000'000;
  std::string format = "csv";
  std::string out_path;  ///< empty = standard output
};

/// Key/value pairs of a flat configuration file ("key = value", '#' comments,
/// keys may repeat). Values are returned in file order.
std::multimap<std::string, std::string> parse_config_text(const std::string& text);

/// Apply one option given by its key (the long flag name without dashes) and
/// all of its raw values. Throws ConfigError on unknown keys or bad values.
void set_option(RunConfig& cfg, const std::string& key, const std::vector<std::string>& values);

/// Option keys understood by set_option.
const std::vector<std::string>& option_keys();

/// "a", "a:b:step" and comma-separated lists of those; "" is the empty list.
std::vector<double> parse_real_list(const std::string& text);
/// Comma-separated complex literals: "1", "-0.5", "2i", "1+2i", "1.5-0.5i".
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

Report run_constants();
Report run_bounds_verify(const RunConfig& cfg);
Report run_criteria(const RunConfig& cfg);
Report run_scan(const RunConfig& cfg);
Report run_injectivity(const RunConfig& cfg);

/// Dispatch on cfg.command.
Report run_command(const RunConfig& cfg);

/// Header "params..., quantity, bound, attained, margin, pass"; LF endings.
void write_csv(const Report& report, std::ostream& out);
/// Array of row objects with the same fields as the CSV.
void write_json(const Report& report, std::ostream& out);
/// Inverse of write_csv.
Report parse_csv(std::istream& in);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double x);

}  // namespace univalence
