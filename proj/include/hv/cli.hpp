#pragma once

#include "hv/check_report.hpp"
#include "hv/wronskian.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hv {

inline constexpr const char* kReportVersion = "1";

enum class ReportFormat { json, text };

struct RunConfig {
  int n_max = 3;
  std::vector<std::string> suites;  // empty means all
  std::optional<std::string> cache_path;
  ReportFormat format = ReportFormat::text;
  bool fail_fast = false;
  int worker_count = 1;
};

/// Thrown for invalid configurations; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& config);

/// The --cache value if given, else $HV_CACHE_DIR/hv-tau-cache.txt if the variable is set.
std::optional<std::string> resolve_cache_path(const std::optional<std::string>& flag);

struct FamilySource {
  TauFamily family;
  bool from_cache = false;
};

/// Loads the cache if it holds at least `needed` levels, otherwise builds the family
/// and (when a path is given) writes it back. Diagnostics go to `log`.
FamilySource obtain_family(int needed, const std::optional<std::string>& cache_path, std::ostream& log);

nlohmann::json report_json(const RunConfig& config, const std::vector<CheckReport>& checks, double elapsed_total);
std::string report_text(const std::vector<CheckReport>& checks, double elapsed_total);

/// 0 if no non-informational check failed, else 1.
int exit_code_for(const std::vector<CheckReport>& checks);

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_build(int n_max, const std::optional<std::string>& cache_path, std::ostream& out, std::ostream& err);

struct BenchRow {
  int n = 0;
  double construct_seconds = 0.0;
  std::size_t t_terms = 0;    // distinct powers of t in tau_n
  std::size_t monomials = 0;  // x,y,t monomials in tau_n
};

std::vector<BenchRow> bench_construction(int n_max);
int run_bench(int n_max, int worker_count, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] is the program name). Returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hv
