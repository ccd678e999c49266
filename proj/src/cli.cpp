#include "hv/cli.hpp"

#include "hv/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace hv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* format_name(ReportFormat f) { return f == ReportFormat::json ? "json" : "text"; }

nlohmann::json check_json(const CheckReport& r) {
  nlohmann::json j;
  j["equation_id"] = r.equation_id;
  j["n"] = r.n;
  j["order_index"] = r.order_index ? nlohmann::json(*r.order_index) : nlohmann::json(nullptr);
  j["status"] = r.passed() ? "pass" : "fail";
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  j["term_count"] = r.term_count;
  j["elapsed"] = r.elapsed.count();
  j["informational"] = r.informational;
  j["note"] = r.note;
  return j;
}

std::size_t distinct_t_powers(const LaurentPoly& p) {
  std::set<int> seen;
  for (const auto& [mono, c] : p.terms()) seen.insert(mono.et);
  return seen.size();
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.n_max < 1) throw ConfigError("--n-max must be >= 1");
  if (config.worker_count < 1) throw ConfigError("--workers must be >= 1");
  for (const auto& s : config.suites) {
    if (!is_known_suite(s)) throw ConfigError("unknown suite: " + s);
  }
}

std::optional<std::string> resolve_cache_path(const std::optional<std::string>& flag) {
  if (flag) return flag;
  if (const char* dir = std::getenv("HV_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    return std::string(dir) + "/hv-tau-cache.txt";
  }
  return std::nullopt;
}

FamilySource obtain_family(int needed, const std::optional<std::string>& cache_path, std::ostream& log) {
  if (cache_path) {
    std::ifstream in(*cache_path);
    if (in) {
      try {
        TauFamily fam = read_cache(in);
        if (fam.n_max >= needed) {
          log << "cache: loaded " << *cache_path << " (n_max=" << fam.n_max << ")\n";
          return {std::move(fam), true};
        }
        log << "cache: " << *cache_path << " holds n_max=" << fam.n_max << ", need " << needed << "; rebuilding\n";
      } catch (const std::exception& e) {
        log << "cache: ignoring unreadable " << *cache_path << ": " << e.what() << "\n";
      }
    }
  }
  FamilySource src{tau_family(needed), false};
  if (cache_path) {
    std::ofstream out(*cache_path);
    if (!out) throw ConfigError("cannot write cache file " + *cache_path);
    write_cache(src.family, out);
    log << "cache: wrote " << *cache_path << " (n_max=" << needed << ")\n";
  }
  return src;
}

nlohmann::json report_json(const RunConfig& config, const std::vector<CheckReport>& checks, double elapsed_total) {
  nlohmann::json j;
  j["version"] = kReportVersion;
  j["config"] = {{"n_max", config.n_max},
                 {"suites", expand_suites(config.suites)},
                 {"cache_path", config.cache_path ? nlohmann::json(*config.cache_path) : nlohmann::json(nullptr)},
                 {"format", format_name(config.format)},
                 {"fail_fast", config.fail_fast},
                 {"workers", config.worker_count}};
  nlohmann::json arr = nlohmann::json::array();
  std::size_t pass = 0, fail = 0, info = 0;
  for (const auto& r : checks) {
    arr.push_back(check_json(r));
    if (r.informational) {
      ++info;
    } else if (r.passed()) {
      ++pass;
    } else {
      ++fail;
    }
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"informational", info}, {"elapsed_total", elapsed_total}};
  return j;
}

std::string report_text(const std::vector<CheckReport>& checks, double elapsed_total) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, info = 0;
  for (const auto& r : checks) {
    const char* tag = r.passed() ? "PASS" : "FAIL";
    if (r.informational) {
      ++info;
      tag = r.passed() ? "INFO-PASS" : "INFO-FAIL";
    } else if (r.passed()) {
      ++pass;
    } else {
      ++fail;
    }
    os << std::left << std::setw(10) << tag << r.equation_id << " n=" << r.n;
    if (r.order_index) os << " I=" << *r.order_index;
    os << " terms=" << r.term_count;
    if (r.witness) os << " witness: " << *r.witness;
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << '\n';
  }
  os << "summary: " << pass << " pass, " << fail << " fail, " << info << " informational, " << std::fixed
     << std::setprecision(3) << elapsed_total << "s\n";
  return os.str();
}

int exit_code_for(const std::vector<CheckReport>& checks) {
  for (const auto& r : checks) {
    if (!r.passed() && !r.informational) return 1;
  }
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const auto start = Clock::now();
    const std::vector<std::string> suites = expand_suites(config.suites);
    const FamilySource src = obtain_family(required_family_size(config.n_max), config.cache_path, err);
    const std::vector<CheckReport> checks =
        run_suites(suites, src.family, config.n_max, RunOptions{config.worker_count, config.fail_fast});
    const double elapsed = seconds_since(start);
    if (config.format == ReportFormat::json) {
      out << report_json(config, checks, elapsed).dump(2) << '\n';
    } else {
      out << report_text(checks, elapsed);
    }
    return exit_code_for(checks);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_build(int n_max, const std::optional<std::string>& cache_path, std::ostream& out, std::ostream& err) {
  try {
    if (n_max < 1) throw ConfigError("--n-max must be >= 1");
    const auto start = Clock::now();
    const FamilySource src = obtain_family(n_max, cache_path, err);
    out << "built tau family n_max=" << src.family.n_max << (src.from_cache ? " (from cache)" : "") << " in "
        << std::fixed << std::setprecision(3) << seconds_since(start) << "s\n";
    for (int k = 0; k <= src.family.n_max; ++k) {
      out << "  n=" << k << " g terms=" << src.family.g[k].size() << " f terms=" << src.family.f[k].size() << '\n';
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

std::vector<BenchRow> bench_construction(int n_max) {
  const LaurentPoly psi = build_psi();
  std::vector<BenchRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto start = Clock::now();
    const LaurentPoly tau = determinant(wronskian_matrix(psi, n));
    rows.push_back({n, seconds_since(start), distinct_t_powers(tau), tau.size()});
  }
  return rows;
}

int run_bench(int n_max, int worker_count, std::ostream& out, std::ostream& err) {
  if (n_max < 1 || worker_count < 1) {
    err << "error: --n-max and --workers must be >= 1\n";
    return 2;
  }
  out << "construction\n";
  out << std::left << std::setw(4) << "n" << std::setw(14) << "seconds" << std::setw(10) << "t_terms"
      << "monomials\n";
  for (const BenchRow& r : bench_construction(n_max)) {
    out << std::left << std::setw(4) << r.n << std::setw(14) << std::fixed << std::setprecision(6)
        << r.construct_seconds << std::setw(10) << r.t_terms << r.monomials << '\n';
  }
  const TauFamily fam = tau_family(required_family_size(n_max));
  out << "suites (n_max=" << n_max << ", workers=" << worker_count << ")\n";
  for (const auto& suite : suite_names()) {
    const auto start = Clock::now();
    const auto checks = run_suites({suite}, fam, n_max, RunOptions{worker_count, false});
    out << std::left << std::setw(16) << suite << std::setw(12) << std::fixed << std::setprecision(4)
        << seconds_since(start) << checks.size() << " checks, " << (exit_code_for(checks) == 0 ? "ok" : "FAILED")
        << '\n';
  }
  return 0;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for Wronskian tau functions and their bilinear identities"};
  app.require_subcommand(1);

  RunConfig vcfg;
  std::optional<std::string> cache_flag;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", vcfg.suites, "Suite to run (repeatable; default all)")->take_all();
  verify->add_option("--n-max", vcfg.n_max, "Largest n to verify")->capture_default_str();
  verify->add_option("--cache", cache_flag, "Tau family cache file");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  verify->add_flag("--fail-fast", vcfg.fail_fast, "Stop at the first failing check");
  verify->add_option("--workers", vcfg.worker_count, "Worker threads")->capture_default_str();

  int build_n = 3;
  std::optional<std::string> build_cache;
  auto* build = app.add_subcommand("build", "Build the tau family and write the cache");
  build->add_option("--n-max", build_n, "Largest n to build")->capture_default_str();
  build->add_option("--cache", build_cache, "Tau family cache file");

  int bench_n = 5;
  int bench_workers = 1;
  auto* bench = app.add_subcommand("bench", "Time construction and suites");
  bench->add_option("--n-max", bench_n, "Largest n")->capture_default_str();
  bench->add_option("--workers", bench_workers, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*verify) {
      vcfg.format = format == "json" ? ReportFormat::json : ReportFormat::text;
      vcfg.cache_path = resolve_cache_path(cache_flag);
      return run_verify(vcfg, out, err);
    }
    if (*build) return run_build(build_n, resolve_cache_path(build_cache), out, err);
    return run_bench(bench_n, bench_workers, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hv
