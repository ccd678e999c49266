#include "hv/cli.hpp"
#include "hv/poly_text.hpp"
#include "hv/wronskian.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hv;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hv-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

nlohmann::json without_timing(nlohmann::json j) {
  j["summary"].erase("elapsed_total");
  for (auto& c : j["checks"]) c.erase("elapsed");
  return j;
}

}  // namespace

TEST_CASE("conjecture suite as JSON") {
  const Result r = run({"verify", "--suite", "conjecture", "--n-max", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == kReportVersion);
  CHECK(j["config"]["n_max"] == 3);
  CHECK(j["checks"].size() == 12);
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK(c["witness"].is_null());
  }
  CHECK(j["summary"]["pass"] == 12);
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"verify", "--suite", "all", "--n-max", "0"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--workers", "0"}).code == 2);
  CHECK(run({"verify", "--n-max", "three"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build", "--n-max", "0"}).code == 2);
  CHECK(run({"bench", "--n-max", "0"}).code == 2);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("cache reuse") {
  const fs::path dir = scratch_dir("cache");
  const std::string path = (dir / "out.tau").string();
  const Result b = run({"build", "--n-max", "4", "--cache", path});
  REQUIRE(b.code == 0);
  CHECK(fs::exists(path));
  const Result v = run({"verify", "--suite", "toda", "--cache", path});
  CHECK(v.code == 0);
  CHECK(v.err.find("cache: loaded") != std::string::npos);
  CHECK(v.err.find("cache: wrote") == std::string::npos);

  // Too small: rebuilt and rewritten.
  const Result bigger = run({"verify", "--suite", "mixed", "--n-max", "4", "--cache", path});
  CHECK(bigger.code == 0);
  CHECK(bigger.err.find("rebuilding") != std::string::npos);
  std::ifstream in(path);
  CHECK(read_cache(in).n_max == 5);

  // Default location from the environment.
  const fs::path envdir = scratch_dir("env");
  ::setenv("HV_CACHE_DIR", envdir.c_str(), 1);
  CHECK(run({"verify", "--suite", "mixed", "--n-max", "1"}).err.find("cache: wrote") != std::string::npos);
  CHECK(run({"verify", "--suite", "mixed", "--n-max", "1"}).err.find("cache: loaded") != std::string::npos);
  ::unsetenv("HV_CACHE_DIR");

  // Unwritable location is a configuration error.
  CHECK(run({"verify", "--suite", "mixed", "--cache", (dir / "missing" / "x.tau").string()}).code == 2);
  fs::remove_all(dir);
  fs::remove_all(envdir);
}

TEST_CASE("failing identities exit with 1 and still report") {
  const fs::path dir = scratch_dir("bad");
  const std::string path = (dir / "bad.tau").string();
  TauFamily fam = tau_family(4);
  fam.tau[2] = LaurentPoly(3) * fam.tau[2];
  fam.g[2] = fam.tau[2];
  {
    std::ofstream out(path);
    write_cache(fam, out);
  }
  const Result r = run({"verify", "--suite", "toda", "--cache", path, "--format", "json"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["fail"].get<int>() > 0);
  bool has_witness = false;
  for (const auto& c : j["checks"]) has_witness |= (c["status"] == "fail" && c["witness"].is_string());
  CHECK(has_witness);

  const Result ff = run({"verify", "--suite", "toda", "--cache", path, "--format", "json", "--fail-fast"});
  CHECK(ff.code == 1);
  CHECK(nlohmann::json::parse(ff.out)["checks"].size() < j["checks"].size());

  // A corrupt cache is ignored and rebuilt.
  {
    std::ofstream out(path);
    out << "garbage\n";
  }
  const Result rebuilt = run({"verify", "--suite", "toda", "--cache", path});
  CHECK(rebuilt.code == 0);
  CHECK(rebuilt.err.find("ignoring") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("reports are deterministic modulo timing") {
  const std::vector<std::string> args = {"verify", "--suite", "symmetries", "--suite", "orderwise-A",
                                         "--suite", "closedforms", "--n-max", "2", "--format", "json"};
  const auto a = without_timing(nlohmann::json::parse(run(args).out));
  const auto b = without_timing(nlohmann::json::parse(run(args).out));
  CHECK(a.dump() == b.dump());

  auto more = args;
  more.insert(more.end(), {"--workers", "3"});
  const auto c = without_timing(nlohmann::json::parse(run(more).out));
  CHECK(c["checks"].dump() == a["checks"].dump());
  CHECK(c["summary"].dump() == a["summary"].dump());
}

TEST_CASE("text report and informational checks") {
  const Result r = run({"verify", "--suite", "closedforms", "--n-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS      W-formula n=2") != std::string::npos);
  CHECK(r.out.find("INFO-FAIL A-recursion-printed n=3") != std::string::npos);
  CHECK(r.out.find("INFO-PASS A-recursion-printed n=2") != std::string::npos);
  CHECK(r.out.find("summary:") != std::string::npos);
}

TEST_CASE("bench") {
  const auto rows = bench_construction(5);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].t_terms == 2);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].t_terms >= rows[k - 1].t_terms);
    CHECK(rows[k].monomials >= rows[k - 1].monomials);
  }
  const Result r = run({"bench", "--n-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("construction") != std::string::npos);
  CHECK(r.out.find("conjecture") != std::string::npos);
}
