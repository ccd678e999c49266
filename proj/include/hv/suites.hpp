#pragma once

#include "hv/check_report.hpp"
#include "hv/wronskian.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hv {

/// Registered suite names in canonical order ("all" is accepted by expand_suites).
const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

/// Resolves "all", drops duplicates and returns names in canonical order.
/// Throws std::invalid_argument on an unknown name.
std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

/// Family size the suites need for the given n_max (Toda checks use tau_{n+1}).
int required_family_size(int n_max);

/// One independently runnable unit of work. Task order within a suite is fixed.
struct SuiteTask {
  std::string suite;
  std::function<std::vector<CheckReport>()> run;
};

std::vector<SuiteTask> suite_tasks(const std::string& suite, const TauFamily& fam, int n_max);

struct RunOptions {
  int workers = 1;
  bool fail_fast = false;
};

/// Runs the tasks of every suite. Exceptions inside a task turn into a failing
/// "<suite>.error" report. Results are sorted by (equation_id, n, order_index);
/// ties keep task order, so the output does not depend on the worker count.
/// With fail_fast, tasks run one at a time in order and the run stops after the
/// first task that produced a non-informational failure.
std::vector<CheckReport> run_suites(const std::vector<std::string>& suites, const TauFamily& fam, int n_max,
                                    const RunOptions& options);

void sort_reports(std::vector<CheckReport>& reports);

}  // namespace hv
