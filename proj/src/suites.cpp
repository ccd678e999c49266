#include "hv/suites.hpp"

#include "hv/closedform.hpp"
#include "hv/operators.hpp"
#include "hv/verifier.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <tuple>

#include <omp.h>

namespace hv {

namespace {

constexpr unsigned kSu11Seed = 20240611;
constexpr unsigned kWeylLockSeed = 7;
constexpr std::size_t kSu11Draws = 5;
constexpr std::size_t kWeylLockSamples = 50;

using Task = std::function<std::vector<CheckReport>()>;

std::vector<CheckReport> one(CheckReport r) { return {std::move(r)}; }

CheckReport compare(std::string id, int n, const LaurentPoly& expected, const LaurentPoly& actual) {
  return residual_report(std::move(id), n, std::nullopt, actual - expected, expected.size() + actual.size());
}

LaurentPoly u_poly() { return GaussianRational::ratio(1, 2) * (LaurentPoly::x() + LaurentPoly::y()); }
LaurentPoly v_poly() { return GaussianRational::ratio(1, 2) * (LaurentPoly::x() - LaurentPoly::y()); }

std::string ernst_point_text(const ErnstPoint& p) {
  return "x=" + p.x.to_string() + " y=" + p.y.to_string() + " t=" + p.t.to_string();
}

std::vector<Task> toda_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) {
    for (TodaWhich w : {TodaWhich::tau, TodaWhich::g, TodaWhich::f}) {
      out.emplace_back([&fam, n, w] { return one(check_toda(fam, n, w)); });
    }
  }
  return out;
}

std::vector<Task> mixed_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) out.emplace_back([&fam, n] { return one(check_mixed(fam, n)); });
  return out;
}

CheckReport det_oracle(std::string id, int dim, const SymMatrix& m) {
  return timed([&] {
    LaurentPoly ff = determinant(m, DetAlgo::fraction_free);
    LaurentPoly cf = determinant(m, DetAlgo::cofactor);
    return compare(std::move(id), dim, cf, ff);
  });
}

SymMatrix hankel_W(int dim, int offset) {
  SymMatrix m(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m.at(i, j) = W_recursive(i + j + offset);
  }
  return m;
}

std::vector<Task> jacobi_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) {
    out.emplace_back([&fam, n] { return one(timed([&] { return jacobi_identity_check(n, fam.seed); })); });
  }
  const int top = std::min(4, N + 1);
  for (int d = 1; d <= top; ++d) {
    out.emplace_back([&fam, d] { return one(det_oracle("det-oracle.tau", d, wronskian_matrix(fam.seed, d))); });
    out.emplace_back([&fam, d] {
      const LaurentPoly shifted = apply_L(DiffOp::L_plus, apply_L(DiffOp::L_minus, fam.seed));
      return one(det_oracle("det-oracle.f", d, wronskian_matrix(shifted, d)));
    });
    out.emplace_back([d] { return one(det_oracle("det-oracle.q0g", d, hankel_W(d, 1))); });
    out.emplace_back([d] { return one(det_oracle("det-oracle.q0f", d, hankel_W(d, 3))); });
  }
  return out;
}

std::vector<Task> conjecture_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) out.emplace_back([&fam, n] { return check_conjecture(fam, n); });
  return out;
}

std::vector<Task> symmetry_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) out.emplace_back([&fam, n] { return check_symmetries(fam, n); });
  return out;
}

std::vector<Task> closedform_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 2; n <= 12; ++n) {
    out.emplace_back([n] { return one(timed([&] { return compare("W-formula", n, W_recursive(n), W_formula(n)); })); });
  }
  for (int n = 2; n <= std::max(5, N); ++n) {
    out.emplace_back([n] {
      const mpq_class lhs = A_coeff(n - 1) * A_coeff(n + 1);
      const mpq_class an = A_coeff(n);
      std::vector<CheckReport> r;
      r.push_back(compare("A-recursion", n, LaurentPoly(GaussianRational(mpq_class(n * n) * an * an)),
                          LaurentPoly(GaussianRational(lhs))));
      CheckReport printed = compare("A-recursion-printed", n, LaurentPoly(GaussianRational(mpq_class(n * n) * an)),
                                    LaurentPoly(GaussianRational(lhs)));
      printed.informational = true;
      printed.note = "printed form A_{n-1} A_{n+1} = n^2 A_n";
      r.push_back(std::move(printed));
      return r;
    });
  }
  for (int n = 1; n <= std::max(6, N); ++n) {
    out.emplace_back([n] {
      return std::vector<CheckReport>{
          timed([&] { return compare("q0-closed.g", n, g_q0_wronskian(n), g_q0_closed(n)); }),
          timed([&] { return compare("q0-closed.f", n, f_q0_wronskian(n), f_q0_closed(n)); })};
    });
  }
  for (int n = 1; n <= N; ++n) {
    out.emplace_back([&fam, n] {
      return std::vector<CheckReport>{
          timed([&] { return compare("q0-slice.g", n, at_t_equals_one(fam.g[n]), g_q0_closed(n)); }),
          timed([&] { return compare("q0-slice.f", n, at_t_equals_one(fam.f[n]), f_q0_closed(n)); }),
          timed([&] { return compare("high.g", n, coeff_of_t(fam.g[n], n), g_high(n)); }),
          timed([&] { return compare("low.g", n, coeff_of_t(fam.g[n], -n), g_low(n)); }),
          timed([&] { return compare("high.f", n, coeff_of_t(fam.f[n], n - 1), f_high(n)); }),
          timed([&] { return compare("low.f", n, coeff_of_t(fam.f[n], -n + 1), f_low(n)); })};
    });
    out.emplace_back([n] { return check_highest_toda_closed(n); });
  }
  out.emplace_back([] {
    const LaurentPoly u = u_poly(), v = v_poly();
    const LaurentPoly g2 = LaurentPoly(4) * u * v.pow(3);
    const LaurentPoly f2 = LaurentPoly(2) * u * (u * u + LaurentPoly(3) * v * v - LaurentPoly(1));
    return std::vector<CheckReport>{compare("anchor.g-high", 2, g2, g_high(2)),
                                    compare("anchor.f-high", 2, f2, f_high(2))};
  });
  return out;
}

std::vector<Task> weyl_tasks(int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) out.emplace_back([n] { return check_weyl_q0(n); });
  out.emplace_back([] { return check_weyl_lock(kWeylLockSamples, kWeylLockSeed); });
  return out;
}

std::vector<Task> orderwise_a_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) {
    for (OrderwiseFamily fm : {OrderwiseFamily::g, OrderwiseFamily::f, OrderwiseFamily::mixed}) {
      for (int I = 0; I <= orderwise_max_index(fm, n); ++I) {
        out.emplace_back([&fam, n, I, fm] { return one(check_orderwise_toda(fam, n, I, fm)); });
      }
      out.emplace_back([&fam, n, fm] { return one(check_orderwise_toda_sum(fam, n, fm)); });
    }
  }
  return out;
}

std::vector<Task> orderwise_b_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) {
    for (NakamuraEq eq : {NakamuraEq::B1, NakamuraEq::B2, NakamuraEq::B3, NakamuraEq::B4}) {
      for (int I = 0; I <= nakamura_max_index(eq, n); ++I) {
        out.emplace_back([&fam, n, I, eq] { return one(check_orderwise_nakamura(fam, n, I, eq)); });
      }
      out.emplace_back([&fam, n, eq] { return one(check_orderwise_nakamura_sum(fam, n, eq)); });
    }
    out.emplace_back([n] { return check_highest_nakamura_closed(n); });
  }
  return out;
}

std::vector<Task> ernst_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  for (int n = 1; n <= N; ++n) {
    out.emplace_back([&fam, n] {
      std::vector<CheckReport> reps;
      for (const ErnstSample& s : ernst_residual_numeric(fam, n, default_ernst_points())) {
        CheckReport r;
        r.equation_id = "ernst";
        r.n = n;
        r.note = ernst_point_text(s.point);
        if (!s.evaluated) {
          r.status = CheckStatus::fail;
          r.witness = s.error;
        } else if (s.residual.is_zero()) {
          r.status = CheckStatus::pass;
        } else {
          r.status = CheckStatus::fail;
          r.witness = s.residual.to_string();
        }
        reps.push_back(std::move(r));
      }
      return reps;
    });
  }
  return out;
}

std::vector<Task> su11_tasks(const TauFamily& fam, int N) {
  std::vector<Task> out;
  const std::vector<Su11Params> params = random_su11_params(kSu11Draws, kSu11Seed);
  for (std::size_t k = 0; k < params.size(); ++k) {
    const Su11Params p = params[k];
    auto tf_ptr = std::make_shared<const TauFamily>(su11_family(fam, p));
    for (int n = 1; n <= N; ++n) {
      out.emplace_back([tf_ptr, p, n] {
        const TauFamily& tf = *tf_ptr;
        std::vector<CheckReport> reps{check_toda(tf, n, TodaWhich::g), check_toda(tf, n, TodaWhich::f),
                                      check_mixed(tf, n)};
        for (CheckReport& r : check_conjecture(tf, n)) reps.push_back(std::move(r));
        const std::string note = "alpha=" + p.alpha.to_string() + " beta=" + p.beta.to_string();
        for (CheckReport& r : reps) {
          r.equation_id = "su11." + r.equation_id;
          r.note = note;
        }
        return reps;
      });
    }
  }
  return out;
}

std::vector<CheckReport> run_task(const SuiteTask& task) {
  try {
    return task.run();
  } catch (const std::exception& e) {
    CheckReport r;
    r.equation_id = task.suite + ".error";
    r.status = CheckStatus::fail;
    r.note = e.what();
    return {std::move(r)};
  }
}

bool has_hard_failure(const std::vector<CheckReport>& reps) {
  return std::any_of(reps.begin(), reps.end(), [](const CheckReport& r) { return !r.passed() && !r.informational; });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"toda",        "mixed",       "jacobi",      "conjecture",
                                                 "symmetries",  "closedforms", "weyl",        "orderwise-A",
                                                 "orderwise-B", "ernst-numeric", "su11"};
  return names;
}

bool is_known_suite(const std::string& name) {
  const auto& names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
  for (const auto& r : requested) {
    if (!is_known_suite(r)) throw std::invalid_argument("unknown suite: " + r);
  }
  const bool all = requested.empty() || std::find(requested.begin(), requested.end(), "all") != requested.end();
  std::vector<std::string> out;
  for (const auto& name : suite_names()) {
    if (all || std::find(requested.begin(), requested.end(), name) != requested.end()) out.push_back(name);
  }
  return out;
}

int required_family_size(int n_max) { return n_max + 1; }

std::vector<SuiteTask> suite_tasks(const std::string& suite, const TauFamily& fam, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (fam.n_max < required_family_size(n_max)) throw std::invalid_argument("tau family too short for n_max");
  std::vector<Task> tasks;
  if (suite == "toda") {
    tasks = toda_tasks(fam, n_max);
  } else if (suite == "mixed") {
    tasks = mixed_tasks(fam, n_max);
  } else if (suite == "jacobi") {
    tasks = jacobi_tasks(fam, n_max);
  } else if (suite == "conjecture") {
    tasks = conjecture_tasks(fam, n_max);
  } else if (suite == "symmetries") {
    tasks = symmetry_tasks(fam, n_max);
  } else if (suite == "closedforms") {
    tasks = closedform_tasks(fam, n_max);
  } else if (suite == "weyl") {
    tasks = weyl_tasks(n_max);
  } else if (suite == "orderwise-A") {
    tasks = orderwise_a_tasks(fam, n_max);
  } else if (suite == "orderwise-B") {
    tasks = orderwise_b_tasks(fam, n_max);
  } else if (suite == "ernst-numeric") {
    tasks = ernst_tasks(fam, n_max);
  } else if (suite == "su11") {
    tasks = su11_tasks(fam, n_max);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  std::vector<SuiteTask> out;
  out.reserve(tasks.size());
  for (auto& t : tasks) out.push_back({suite, std::move(t)});
  return out;
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    const int ia = a.order_index.value_or(-1);
    const int ib = b.order_index.value_or(-1);
    return std::tie(a.equation_id, a.n, ia) < std::tie(b.equation_id, b.n, ib);
  });
}

std::vector<CheckReport> run_suites(const std::vector<std::string>& suites, const TauFamily& fam, int n_max,
                                    const RunOptions& options) {
  std::vector<SuiteTask> tasks;
  for (const auto& s : suites) {
    for (auto& t : suite_tasks(s, fam, n_max)) tasks.push_back(std::move(t));
  }
  std::vector<CheckReport> out;
  if (options.fail_fast) {
    for (const auto& t : tasks) {
      std::vector<CheckReport> reps = run_task(t);
      const bool stop = has_hard_failure(reps);
      for (auto& r : reps) out.push_back(std::move(r));
      if (stop) break;
    }
  } else {
    std::vector<std::vector<CheckReport>> results(tasks.size());
    const int workers = std::max(1, options.workers);
    const auto count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long k = 0; k < count; ++k) results[static_cast<std::size_t>(k)] = run_task(tasks[static_cast<std::size_t>(k)]);
    for (auto& reps : results) {
      for (auto& r : reps) out.push_back(std::move(r));
    }
  }
  sort_reports(out);
  return out;
}

}  // namespace hv
