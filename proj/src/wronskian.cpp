#include "hv/wronskian.hpp"

#include "hv/operators.hpp"
#include "hv/poly_text.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hv {

LaurentPoly build_psi() {
  const GaussianRational half = GaussianRational::ratio(1, 2);
  LaurentPoly v = (LaurentPoly::x() - LaurentPoly::y()) * half;
  LaurentPoly u = (LaurentPoly::x() + LaurentPoly::y()) * half;
  return times_t_power(v, 1) + times_t_power(u, -1);
}

SymMatrix wronskian_matrix(const LaurentPoly& seed, int n) {
  if (n < 1) throw std::invalid_argument("wronskian_matrix: n must be >= 1");
  const auto dim = static_cast<std::size_t>(n);
  SymMatrix m(dim);
  m.at(0, 0) = seed;
  for (std::size_t j = 1; j < dim; ++j) m.at(0, j) = apply_L(DiffOp::L_minus, m.at(0, j - 1));
  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = apply_L(DiffOp::L_plus, m.at(i - 1, j));
  }
  return m;
}

namespace {

LaurentPoly bareiss_divide(const LaurentPoly& num, const LaurentPoly& den) {
  try {
    return exact_divide(num, den);
  } catch (const NonDivisibleError& e) {
    throw std::logic_error(std::string("fraction-free elimination: inexact division (internal error), remainder ") +
                           e.witness());
  }
}

// One Bareiss elimination step on rows/cols > k.
void bareiss_step(std::vector<std::vector<LaurentPoly>>& a, std::size_t k, const LaurentPoly& prev) {
  const std::size_t n = a.size();
  const auto span_len = static_cast<long>(n - k - 1);
  const bool par = span_len * span_len > 1 && !omp_in_parallel();
  const bool unit_prev = prev == LaurentPoly(1);
#pragma omp parallel for collapse(2) schedule(dynamic) if (par)
  for (long ii = 0; ii < span_len; ++ii) {
    for (long jj = 0; jj < span_len; ++jj) {
      const std::size_t i = k + 1 + static_cast<std::size_t>(ii);
      const std::size_t j = k + 1 + static_cast<std::size_t>(jj);
      LaurentPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
      a[i][j] = unit_prev ? std::move(num) : bareiss_divide(num, prev);
    }
  }
}

std::vector<std::vector<LaurentPoly>> rows_of(const SymMatrix& m) {
  std::vector<std::vector<LaurentPoly>> a(m.dim(), std::vector<LaurentPoly>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) a[i][j] = m.at(i, j);
  }
  return a;
}

LaurentPoly det_fraction_free(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return LaurentPoly(1);
  auto a = rows_of(m);
  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    bareiss_step(a, k, prev);
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

LaurentPoly det_cofactor(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return LaurentPoly(1);
  if (n > 20) throw std::invalid_argument("cofactor determinant: dimension too large");
  // level k holds det(rows n-k..n-1, columns in mask) for every mask with k bits.
  std::unordered_map<std::uint32_t, LaurentPoly> below;
  below.emplace(0U, LaurentPoly(1));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == k) masks.push_back(mask);
    }
    std::vector<LaurentPoly> values(masks.size());
    const std::size_t row = n - k;
    const bool par = masks.size() > 1 && !omp_in_parallel();
#pragma omp parallel for schedule(dynamic) if (par)
    for (long idx = 0; idx < static_cast<long>(masks.size()); ++idx) {
      const std::uint32_t mask = masks[static_cast<std::size_t>(idx)];
      LaurentPoly acc;
      int position = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask & (1U << j)) == 0) continue;
        const LaurentPoly& entry = m.at(row, j);
        if (!entry.is_zero()) {
          LaurentPoly term = entry * below.at(mask & ~(1U << j));
          if (position % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
        ++position;
      }
      values[static_cast<std::size_t>(idx)] = std::move(acc);
    }
    std::unordered_map<std::uint32_t, LaurentPoly> level;
    for (std::size_t idx = 0; idx < masks.size(); ++idx) level.emplace(masks[idx], std::move(values[idx]));
    below = std::move(level);
  }
  return below.at((1U << n) - 1U);
}

}  // namespace

LaurentPoly determinant(const SymMatrix& m, DetAlgo algo) {
  return algo == DetAlgo::fraction_free ? det_fraction_free(m) : det_cofactor(m);
}

std::optional<std::vector<LaurentPoly>> leading_principal_minors(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<LaurentPoly> minors;
  if (n == 0) return minors;
  auto a = rows_of(m);
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) return std::nullopt;
    minors.push_back(a[k][k]);
    if (k + 1 < n) bareiss_step(a, k, prev);
    prev = a[k][k];
  }
  return minors;
}

SymMatrix minor_matrix(const SymMatrix& m, std::span<const std::size_t> rows,
                       std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row and column sets differ in size");
  if (rows.size() > m.dim()) throw std::invalid_argument("minor: too many indices");
  auto check = [&m](std::span<const std::size_t> idx) {
    std::vector<bool> seen(m.dim(), false);
    for (std::size_t i : idx) {
      if (i >= m.dim()) throw std::out_of_range("minor: index " + std::to_string(i) + " out of range");
      if (seen[i]) throw std::invalid_argument("minor: repeated index");
      seen[i] = true;
    }
    return seen;
  };
  const auto drop_row = check(rows);
  const auto drop_col = check(cols);
  SymMatrix out(m.dim() - rows.size());
  std::size_t oi = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (drop_row[i]) continue;
    std::size_t oj = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (drop_col[j]) continue;
      out.at(oi, oj++) = m.at(i, j);
    }
    ++oi;
  }
  return out;
}

TauFamily tau_family(int n_max) { return tau_family(n_max, build_psi()); }

TauFamily tau_family(int n_max, const LaurentPoly& seed) {
  if (n_max < 1) throw std::invalid_argument("tau_family: n_max must be >= 1");
  const SymMatrix w = wronskian_matrix(seed, n_max);
  const auto dim = static_cast<std::size_t>(n_max);

  auto minors_of = [](const SymMatrix& m) {
    if (auto lpm = leading_principal_minors(m)) return *lpm;
    std::vector<LaurentPoly> out;
    for (std::size_t k = 1; k <= m.dim(); ++k) {
      std::vector<std::size_t> drop;
      for (std::size_t r = k; r < m.dim(); ++r) drop.push_back(r);
      out.push_back(determinant(minor_matrix(m, drop, drop)));
    }
    return out;
  };

  TauFamily fam;
  fam.n_max = n_max;
  fam.seed = seed;
  fam.tau.push_back(LaurentPoly(1));
  for (auto& p : minors_of(w)) fam.tau.push_back(std::move(p));
  fam.g = fam.tau;

  fam.f.push_back(LaurentPoly());
  fam.f.push_back(LaurentPoly(1));
  if (dim > 1) {
    const std::size_t first[] = {0};
    const SymMatrix shifted = minor_matrix(w, first, first);
    for (auto& p : minors_of(shifted)) fam.f.push_back(std::move(p));
  }
  return fam;
}

CheckReport jacobi_identity_check(int n) { return jacobi_identity_check(n, build_psi()); }

CheckReport jacobi_identity_check(int n, const LaurentPoly& seed) {
  return timed([&] {
    if (n < 1) throw std::invalid_argument("jacobi_identity_check: n must be >= 1");
    const SymMatrix d = wronskian_matrix(seed, n + 1);
    const auto a = static_cast<std::size_t>(n - 1);  // row n, 1-based
    const auto b = static_cast<std::size_t>(n);      // row n+1, 1-based
    auto det_without = [&d](std::initializer_list<std::size_t> rows, std::initializer_list<std::size_t> cols) {
      return determinant(minor_matrix(d, std::span(rows.begin(), rows.size()), std::span(cols.begin(), cols.size())));
    };
    LaurentPoly lhs = det_without({a}, {a}) * det_without({b}, {b});
    LaurentPoly cross = det_without({b}, {a}) * det_without({a}, {b});
    LaurentPoly full = determinant(d) * det_without({a, b}, {a, b});
    LaurentPoly residual = lhs - cross - full;
    return residual_report("jacobi", n, std::nullopt, residual, lhs.size() + cross.size() + full.size());
  });
}

void write_cache(const TauFamily& fam, std::ostream& os) {
  os << "# hv-tau-cache v1 n_max=" << fam.n_max << '\n';
  for (int k = 0; k <= fam.n_max; ++k) {
    const auto i = static_cast<std::size_t>(k);
    os << "tau n=" << k << '\n' << serialize(fam.tau[i]) << '\n';
    os << "g n=" << k << '\n' << serialize(fam.g[i]) << '\n';
    os << "f n=" << k << '\n' << serialize(fam.f[i]) << '\n';
  }
}

TauFamily read_cache(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("tau cache: empty file");
  const std::string prefix = "# hv-tau-cache v1 n_max=";
  if (line.rfind(prefix, 0) != 0) throw std::runtime_error("tau cache: bad header");
  TauFamily fam;
  fam.n_max = std::stoi(line.substr(prefix.size()));
  if (fam.n_max < 1) throw std::runtime_error("tau cache: bad n_max");
  const auto count = static_cast<std::size_t>(fam.n_max + 1);
  fam.tau.resize(count);
  fam.g.resize(count);
  fam.f.resize(count);
  std::vector<int> seen(count * 3, 0);
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream header(line);
    std::string key;
    std::string nfield;
    header >> key >> nfield;
    if (nfield.rfind("n=", 0) != 0) throw std::runtime_error("tau cache: bad record header at line " + std::to_string(line_no));
    const int k = std::stoi(nfield.substr(2));
    if (k < 0 || k > fam.n_max) throw std::runtime_error("tau cache: index out of range at line " + std::to_string(line_no));
    std::string body;
    if (!std::getline(is, body)) throw std::runtime_error("tau cache: missing polynomial line");
    ++line_no;
    const auto i = static_cast<std::size_t>(k);
    std::size_t slot = 0;
    if (key == "tau") {
      fam.tau[i] = parse(body);
    } else if (key == "g") {
      fam.g[i] = parse(body);
      slot = 1;
    } else if (key == "f") {
      fam.f[i] = parse(body);
      slot = 2;
    } else {
      throw std::runtime_error("tau cache: unknown key '" + key + "'");
    }
    seen[i * 3 + slot] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw std::runtime_error("tau cache: incomplete family");
  fam.seed = fam.tau.size() > 1 ? fam.tau[1] : LaurentPoly();
  return fam;
}

}  // namespace hv
