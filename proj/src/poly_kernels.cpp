#include "hv/laurent_poly.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

namespace hv::kernel {

namespace {

// Dense (x, y) accumulators beyond this many cells fall back to the reference kernel.
constexpr std::size_t kDenseCellLimit = std::size_t{1} << 22;

struct Slab {
  int et;
  std::size_t begin;
  std::size_t end;
};

std::vector<Slab> slabs_of(std::span<const LaurentPoly::Term> terms) {
  std::vector<Slab> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j].first.et == terms[i].first.et) ++j;
    out.push_back({terms[i].first.et, i, j});
    i = j;
  }
  return out;
}

}  // namespace

LaurentPoly mul_reference(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Monomial, GaussianRational, CanonicalBefore> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) acc[ma * mb] += ca * cb;
  }
  std::vector<LaurentPoly::Term> out;
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  }
  return LaurentPoly::from_canonical(std::move(out));
}

LaurentPoly mul_slab(const LaurentPoly& a, const LaurentPoly& b, bool parallel) {
  if (a.is_zero() || b.is_zero()) return {};
  auto [ax_lo, ax_hi] = a.exponent_range(Var::x);
  auto [bx_lo, bx_hi] = b.exponent_range(Var::x);
  auto [ay_lo, ay_hi] = a.exponent_range(Var::y);
  auto [by_lo, by_hi] = b.exponent_range(Var::y);
  const int x_lo = ax_lo + bx_lo;
  const int y_lo = ay_lo + by_lo;
  const auto nx = static_cast<std::size_t>(ax_hi + bx_hi - x_lo + 1);
  const auto ny = static_cast<std::size_t>(ay_hi + by_hi - y_lo + 1);
  const std::size_t cells = nx * ny;
  if (cells > kDenseCellLimit) return mul_reference(a, b);

  const auto a_slabs = slabs_of(a.terms());
  const auto b_slabs = slabs_of(b.terms());
  const int t_hi = a_slabs.front().et + b_slabs.front().et;
  const int t_lo = a_slabs.back().et + b_slabs.back().et;
  const int n_out = t_hi - t_lo + 1;

  std::vector<std::vector<LaurentPoly::Term>> out(static_cast<std::size_t>(n_out));
  const auto at = a.terms();
  const auto bt = b.terms();

#pragma omp parallel if (parallel)
  {
    std::vector<GaussianRational> acc(cells);
    std::vector<char> touched(cells, 0);
    std::vector<std::size_t> touched_list;

#pragma omp for schedule(dynamic, 1)
    for (int s = 0; s < n_out; ++s) {
      const int t_out = t_hi - s;
      for (const Slab& sa : a_slabs) {
        const int want = t_out - sa.et;
        auto sb = std::find_if(b_slabs.begin(), b_slabs.end(), [want](const Slab& x) { return x.et == want; });
        if (sb == b_slabs.end()) continue;
        for (std::size_t i = sa.begin; i < sa.end; ++i) {
          const auto& [ma, ca] = at[i];
          for (std::size_t j = sb->begin; j < sb->end; ++j) {
            const auto& [mb, cb] = bt[j];
            const std::size_t idx = static_cast<std::size_t>(ma.ex + mb.ex - x_lo) * ny +
                                    static_cast<std::size_t>(ma.ey + mb.ey - y_lo);
            acc[idx].add_product(ca, cb);
            if (touched[idx] == 0) {
              touched[idx] = 1;
              touched_list.push_back(idx);
            }
          }
        }
      }
      auto& slab_out = out[static_cast<std::size_t>(s)];
      for (std::size_t idx : touched_list) {
        if (!acc[idx].is_zero()) {
          const int ex = static_cast<int>(idx / ny) + x_lo;
          const int ey = static_cast<int>(idx % ny) + y_lo;
          slab_out.emplace_back(Monomial{t_out, ex, ey}, std::move(acc[idx]));
          acc[idx] = GaussianRational();
        }
        touched[idx] = 0;
      }
      touched_list.clear();
      std::sort(slab_out.begin(), slab_out.end(),
                [](const auto& l, const auto& r) { return CanonicalBefore{}(l.first, r.first); });
    }
  }

  std::size_t total = 0;
  for (const auto& s : out) total += s.size();
  std::vector<LaurentPoly::Term> merged;
  merged.reserve(total);
  for (auto& s : out) std::move(s.begin(), s.end(), std::back_inserter(merged));
  return LaurentPoly::from_canonical(std::move(merged));
}

}  // namespace hv::kernel
