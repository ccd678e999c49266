#include "hv/verifier.hpp"

#include "hv/closedform.hpp"
#include "hv/operators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace hv {

namespace {

const std::vector<LaurentPoly>& pick(const TauFamily& fam, TodaWhich which) {
  switch (which) {
    case TodaWhich::tau: return fam.tau;
    case TodaWhich::g: return fam.g;
    case TodaWhich::f: return fam.f;
  }
  throw std::logic_error("unknown TodaWhich");
}

const char* toda_id(TodaWhich which) {
  switch (which) {
    case TodaWhich::tau: return "toda.tau";
    case TodaWhich::g: return "toda.g";
    case TodaWhich::f: return "toda.f";
  }
  return "toda";
}

void require_range(const TauFamily& fam, int n, int top, const char* what) {
  if (n < 1 || top > fam.n_max) {
    throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) + " outside family range n_max=" +
                                std::to_string(fam.n_max));
  }
}

// (-i)^k
GaussianRational minus_i_pow(long k) { return (-GaussianRational::i()).pow(k); }

// Sum over m of t^m (coeff(p, -m) - coeff(p, m)|_{y -> -y}).
LaurentPoly mirror_defect(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const auto [lo, hi] = p.exponent_range(Var::t);
  LaurentPoly out;
  for (int m = std::min(lo, -hi); m <= std::max(hi, -lo); ++m) {
    LaurentPoly d = coeff_of_t(p, -m) - substitute(coeff_of_t(p, m), Substitution::y_negate);
    out += times_t_power(d, m);
  }
  return out;
}

// Terms of p whose t-exponent has the wrong parity or lies outside [-bound, bound].
LaurentPoly parity_defect(const LaurentPoly& p, int bound) {
  std::vector<LaurentPoly::Term> bad;
  for (const auto& [mono, c] : p.terms()) {
    const int e = mono.et;
    if (e > bound || e < -bound || ((e - bound) % 2 != 0)) bad.emplace_back(mono, c);
  }
  return LaurentPoly::from_terms(std::move(bad));
}

CheckReport diff_report(std::string id, int n, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  return residual_report(std::move(id), n, std::nullopt, lhs - rhs, lhs.size() + rhs.size());
}

GaussianRational small_gaussian(std::mt19937& rng) {
  auto num = [&] { return static_cast<long>(rng() % 11) - 5; };
  auto den = [&] { return static_cast<long>(rng() % 4) + 1; };
  const long a = num(), b = den(), c = num(), d = den();
  return GaussianRational::ratio(a, b, c, d);
}

LaurentPoly random_x_poly(std::mt19937& rng, int max_degree) {
  std::vector<LaurentPoly::Term> terms;
  const int degree = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  for (int k = 0; k <= degree; ++k) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 5) + 1;
    terms.emplace_back(Monomial{0, k, 0}, GaussianRational::ratio(num, den));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly star(const LaurentPoly& p) {
  return substitute(substitute(p, Substitution::t_inverse), Substitution::conjugate);
}

LaurentPoly toda_residual(const TauFamily& fam, int n, TodaWhich which) {
  require_range(fam, n, n + 1, "toda_residual");
  const auto& a = pick(fam, which);
  return hirota_DST(a[n], a[n]) - LaurentPoly(2) * a[n + 1] * a[n - 1];
}

CheckReport check_toda(const TauFamily& fam, int n, TodaWhich which) {
  return timed([&] {
    require_range(fam, n, n + 1, "check_toda");
    const auto& a = pick(fam, which);
    LaurentPoly lhs = hirota_DST(a[n], a[n]);
    LaurentPoly rhs = LaurentPoly(2) * a[n + 1] * a[n - 1];
    return diff_report(toda_id(which), n, lhs, rhs);
  });
}

LaurentPoly mixed_residual(const TauFamily& fam, int n) {
  require_range(fam, n, n + 1, "mixed_residual");
  return hirota_DST(fam.f[n], fam.g[n]) - fam.f[n + 1] * fam.g[n - 1] - fam.f[n - 1] * fam.g[n + 1];
}

CheckReport check_mixed(const TauFamily& fam, int n) {
  return timed([&] {
    require_range(fam, n, n + 1, "check_mixed");
    LaurentPoly lhs = hirota_DST(fam.f[n], fam.g[n]);
    LaurentPoly rhs = fam.f[n + 1] * fam.g[n - 1] + fam.f[n - 1] * fam.g[n + 1];
    return diff_report("mixed", n, lhs, rhs);
  });
}

LaurentPoly conjecture_residual(const TauFamily& fam, int n, NakamuraEq eq) {
  require_range(fam, n, n, "conjecture_residual");
  const LaurentPoly& g = fam.g[n];
  const LaurentPoly& f = fam.f[n];
  const LaurentPoly gs = star(g);
  const LaurentPoly fs = star(f);
  const FOperator F(n);
  switch (eq) {
    case NakamuraEq::B1: return hirota_D(HirotaVar::x, g, f, 1) - hirota_D(HirotaVar::x, gs, fs, 1);
    case NakamuraEq::B2: return hirota_D(HirotaVar::y, g, f, 1) + hirota_D(HirotaVar::y, gs, fs, 1);
    case NakamuraEq::B3: return apply_F(F, gs, f);
    case NakamuraEq::B4: return apply_F(F, gs, g) + apply_F(F, fs, f);
  }
  throw std::logic_error("unknown NakamuraEq");
}

std::vector<CheckReport> check_conjecture(const TauFamily& fam, int n) {
  require_range(fam, n, n, "check_conjecture");
  std::vector<CheckReport> out;
  const NakamuraEq eqs[] = {NakamuraEq::B1, NakamuraEq::B2, NakamuraEq::B3, NakamuraEq::B4};
  for (int k = 0; k < 4; ++k) {
    out.push_back(timed([&] {
      LaurentPoly r = conjecture_residual(fam, n, eqs[k]);
      return residual_report("tsdec" + std::to_string(k + 1), n, std::nullopt, r,
                             fam.g[n].size() + fam.f[n].size());
    }));
  }
  return out;
}

std::vector<CheckReport> check_symmetries(const TauFamily& fam, int n) {
  require_range(fam, n, n, "check_symmetries");
  std::vector<CheckReport> out;
  const long n2 = static_cast<long>(n) * n;
  struct Item {
    const char* name;
    const LaurentPoly* p;
    long sign3;        // g(-t) = sign3 g
    long i_power;      // prop4 exponent of (-i)
    int bound;         // max |t-exponent|
  };
  const Item items[] = {
      {"g", &fam.g[n], (n % 2 == 0) ? 1 : -1, n2, n},
      {"f", &fam.f[n], (n % 2 == 0) ? -1 : 1, n2 - 1, n - 1},
  };
  for (const auto& it : items) {
    const LaurentPoly& p = *it.p;
    const std::string suffix = std::string(".") + it.name;
    const std::size_t tc = p.size();
    auto add = [&](const std::string& id, auto&& residual_fn) {
      out.push_back(timed([&] { return residual_report(id + suffix, n, std::nullopt, residual_fn(), 2 * tc); }));
    };
    add("prop1", [&] { return star(p) - substitute(p, Substitution::t_inverse); });
    add("prop2", [&] { return star(p) - substitute(p, Substitution::y_negate); });
    add("prop3", [&] { return substitute(p, Substitution::t_negate) - LaurentPoly(it.sign3) * p; });
    add("prop4", [&] {
      return substitute(p, Substitution::t_times_i) -
             LaurentPoly(minus_i_pow(it.i_power)) * substitute(p, Substitution::swap_xy);
    });
    add("mirror41", [&] { return mirror_defect(p); });
    add("parity", [&] { return parity_defect(p, it.bound); });
  }
  // Printed variant of the f rotation: f(y,x;it) = (-i)^{n^2-1} f(y,x;t).
  out.push_back(timed([&] {
    const LaurentPoly swapped = substitute(fam.f[n], Substitution::swap_xy);
    LaurentPoly r = substitute(swapped, Substitution::t_times_i) - LaurentPoly(minus_i_pow(n2 - 1)) * swapped;
    CheckReport rep = residual_report("prop4-printed.f", n, std::nullopt, r, 2 * fam.f[n].size());
    rep.informational = true;
    rep.note = "printed variant with the swap applied on both sides";
    return rep;
  }));
  return out;
}

std::pair<LaurentPoly, LaurentPoly> su11_transform(const TauFamily& fam, int n, const Su11Params& p) {
  if (!p.admissible()) throw std::invalid_argument("su11_transform: |alpha|^2 == |beta|^2");
  require_range(fam, n, n, "su11_transform");
  LaurentPoly g = LaurentPoly(p.alpha) * fam.g[n] + LaurentPoly(p.beta.conj()) * fam.f[n];
  LaurentPoly f = LaurentPoly(p.beta) * fam.g[n] + LaurentPoly(p.alpha.conj()) * fam.f[n];
  return {std::move(g), std::move(f)};
}

TauFamily su11_family(const TauFamily& fam, const Su11Params& p) {
  if (!p.admissible()) throw std::invalid_argument("su11_family: |alpha|^2 == |beta|^2");
  TauFamily out;
  out.n_max = fam.n_max;
  out.seed = fam.seed;
  for (int k = 0; k <= fam.n_max; ++k) {
    LaurentPoly g = LaurentPoly(p.alpha) * fam.g[k] + LaurentPoly(p.beta.conj()) * fam.f[k];
    LaurentPoly f = LaurentPoly(p.beta) * fam.g[k] + LaurentPoly(p.alpha.conj()) * fam.f[k];
    out.tau.push_back(g);
    out.g.push_back(std::move(g));
    out.f.push_back(std::move(f));
  }
  return out;
}

std::vector<Su11Params> random_su11_params(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Su11Params> out;
  while (out.size() < count) {
    Su11Params p{small_gaussian(rng), small_gaussian(rng)};
    if (p.admissible()) out.push_back(p);
  }
  return out;
}

std::vector<CheckReport> check_highest_toda_closed(int n) {
  if (n < 1) throw std::invalid_argument("check_highest_toda_closed: n must be >= 1");
  auto gh = [](int k) { return k == 0 ? LaurentPoly(1) : g_high(k); };
  auto fh = [](int k) { return k == 0 ? LaurentPoly() : f_high(k); };
  std::vector<CheckReport> out;
  out.push_back(timed([&] {
    return diff_report("hToda.g", n, hirota_DST(gh(n), gh(n)), LaurentPoly(2) * gh(n + 1) * gh(n - 1));
  }));
  out.push_back(timed([&] {
    return diff_report("hToda.f", n, hirota_DST(fh(n), fh(n)), LaurentPoly(2) * fh(n + 1) * fh(n - 1));
  }));
  out.push_back(timed([&] {
    LaurentPoly rhs = fh(n + 1) * gh(n - 1) + fh(n - 1) * gh(n + 1);
    return diff_report("hToda.mixed", n, hirota_DST(fh(n), gh(n)), rhs);
  }));
  // As printed, the second partner is the t^{n-1} coefficient of f_{n-2}, which is
  // identically zero (f_{n-2} has t-degree n-3).
  out.push_back(timed([&] {
    LaurentPoly rhs = fh(n + 1) * gh(n - 1);
    CheckReport r = diff_report("hToda.mixed-printed", n, hirota_DST(fh(n), gh(n)), rhs);
    r.informational = true;
    r.note = "printed partner coefficient vanishes identically";
    return r;
  }));
  return out;
}

std::vector<CheckReport> check_weyl_q0(int n) {
  if (n < 1) throw std::invalid_argument("check_weyl_q0: n must be >= 1");
  const LaurentPoly g = g_q0_closed(n), f = f_q0_closed(n);
  const std::size_t tc = g.size() + f.size();
  std::vector<CheckReport> out;
  out.push_back(timed([&] { return residual_report("weyl.tsdec3", n, std::nullopt, apply_F_weyl(n, g, f), tc); }));
  out.push_back(timed([&] {
    return residual_report("weyl.tsdec4", n, std::nullopt, apply_F_weyl(n, g, g) + apply_F_weyl(n, f, f), tc);
  }));
  out.push_back(timed([&] {
    const LaurentPoly prev = n == 1 ? LaurentPoly(1) : g_q0_closed(n - 1);
    const LaurentPoly gx = apply_L(DiffOp::L_X, g);
    LaurentPoly rhs = apply_L(DiffOp::L_X, gx) * g - gx * gx;
    return diff_report("q0-jacobi", n, prev * g_q0_closed(n + 1), rhs);
  }));
  return out;
}

std::vector<CheckReport> check_weyl_lock(std::size_t samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<CheckReport> out;
  for (std::size_t k = 0; k < samples; ++k) {
    const int n = static_cast<int>(rng() % 4) + 1;
    const LaurentPoly a = random_x_poly(rng, 6);
    const LaurentPoly b = random_x_poly(rng, 6);
    out.push_back(timed([&] {
      CheckReport r = diff_report("F-lock", n, apply_F(FOperator(n), a, b), apply_F_weyl(n, a, b));
      r.note = "sample " + std::to_string(k);
      return r;
    }));
  }
  return out;
}

std::vector<CheckReport> check_highest_nakamura_closed(int n) {
  if (n < 1) throw std::invalid_argument("check_highest_nakamura_closed: n must be >= 1");
  const LaurentPoly gh = g_high(n), gl = g_low(n), fh = f_high(n), fl = f_low(n);
  const std::size_t tc = gh.size() + gl.size() + fh.size() + fl.size();
  const FOperator F(n);
  std::vector<CheckReport> out;
  out.push_back(timed([&] {
    return residual_report("hNak1", n, std::nullopt,
                           hirota_D(HirotaVar::x, gh, fh, 1) - hirota_D(HirotaVar::x, gl, fl, 1), tc);
  }));
  out.push_back(timed([&] {
    return residual_report("hNak2", n, std::nullopt,
                           hirota_D(HirotaVar::y, gh, fh, 1) + hirota_D(HirotaVar::y, gl, fl, 1), tc);
  }));
  out.push_back(timed([&] { return residual_report("hNak3", n, std::nullopt, apply_F(F, gl, fh), tc); }));
  out.push_back(timed([&] { return residual_report("hNak4", n, std::nullopt, apply_F(F, gl, gh), tc); }));
  return out;
}

}  // namespace hv
