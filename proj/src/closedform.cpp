#include "hv/closedform.hpp"

#include "hv/operators.hpp"
#include "hv/wronskian.hpp"

#include <stdexcept>
#include <string>

namespace hv {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

mpz_class factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Gamma(k + 1/2) / sqrt(pi) = (2k)! / (4^k k!)
mpq_class half_gamma(int k) {
  mpz_class four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
  mpq_class r(factorial(2 * k), four_k * factorial(k));
  r.canonicalize();
  return r;
}

LaurentPoly constant(const mpq_class& c) { return LaurentPoly(GaussianRational(c)); }

// u^a v^b in the u,v representation (x slot = u, y slot = v).
LaurentPoly uv_monomial(const mpq_class& c, int a, int b) { return LaurentPoly::term(GaussianRational(c), {0, a, b}); }

LaurentPoly to_xy_checked(const LaurentPoly& uv, const char* name) {
  if (uv.has_negative_xy()) {
    throw std::domain_error(std::string(name) + ": negative u/v exponent survives (" + uv.leading_term_text() + ")");
  }
  return basis_uv(uv, UvDirection::from_uv);
}

mpq_class g_extreme_coeff(int n) {
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n * (n - 1)));
  return mpq_class(two_pow) * A_coeff(n);
}

// sum_{m,l} (-1)^(l-m) R(m,l,n) u^(2l) v^(-2m-1), with the u,v roles swapped when `mirror`.
LaurentPoly gamma_sum_uv(int n, bool mirror) {
  std::vector<LaurentPoly::Term> terms;
  for (int m = 0; m <= n - 1; ++m) {
    for (int l = 0; l <= m; ++l) {
      mpq_class c = half_gamma_ratio(m, l, n);
      if ((l - m) % 2 != 0) c = -c;
      Monomial mono = mirror ? Monomial{0, -2 * m - 1, 2 * l} : Monomial{0, 2 * l, -2 * m - 1};
      terms.emplace_back(mono, GaussianRational(c));
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly W_recursive(int n) {
  require(n >= 1, "W_recursive: n must be >= 1");
  LaurentPoly w = LaurentPoly::x();
  for (int k = 1; k < n; ++k) w = apply_L(DiffOp::L_X, w);
  return w;
}

LaurentPoly W_formula(int n) {
  require(n >= 2, "W_formula: n must be >= 2");
  const LaurentPoly xp1 = LaurentPoly::x() + LaurentPoly(1);
  const LaurentPoly xm1 = LaurentPoly::x() - LaurentPoly(1);
  LaurentPoly sum;
  for (int m = 0; m <= n - 2; ++m) {
    mpz_class inner = 0;
    for (int l = 0; l <= m; ++l) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m - l + 1), static_cast<unsigned long>(n - 1));
      mpz_class term = p * binomial(n, l);
      if (l % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    if (inner == 0) continue;
    sum += constant(mpq_class(inner)) * (xp1.pow(static_cast<unsigned>(m + 1)) * xm1.pow(static_cast<unsigned>(n - m - 1)));
  }
  return sum;
}

mpq_class A_coeff(int n) {
  require(n >= 1, "A_coeff: n must be >= 1");
  mpz_class prod = 1;
  for (int j = 1; j <= n; ++j) prod *= factorial(j - 1);
  return mpq_class(prod * prod);
}

LaurentPoly g_q0_closed(int n) {
  require(n >= 1, "g_q0_closed: n must be >= 1");
  const LaurentPoly x2m1 = LaurentPoly::x() * LaurentPoly::x() - LaurentPoly(1);
  const LaurentPoly xp1 = LaurentPoly::x() + LaurentPoly(1);
  const LaurentPoly xm1 = LaurentPoly::x() - LaurentPoly(1);
  const auto un = static_cast<unsigned>(n);
  return constant(A_coeff(n) / 2) * x2m1.pow(un * (un - 1) / 2) * (xp1.pow(un) + xm1.pow(un));
}

LaurentPoly f_q0_closed(int n) {
  require(n >= 1, "f_q0_closed: n must be >= 1");
  const LaurentPoly x2m1 = LaurentPoly::x() * LaurentPoly::x() - LaurentPoly(1);
  const LaurentPoly xp1 = LaurentPoly::x() + LaurentPoly(1);
  const LaurentPoly xm1 = LaurentPoly::x() - LaurentPoly(1);
  const auto un = static_cast<unsigned>(n);
  return constant(A_coeff(n) / 2) * x2m1.pow(un * (un - 1) / 2) * (xp1.pow(un) - xm1.pow(un));
}

LaurentPoly g_q0_wronskian(int n) {
  require(n >= 1, "g_q0_wronskian: n must be >= 1");
  const auto dim = static_cast<std::size_t>(n);
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = W_recursive(static_cast<int>(i + j + 1));
  }
  return determinant(m);
}

LaurentPoly f_q0_wronskian(int n) {
  require(n >= 1, "f_q0_wronskian: n must be >= 1");
  const auto dim = static_cast<std::size_t>(n - 1);
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = W_recursive(static_cast<int>(i + j + 3));
  }
  return determinant(m);
}

mpq_class half_gamma_ratio(int m, int l, int n) {
  require(0 <= l && l <= m && m <= n - 1, "half_gamma_ratio: need 0 <= l <= m <= n-1");
  mpq_class num = half_gamma(m) * half_gamma(n - l);
  mpq_class den = half_gamma(m - l + 1) * mpq_class(factorial(l) * factorial(m - l) * factorial(n - m - 1));
  return num / den;
}

LaurentPoly g_high(int n) {
  require(n >= 1, "g_high: n must be >= 1");
  return basis_uv(uv_monomial(g_extreme_coeff(n), n * (n - 1) / 2, n * (n + 1) / 2), UvDirection::from_uv);
}

LaurentPoly g_low(int n) {
  require(n >= 1, "g_low: n must be >= 1");
  return basis_uv(uv_monomial(g_extreme_coeff(n), n * (n + 1) / 2, n * (n - 1) / 2), UvDirection::from_uv);
}

LaurentPoly f_high(int n) {
  require(n >= 1, "f_high: n must be >= 1");
  LaurentPoly g_uv = uv_monomial(g_extreme_coeff(n), n * (n - 1) / 2, n * (n + 1) / 2);
  return to_xy_checked(g_uv * gamma_sum_uv(n, false), "f_high");
}

LaurentPoly f_low(int n) {
  require(n >= 1, "f_low: n must be >= 1");
  LaurentPoly g_uv = uv_monomial(g_extreme_coeff(n), n * (n + 1) / 2, n * (n - 1) / 2);
  return to_xy_checked(g_uv * gamma_sum_uv(n, true), "f_low");
}

ClosedFormTable closed_form_table(int n_max) {
  require(n_max >= 1, "closed_form_table: n_max must be >= 1");
  ClosedFormTable t;
  t.W.emplace_back();
  for (int k = 1; k <= 2 * n_max - 1; ++k) t.W.push_back(W_recursive(k));
  t.A.emplace_back(0);
  t.g_q0.emplace_back();
  t.f_q0.emplace_back();
  t.g_high.emplace_back(1);
  t.g_low.emplace_back(1);
  t.f_high.emplace_back();
  t.f_low.emplace_back();
  for (int n = 1; n <= n_max; ++n) {
    t.A.push_back(A_coeff(n));
    t.g_q0.push_back(g_q0_closed(n));
    t.f_q0.push_back(f_q0_closed(n));
    t.g_high.push_back(g_high(n));
    t.g_low.push_back(g_low(n));
    t.f_high.push_back(f_high(n));
    t.f_low.push_back(f_low(n));
  }
  return t;
}

}  // namespace hv
