#pragma once

#include "hv/laurent_poly.hpp"

#include <gmpxx.h>

#include <vector>

namespace hv {

/// W_1 = x, W_{k+1} = (x^2-1) dW_k/dx. Requires n >= 1.
LaurentPoly W_recursive(int n);

/// Binomial double-sum form of W_n, n >= 2:
///   sum_m [sum_l (-1)^l (m-l+1)^(n-1) C(n,l)] (x+1)^(m+1) (x-1)^(n-m-1).
LaurentPoly W_formula(int n);

/// A_n = (prod_{j=1}^{n} (j-1)!)^2.
mpq_class A_coeff(int n);

/// Closed forms of the non-rotating (q = 0) solutions:
///   (A_n/2) (x^2-1)^(n(n-1)/2) ((x+1)^n +/- (x-1)^n).
LaurentPoly g_q0_closed(int n);
LaurentPoly f_q0_closed(int n);

/// The same objects as Hankel determinants of W's: det[W_{i+j+1}] (n x n) and
/// det[W_{i+j+3}] ((n-1) x (n-1)).
LaurentPoly g_q0_wronskian(int n);
LaurentPoly f_q0_wronskian(int n);

/// Gamma((2m+1)/2) Gamma((2(n-l)+1)/2) / (sqrt(pi) Gamma((2(m-l)+3)/2) l! (m-l)! (n-m-1)!),
/// evaluated exactly through Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!).
/// Requires 0 <= l <= m <= n-1.
mpq_class half_gamma_ratio(int m, int l, int n);

/// Highest and lowest t-coefficients of g_n and f_n, returned in the x,y basis.
///   g_high = 2^(n(n-1)) A_n u^(n(n-1)/2) v^(n(n+1)/2), g_low swaps the u,v exponents;
///   f_high = g_high * sum_{m,l} (-1)^(l-m) half_gamma_ratio(m,l,n) u^(2l) v^(-2m-1),
///   f_low  = g_low  * sum_{m,l} (-1)^(l-m) half_gamma_ratio(m,l,n) u^(-2m-1) v^(2l).
/// f_high/f_low throw std::domain_error if a negative power of u or v survives.
LaurentPoly g_high(int n);
LaurentPoly g_low(int n);
LaurentPoly f_high(int n);
LaurentPoly f_low(int n);

struct ClosedFormTable {
  std::vector<LaurentPoly> W;  // W[k] = W_k, index 0 unused
  std::vector<mpq_class> A;    // A[k] = A_k, index 0 unused
  std::vector<LaurentPoly> g_q0, f_q0;
  std::vector<LaurentPoly> g_high, g_low, f_high, f_low;
};

/// Table for n = 1..n_max (W up to 2 n_max - 1).
ClosedFormTable closed_form_table(int n_max);

}  // namespace hv
