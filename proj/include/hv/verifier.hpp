#pragma once

#include "hv/check_report.hpp"
#include "hv/laurent_poly.hpp"
#include "hv/wronskian.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hv {

/// Complex conjugation on the |t| = 1 slice: conjugate coefficients and send t -> 1/t.
LaurentPoly star(const LaurentPoly& p);

// ---- Toda and mixed bilinear identities -------------------------------------

enum class TodaWhich { tau, g, f };

/// D_S D_T(a_n . a_n) - 2 a_{n+1} a_{n-1} for a in {tau, g, f}. Needs n+1 <= fam.n_max.
LaurentPoly toda_residual(const TauFamily& fam, int n, TodaWhich which);
CheckReport check_toda(const TauFamily& fam, int n, TodaWhich which);

/// D_S D_T(f_n . g_n) - f_{n+1} g_{n-1} - f_{n-1} g_{n+1}.
LaurentPoly mixed_residual(const TauFamily& fam, int n);
CheckReport check_mixed(const TauFamily& fam, int n);

// ---- The four equations of the decomposition ---------------------------------

/// B1: D_x(g.f - g*.f*), B2: D_y(g.f + g*.f*), B3: F(g*.f), B4: F(g*.g + f*.f),
/// with c_n = -2 n^2.
enum class NakamuraEq { B1, B2, B3, B4 };

LaurentPoly conjecture_residual(const TauFamily& fam, int n, NakamuraEq eq);
/// Four reports, ids tsdec1..tsdec4.
std::vector<CheckReport> check_conjecture(const TauFamily& fam, int n);

// ---- Symmetries of the t-expansion --------------------------------------------

/// prop1..prop4 (prop4 in the form g(x,y;it) = (-i)^{n^2} g(y,x;t),
/// f(x,y;it) = (-i)^{n^2-1} f(y,x;t)), the mirror identities between t^m and t^-m
/// coefficients and the parity/degree structure. Also one informational report for
/// the printed prop4 variant f(y,x;it).
std::vector<CheckReport> check_symmetries(const TauFamily& fam, int n);

// ---- SU(1,1) -------------------------------------------------------------------

struct Su11Params {
  GaussianRational alpha;
  GaussianRational beta;

  /// |alpha|^2 != |beta|^2.
  bool admissible() const { return alpha.norm() != beta.norm(); }
};

/// (g', f') = (alpha g_n + beta* f_n, beta g_n + alpha* f_n). Throws on degenerate params.
std::pair<LaurentPoly, LaurentPoly> su11_transform(const TauFamily& fam, int n, const Su11Params& p);
/// The transform applied at every lattice site, so Toda partners at n +/- 1 use the same combination.
TauFamily su11_family(const TauFamily& fam, const Su11Params& p);
/// Deterministic pseudo-random admissible parameters over small Gaussian rationals.
std::vector<Su11Params> random_su11_params(std::size_t count, unsigned seed);

// ---- Order-by-order systems ------------------------------------------------------

enum class OrderwiseFamily { g, f, mixed };

/// Largest valid order index I (inclusive) for the given family at n.
int orderwise_max_index(OrderwiseFamily family, int n);
int nakamura_max_index(NakamuraEq eq, int n);
/// t-exponent of the order-I equation.
int orderwise_t_exponent(OrderwiseFamily family, int n, int I);
int nakamura_t_exponent(NakamuraEq eq, int n, int I);

/// Residual of the order-I coefficient identity, assembled from t-coefficients
/// of the family exactly as the case split prescribes (mirror cases are the y -> -y
/// image of their partner order). Throws std::invalid_argument on invalid (n, I).
LaurentPoly orderwise_toda_case_residual(const TauFamily& fam, int n, int I, OrderwiseFamily family);
LaurentPoly orderwise_nakamura_case_residual(const TauFamily& fam, int n, int I, NakamuraEq eq);

/// Passes iff the case residual is zero and equals the t-coefficient of the parent residual.
CheckReport check_orderwise_toda(const TauFamily& fam, int n, int I, OrderwiseFamily family);
CheckReport check_orderwise_nakamura(const TauFamily& fam, int n, int I, NakamuraEq eq);

/// sum_I t^{e(I)} * case_residual(I) - parent residual; zero iff the case split
/// reproduces the parent identity term for term (holds for any family with the
/// parity and mirror structure, solution or not).
LaurentPoly orderwise_toda_sum_defect(const TauFamily& fam, int n, OrderwiseFamily family);
LaurentPoly orderwise_nakamura_sum_defect(const TauFamily& fam, int n, NakamuraEq eq);
CheckReport check_orderwise_toda_sum(const TauFamily& fam, int n, OrderwiseFamily family);
CheckReport check_orderwise_nakamura_sum(const TauFamily& fam, int n, NakamuraEq eq);

// ---- Closed-form driven checks ----------------------------------------------------

/// Highest-order Toda equations from the closed forms: ids hToda.g, hToda.f,
/// hToda.mixed, plus the informational hToda.mixed-printed.
std::vector<CheckReport> check_highest_toda_closed(int n);
/// Highest-order conjecture equations hNak1..hNak4 from the closed forms.
std::vector<CheckReport> check_highest_nakamura_closed(int n);

// ---- Non-rotating (x-only) branch -------------------------------------------------

/// weyl.tsdec3 / weyl.tsdec4 on the q = 0 closed forms through apply_F_weyl, and the
/// x-only Jacobi recursion g_{n-1} g_{n+1} = (L_X^2 g_n) g_n - (L_X g_n)^2 (id q0-jacobi).
std::vector<CheckReport> check_weyl_q0(int n);
/// apply_F == apply_F_weyl on `samples` random x-only pairs of degree <= 6 with
/// random n in 1..4 (id F-lock, one report per sample).
std::vector<CheckReport> check_weyl_lock(std::size_t samples, unsigned seed);

// ---- Numeric Ernst spot-check -----------------------------------------------------

struct ErnstPoint {
  GaussianRational x;
  GaussianRational y;
  GaussianRational t;  // must satisfy |t| = 1
};

struct ErnstSample {
  ErnstPoint point;
  bool evaluated = false;
  std::string error;  // set when the point is inadmissible
  GaussianRational residual;
  double magnitude = 0.0;
};

/// Evaluates xi_n = g_n / f_n exactly at each point and the residual of
///   (xi xi* - 1) Lap(xi) - 2 xi* grad(xi).grad(xi)
/// with Lap = d_x((x^2-1) d_x) + d_y((1-y^2) d_y) and
/// grad.grad = (x^2-1) d_x^2 + (1-y^2) d_y^2 (axisymmetric prolate spheroidal form;
/// the common metric factor is dropped).
std::vector<ErnstSample> ernst_residual_numeric(const TauFamily& fam, int n, const std::vector<ErnstPoint>& samples);
std::vector<ErnstPoint> default_ernst_points();

}  // namespace hv
