#pragma once

#include "hv/laurent_poly.hpp"

namespace hv {

/// Differential operators in prolate spheroidal coordinates.
/// L_X = (x^2-1) d/dx, L_Y = (y^2-1) d/dy, L_plus = L_X + L_Y, L_minus = L_X - L_Y.
/// L_plus and L_minus act as d/dS and d/dT of the light-cone coordinates.
enum class DiffOp { L_plus, L_minus, L_X, L_Y, d_x, d_y };

LaurentPoly apply_L(DiffOp op, const LaurentPoly& p);

/// Variables a Hirota derivative can be taken in. S and T go through L_plus, L_minus.
enum class HirotaVar { x, y, S, T };

/// Order-1 or order-2 Hirota derivative D^k(f . g).
LaurentPoly hirota_D(HirotaVar var, const LaurentPoly& f, const LaurentPoly& g, int order);

/// Mixed D_S D_T(f . g) = (L+L- f)g - (L+ f)(L- g) - (L- f)(L+ g) + f(L+L- g).
LaurentPoly hirota_DST(const LaurentPoly& f, const LaurentPoly& g);

/// The bilinear operator of the Tomimatsu-Sato decomposition at deformation n:
///   F(a.b) = (x^2-1) D_x^2(a.b) + 2x d_x(ab) + (y^2-1) D_y^2(a.b) + 2y d_y(ab) + c_n ab
/// with c_n = -2 n^2. The first-order terms act on the ordinary product ab.
class FOperator {
 public:
  explicit FOperator(int n);
  int n() const { return n_; }
  long c_n() const { return c_n_; }

 private:
  int n_;
  long c_n_;
};

LaurentPoly apply_F(const FOperator& fop, const LaurentPoly& a, const LaurentPoly& b);

/// Single-variable form of F for x-only inputs:
///   ((L_X^2 a) b + a (L_X^2 b) - 2 (L_X a)(L_X b)) / (x^2-1) - 2 n^2 ab.
/// Throws NonDivisibleError when the bracket is not divisible by x^2-1.
LaurentPoly apply_F_weyl(int n, const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hv
