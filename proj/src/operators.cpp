#include "hv/operators.hpp"

#include <stdexcept>

namespace hv {

namespace {

const LaurentPoly& x2_minus_1() {
  static const LaurentPoly p = LaurentPoly::x() * LaurentPoly::x() - LaurentPoly(1);
  return p;
}

const LaurentPoly& y2_minus_1() {
  static const LaurentPoly p = LaurentPoly::y() * LaurentPoly::y() - LaurentPoly(1);
  return p;
}

LaurentPoly derive(HirotaVar var, const LaurentPoly& p) {
  switch (var) {
    case HirotaVar::x: return differentiate(p, Var::x);
    case HirotaVar::y: return differentiate(p, Var::y);
    case HirotaVar::S: return apply_L(DiffOp::L_plus, p);
    case HirotaVar::T: return apply_L(DiffOp::L_minus, p);
  }
  throw std::invalid_argument("hirota_D: unknown variable");
}

}  // namespace

LaurentPoly apply_L(DiffOp op, const LaurentPoly& p) {
  switch (op) {
    case DiffOp::d_x: return differentiate(p, Var::x);
    case DiffOp::d_y: return differentiate(p, Var::y);
    case DiffOp::L_X: return x2_minus_1() * differentiate(p, Var::x);
    case DiffOp::L_Y: return y2_minus_1() * differentiate(p, Var::y);
    case DiffOp::L_plus: return apply_L(DiffOp::L_X, p) + apply_L(DiffOp::L_Y, p);
    case DiffOp::L_minus: return apply_L(DiffOp::L_X, p) - apply_L(DiffOp::L_Y, p);
  }
  throw std::invalid_argument("apply_L: unknown operator");
}

LaurentPoly hirota_D(HirotaVar var, const LaurentPoly& f, const LaurentPoly& g, int order) {
  if (order == 1) return derive(var, f) * g - f * derive(var, g);
  if (order == 2) {
    LaurentPoly df = derive(var, f);
    LaurentPoly dg = derive(var, g);
    return derive(var, df) * g - GaussianRational(2) * (df * dg) + f * derive(var, dg);
  }
  throw std::invalid_argument("hirota_D: order must be 1 or 2");
}

LaurentPoly hirota_DST(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly f_s = apply_L(DiffOp::L_plus, f);
  LaurentPoly f_t = apply_L(DiffOp::L_minus, f);
  LaurentPoly f_st = apply_L(DiffOp::L_plus, f_t);
  if (&f == &g) {
    return GaussianRational(2) * (f_st * f - f_s * f_t);
  }
  LaurentPoly g_s = apply_L(DiffOp::L_plus, g);
  LaurentPoly g_t = apply_L(DiffOp::L_minus, g);
  LaurentPoly g_st = apply_L(DiffOp::L_plus, g_t);
  return f_st * g - f_s * g_t - f_t * g_s + f * g_st;
}

FOperator::FOperator(int n) : n_(n), c_n_(-2L * n * n) {
  if (n < 0) throw std::invalid_argument("FOperator: n must be non-negative");
}

LaurentPoly apply_F(const FOperator& fop, const LaurentPoly& a, const LaurentPoly& b) {
  const LaurentPoly ab = a * b;
  LaurentPoly out = x2_minus_1() * hirota_D(HirotaVar::x, a, b, 2);
  out += GaussianRational(2) * (LaurentPoly::x() * differentiate(ab, Var::x));
  out += y2_minus_1() * hirota_D(HirotaVar::y, a, b, 2);
  out += GaussianRational(2) * (LaurentPoly::y() * differentiate(ab, Var::y));
  out += GaussianRational(fop.c_n()) * ab;
  return out;
}

LaurentPoly apply_F_weyl(int n, const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly la = apply_L(DiffOp::L_X, a);
  LaurentPoly lb = apply_L(DiffOp::L_X, b);
  LaurentPoly bracket = apply_L(DiffOp::L_X, la) * b + a * apply_L(DiffOp::L_X, lb) -
                        GaussianRational(2) * (la * lb);
  return exact_divide(bracket, x2_minus_1()) - GaussianRational(2L * n * n) * (a * b);
}

}  // namespace hv
