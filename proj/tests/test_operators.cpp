#include "hv/closedform.hpp"
#include "hv/operators.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace hv;
using namespace hv::testing;

namespace {

LaurentPoly dx(const LaurentPoly& p) { return differentiate(p, Var::x); }
LaurentPoly dy(const LaurentPoly& p) { return differentiate(p, Var::y); }

// Hand-expanded images of psi.
LaurentPoly Lplus_psi() {
  return C(1, 2) * T() * (X() * X() - Y() * Y()) + C(1, 2) * Tinv() * (X() * X() + Y() * Y() - C(2));
}
LaurentPoly Lminus_psi() {
  return C(1, 2) * T() * (X() * X() + Y() * Y() - C(2)) + C(1, 2) * Tinv() * (X() * X() - Y() * Y());
}
LaurentPoly LpLm_psi() {
  const LaurentPoly a = X() * (X() * X() - C(1));
  const LaurentPoly b = Y() * (Y() * Y() - C(1));
  return T() * (a + b) + Tinv() * (a - b);
}

}  // namespace

TEST_CASE("L operators on known inputs") {
  CHECK(apply_L(DiffOp::L_X, X()) == X() * X() - C(1));
  CHECK(apply_L(DiffOp::L_plus, psi_oracle()) == Lplus_psi());
  CHECK(apply_L(DiffOp::L_minus, psi_oracle()) == Lminus_psi());
  CHECK(apply_L(DiffOp::L_plus, apply_L(DiffOp::L_minus, psi_oracle())) == LpLm_psi());
  CHECK(apply_L(DiffOp::d_x, X() * Y()) == Y());
  CHECK(apply_L(DiffOp::d_y, X() * Y()) == X());
}

TEST_CASE("L_plus and L_minus commute and are derivations") {
  std::mt19937 rng(11);
  for (int k = 0; k < 60; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(apply_L(DiffOp::L_plus, apply_L(DiffOp::L_minus, a)) ==
          apply_L(DiffOp::L_minus, apply_L(DiffOp::L_plus, a)));
    for (DiffOp op : {DiffOp::L_plus, DiffOp::L_minus, DiffOp::L_X, DiffOp::L_Y}) {
      CHECK(apply_L(op, a * b) == apply_L(op, a) * b + a * apply_L(op, b));
    }
    CHECK(apply_L(DiffOp::L_X, a) == (X() * X() - C(1)) * dx(a));
    CHECK(apply_L(DiffOp::L_Y, a) == (Y() * Y() - C(1)) * dy(a));
  }
}

TEST_CASE("Hirota derivatives") {
  const LaurentPoly x2 = X() * X();
  CHECK(hirota_D(HirotaVar::x, X(), x2, 1) == -x2);

  std::mt19937 rng(12);
  for (int k = 0; k < 60; ++k) {
    const LaurentPoly f = random_poly(rng), g = random_poly(rng);
    CHECK(hirota_D(HirotaVar::x, f, f, 1).is_zero());
    CHECK(hirota_D(HirotaVar::y, f, g, 1) == -hirota_D(HirotaVar::y, g, f, 1));
    CHECK(hirota_D(HirotaVar::x, f, g, 1) == dx(f) * g - f * dx(g));
    CHECK(hirota_D(HirotaVar::x, f, g, 2) == dx(dx(f)) * g - C(2) * dx(f) * dx(g) + f * dx(dx(g)));
    CHECK(hirota_D(HirotaVar::y, f, g, 2) == hirota_D(HirotaVar::y, g, f, 2));
    CHECK(hirota_DST(f, g) == hirota_DST(g, f));
  }
  CHECK_THROWS_AS(hirota_D(HirotaVar::x, X(), X(), 3), std::invalid_argument);
}

TEST_CASE("D_S D_T of psi with itself is twice the 2x2 Wronskian") {
  const LaurentPoly psi = psi_oracle();
  const LaurentPoly tau2 = psi * LpLm_psi() - Lplus_psi() * Lminus_psi();
  CHECK(hirota_DST(psi, psi) == C(2) * tau2);
}

TEST_CASE("F operator") {
  CHECK(FOperator(1).c_n() == -2);
  CHECK(FOperator(3).c_n() == -18);
  CHECK(apply_F(FOperator(1), C(1), C(1)) == C(-2));

  const LaurentPoly g1 = psi_oracle();
  const LaurentPoly g1_star = substitute(g1, Substitution::t_inverse);
  const LaurentPoly f1 = C(1);
  CHECK(apply_F(FOperator(1), g1_star, f1).is_zero());
  CHECK((apply_F(FOperator(1), g1_star, g1) + apply_F(FOperator(1), f1, f1)).is_zero());

  std::mt19937 rng(13);
  for (int k = 0; k < 40; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(apply_F(FOperator(2), a, b) == apply_F(FOperator(2), b, a));
    // Expanded definition.
    const LaurentPoly ab = a * b;
    const LaurentPoly expected = (X() * X() - C(1)) * hirota_D(HirotaVar::x, a, b, 2) + C(2) * X() * dx(ab) +
                                 (Y() * Y() - C(1)) * hirota_D(HirotaVar::y, a, b, 2) + C(2) * Y() * dy(ab) -
                                 C(8) * ab;
    CHECK(apply_F(FOperator(2), a, b) == expected);
  }
}

TEST_CASE("single-variable form of F") {
  CHECK(apply_F_weyl(1, X(), X()) == apply_F(FOperator(1), X(), X()));
  CHECK(apply_F_weyl(2, C(1), C(1)) == C(-8));
  for (int n = 1; n <= 3; ++n) {
    CHECK(apply_F_weyl(n, g_q0_closed(n), f_q0_closed(n)).is_zero());
  }
}
