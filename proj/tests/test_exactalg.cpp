#include "hv/laurent_poly.hpp"
#include "hv/poly_text.hpp"
#include "hv/wronskian.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace hv;
using namespace hv::testing;

namespace {

constexpr int kTrials = 150;

std::mt19937 rng_for(unsigned salt) { return std::mt19937(1234u + salt); }

}  // namespace

TEST_CASE("gaussian rationals") {
  const GaussianRational a = GaussianRational::ratio(1, 2, 3, 4);
  const GaussianRational b = GaussianRational::ratio(-2, 3, 1, 5);
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK((a * b) / b == a);
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).is_real());
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(GaussianRational::i().pow(-1) == -GaussianRational::i());
  CHECK(GaussianRational::ratio(6, 4).to_string() == "3/2");
  CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);

  GaussianRational acc(1);
  acc.add_product(a, b);
  CHECK(acc == GaussianRational(1) + a * b);
}

TEST_CASE("ring examples") {
  const LaurentPoly tv = T() * v(), tu = Tinv() * u();
  CHECK((tv + tu) + (-tu) == tv);
  CHECK((X() + T()) * (X() - T()) == X() * X() - T() * T());
  CHECK(exact_divide(X() * X() - T() * T(), X() - T()) == X() + T());
  CHECK(LaurentPoly(0).is_zero());
  CHECK((X() - X()).size() == 0);
}

TEST_CASE("ring axioms hold on random polynomials") {
  auto rng = rng_for(1);
  for (int k = 0; k < kTrials; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK((a * LaurentPoly()).is_zero());
  }
}

TEST_CASE("exact division inverts multiplication") {
  auto rng = rng_for(2);
  for (int k = 0; k < kTrials; ++k) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng, {4, 3, 2, true});
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
  CHECK(exact_divide(X() * X() - LaurentPoly(1), X() + LaurentPoly(1)) == X() - LaurentPoly(1));
  CHECK(exact_divide(T() * X(), Tinv()) == T() * T() * X());
}

TEST_CASE("non-divisible input reports a remainder witness") {
  try {
    (void)exact_divide(X() * X() + LaurentPoly(1), X() + LaurentPoly(1));
    FAIL("expected NonDivisibleError");
  } catch (const NonDivisibleError& e) {
    CHECK_FALSE(e.witness().empty());
  }
  CHECK_THROWS_AS(exact_divide(X(), LaurentPoly()), std::domain_error);
}

TEST_CASE("slab kernel matches the reference product") {
  auto rng = rng_for(3);
  const PolyShape big{40, 6, 4, true};
  for (int k = 0; k < 40; ++k) {
    const LaurentPoly a = random_poly(rng, big), b = random_poly(rng, big);
    const LaurentPoly ref = kernel::mul_reference(a, b);
    CHECK(kernel::mul_slab(a, b, false) == ref);
    CHECK(kernel::mul_slab(a, b, true) == ref);
    CHECK(a * b == ref);
  }
}

TEST_CASE("differentiation") {
  CHECK(differentiate(X() * X() * Y(), Var::x) == C(2) * X() * Y());
  CHECK(differentiate(X() * X(), Var::y).is_zero());
  const LaurentPoly dpsi = differentiate(psi_oracle(), Var::x);
  CHECK(coeff_of_t(dpsi, 1) == C(1, 2));
  CHECK(coeff_of_t(dpsi, -1) == C(1, 2));
  CHECK_THROWS_AS(differentiate(T(), Var::t), std::invalid_argument);

  auto rng = rng_for(4);
  for (int k = 0; k < kTrials; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    for (Var var : {Var::x, Var::y}) {
      CHECK(differentiate(a * b, var) == differentiate(a, var) * b + a * differentiate(b, var));
    }
  }
}

TEST_CASE("substitutions") {
  const LaurentPoly g1 = psi_oracle();
  const LaurentPoly swapped = T() * u() + Tinv() * v();
  CHECK(substitute(g1, Substitution::t_inverse) == swapped);
  CHECK(substitute(g1, Substitution::y_negate) == swapped);
  const TauFamily fam = tau_family(3);
  CHECK(substitute(fam.g[2], Substitution::t_negate) == fam.g[2]);
  CHECK(substitute(fam.g[3], Substitution::t_negate) == -fam.g[3]);

  auto rng = rng_for(5);
  const Substitution all[] = {Substitution::t_inverse, Substitution::y_negate, Substitution::t_negate,
                              Substitution::t_times_i, Substitution::swap_xy, Substitution::conjugate};
  for (int k = 0; k < kTrials; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    for (Substitution s : all) {
      CHECK(substitute(a * b, s) == substitute(a, s) * substitute(b, s));
      CHECK(substitute(a + b, s) == substitute(a, s) + substitute(b, s));
    }
    for (Substitution s : {Substitution::t_inverse, Substitution::y_negate, Substitution::swap_xy,
                           Substitution::conjugate, Substitution::t_negate}) {
      CHECK(substitute(substitute(a, s), s) == a);
    }
    CHECK(substitute(substitute(a, Substitution::t_inverse), Substitution::y_negate) ==
          substitute(substitute(a, Substitution::y_negate), Substitution::t_inverse));
    // t -> i t four times is the identity
    LaurentPoly r = a;
    for (int j = 0; j < 4; ++j) r = substitute(r, Substitution::t_times_i);
    CHECK(r == a);
    // against composition with explicit images
    CHECK(substitute(a, Substitution::swap_xy) == compose(a, Y(), X()));
    CHECK(substitute(a, Substitution::y_negate) == compose(a, X(), -Y()));
  }
}

TEST_CASE("t-coefficients") {
  const TauFamily fam = tau_family(3);
  CHECK(coeff_of_t(fam.g[1], 1) == v());
  CHECK(coeff_of_t(fam.g[1], -1) == u());
  CHECK(coeff_of_t(fam.g[2], 1).is_zero());
  CHECK(coeff_of_t(fam.g[2], 2) == C(4) * u() * v().pow(3));

  auto rng = rng_for(6);
  for (int k = 0; k < kTrials; ++k) {
    const LaurentPoly a = random_poly(rng);
    LaurentPoly rebuilt;
    for (int m = -2; m <= 2; ++m) rebuilt += times_t_power(coeff_of_t(a, m), m);
    CHECK(rebuilt == a);
  }
}

TEST_CASE("u,v change of basis") {
  // In the u,v representation the x slot carries u and the y slot carries v.
  const LaurentPoly U = X(), V = Y();
  CHECK(basis_uv(X(), UvDirection::to_uv) == U + V);
  CHECK(basis_uv(X() * X() - Y() * Y(), UvDirection::to_uv) == C(4) * U * V);
  const TauFamily fam = tau_family(3);
  CHECK(basis_uv(basis_uv(fam.g[3], UvDirection::to_uv), UvDirection::from_uv) == fam.g[3]);

  auto rng = rng_for(7);
  for (int k = 0; k < 60; ++k) {
    const LaurentPoly a = random_poly(rng);
    CHECK(basis_uv(a, UvDirection::to_uv) == compose(a, U + V, U - V));
    CHECK(basis_uv(a, UvDirection::from_uv) == compose(a, u(), v()));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto rng = rng_for(8);
  const GaussianRational x = GaussianRational::ratio(5, 3), y = GaussianRational::ratio(-1, 7);
  const GaussianRational t = GaussianRational::ratio(3, 5, 4, 5);
  for (int k = 0; k < kTrials; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(evaluate(a * b, x, y, t) == evaluate(a, x, y, t) * evaluate(b, x, y, t));
    CHECK(evaluate(a + b, x, y, t) == evaluate(a, x, y, t) + evaluate(b, x, y, t));
  }
  CHECK(evaluate(psi_oracle(), GaussianRational(2), GaussianRational::ratio(1, 2), GaussianRational(1)) ==
        GaussianRational(2));
}

TEST_CASE("canonical text") {
  CHECK(serialize(T() * v()) == "(1/2)*t^1*x^1 + (-1/2)*t^1*y^1");
  CHECK(serialize(LaurentPoly()) == "0");
  const LaurentPoly p = parse("3/2 + i*t^-2");
  CHECK(p == C(3, 2) + LaurentPoly::term(GaussianRational::i(), {-2, 0, 0}));
  CHECK(parse(serialize(p)) == p);
  CHECK(parse("x - (y + 1)*2") == X() - C(2) * Y() - C(2));
  CHECK_THROWS_AS(parse("x +* y"), ParseError);
  CHECK_THROWS_AS(parse("x^"), ParseError);
  CHECK_THROWS_AS(parse("(x"), ParseError);

  CHECK(serialize(tau_family(2).g[2]) == serialize(tau_family(2).g[2]));

  auto rng = rng_for(9);
  for (int k = 0; k < kTrials; ++k) {
    const LaurentPoly a = random_poly(rng);
    CHECK(parse(serialize(a)) == a);
  }
}
