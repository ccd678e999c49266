#include "hv/operators.hpp"
#include "hv/verifier.hpp"

#include <stdexcept>
#include <string>

namespace hv {

namespace {

// t-coefficient access on a family. Out-of-range orders give zero.
struct Coeffs {
  const TauFamily& fam;

  LaurentPoly G(int k, int m) const { return coeff_of_t(fam.g.at(static_cast<std::size_t>(k)), m); }
  LaurentPoly F(int k, int m) const { return coeff_of_t(fam.f.at(static_cast<std::size_t>(k)), m); }
  // Coefficient of t^{-m} in the starred object, i.e. conj of the t^m coefficient.
  LaurentPoly Gc(int k, int m) const { return substitute(G(k, m), Substitution::conjugate); }
  LaurentPoly Fc(int k, int m) const { return substitute(F(k, m), Substitution::conjugate); }
};

LaurentPoly dst(const LaurentPoly& a, const LaurentPoly& b) { return hirota_DST(a, b); }

void check_index(int I, int max_index, int n, const char* what) {
  if (n < 1 || I < 0 || I > max_index) {
    throw std::invalid_argument(std::string(what) + ": invalid (n=" + std::to_string(n) + ", I=" +
                                std::to_string(I) + ")");
  }
}

// Mirror partner order and the sign relating the two y -> -y images.
struct Route {
  bool mirror;
  int partner;
  long sign;
};

Route toda_route(OrderwiseFamily family, int n, int I) {
  switch (family) {
    case OrderwiseFamily::g: return I > n ? Route{true, 2 * n - I, 1} : Route{false, I, 1};
    case OrderwiseFamily::f: return I > n - 1 ? Route{true, 2 * n - 2 - I, 1} : Route{false, I, 1};
    case OrderwiseFamily::mixed: return I > n - 1 ? Route{true, 2 * n - 1 - I, 1} : Route{false, I, 1};
  }
  throw std::logic_error("unknown OrderwiseFamily");
}

Route nakamura_route(NakamuraEq eq, int n, int I) {
  const long sign = eq == NakamuraEq::B2 ? -1 : 1;
  switch (eq) {
    case NakamuraEq::B1:
    case NakamuraEq::B2:
    case NakamuraEq::B3: return I > n ? Route{true, 2 * n - 1 - I, sign} : Route{false, I, sign};
    case NakamuraEq::B4: return I > n ? Route{true, 2 * n - I, sign} : Route{false, I, sign};
  }
  throw std::logic_error("unknown NakamuraEq");
}

// Case-formula residual (LHS - RHS) for the non-mirror range.
LaurentPoly toda_direct_case(const Coeffs& c, int n, int I, OrderwiseFamily family) {
  LaurentPoly lhs, rhs;
  switch (family) {
    case OrderwiseFamily::g:
      if (I <= n - 1) {
        for (int J = 0; J <= I; ++J) {
          lhs += dst(c.G(n, n - 2 * J), c.G(n, n - 2 * I + 2 * J));
          rhs += c.G(n + 1, n - 2 * J + 1) * c.G(n - 1, n - 2 * I + 2 * J - 1);
        }
      } else {
        for (int J = 0; J <= n; ++J) lhs += dst(c.G(n, n - 2 * J), c.G(n, -n + 2 * J));
        for (int J = 1; J <= n; ++J) rhs += c.G(n + 1, n - 2 * J + 1) * c.G(n - 1, -n + 2 * J - 1);
      }
      return lhs - LaurentPoly(2) * rhs;
    case OrderwiseFamily::f:
      if (I <= n - 2) {
        for (int J = 0; J <= I; ++J) {
          lhs += dst(c.F(n, n - 2 * J - 1), c.F(n, n - 2 * I + 2 * J - 1));
          rhs += c.F(n + 1, n - 2 * J) * c.F(n - 1, n - 2 * I + 2 * J - 2);
        }
      } else {
        for (int J = 0; J <= n - 1; ++J) lhs += dst(c.F(n, n - 2 * J - 1), c.F(n, -n + 2 * J + 1));
        for (int J = 1; J <= n - 1; ++J) rhs += c.F(n + 1, n - 2 * J) * c.F(n - 1, -n + 2 * J);
      }
      return lhs - LaurentPoly(2) * rhs;
    case OrderwiseFamily::mixed:
      if (I <= n - 2) {
        for (int J = 0; J <= I; ++J) {
          lhs += dst(c.F(n, n - 2 * J - 1), c.G(n, n - 2 * I + 2 * J));
          rhs += c.F(n + 1, n - 2 * J) * c.G(n - 1, n - 2 * I + 2 * J - 1);
          rhs += c.F(n - 1, n - 2 * J - 2) * c.G(n + 1, n - 2 * I + 2 * J + 1);
        }
      } else {
        for (int J = 0; J <= n - 1; ++J) {
          lhs += dst(c.F(n, n - 2 * J - 1), c.G(n, -n + 2 * J + 2));
          rhs += c.F(n + 1, n - 2 * J) * c.G(n - 1, -n + 2 * J + 1);
        }
        for (int J = 0; J <= n - 2; ++J) rhs += c.F(n - 1, n - 2 * J - 2) * c.G(n + 1, -n + 2 * J + 3);
      }
      return lhs - rhs;
  }
  throw std::logic_error("unknown OrderwiseFamily");
}

LaurentPoly nakamura_direct_case(const Coeffs& c, int n, int I, NakamuraEq eq) {
  LaurentPoly r;
  const FOperator Fop(n);
  switch (eq) {
    case NakamuraEq::B1:
    case NakamuraEq::B2: {
      const HirotaVar v = eq == NakamuraEq::B1 ? HirotaVar::x : HirotaVar::y;
      const GaussianRational s = eq == NakamuraEq::B1 ? -1 : 1;
      if (I <= n - 1) {
        for (int J = 0; J <= I; ++J) {
          r += hirota_D(v, c.G(n, n - 2 * J), c.F(n, n - 2 * I + 2 * J - 1), 1);
          r += s * hirota_D(v, c.Gc(n, -n + 2 * J), c.Fc(n, -n + 2 * I - 2 * J + 1), 1);
        }
      } else {
        for (int J = 1; J <= n; ++J) {
          r += hirota_D(v, c.G(n, n - 2 * J), c.F(n, -n + 2 * J - 1), 1);
          r += s * hirota_D(v, c.Gc(n, -n + 2 * J), c.Fc(n, n - 2 * J + 1), 1);
        }
      }
      return r;
    }
    case NakamuraEq::B3:
      if (I <= n - 1) {
        for (int J = 0; J <= I; ++J) r += apply_F(Fop, c.Gc(n, -n + 2 * J), c.F(n, n - 2 * I + 2 * J - 1));
      } else {
        for (int J = 1; J <= n; ++J) r += apply_F(Fop, c.Gc(n, -n + 2 * J), c.F(n, -n + 2 * J - 1));
      }
      return r;
    case NakamuraEq::B4:
      if (I == 0) return apply_F(Fop, c.Gc(n, -n), c.G(n, n));
      for (int J = 0; J <= I; ++J) r += apply_F(Fop, c.Gc(n, -n + 2 * J), c.G(n, n - 2 * I + 2 * J));
      for (int J = 0; J <= I - 1; ++J) r += apply_F(Fop, c.Fc(n, -n + 2 * J + 1), c.F(n, n - 2 * I + 2 * J + 1));
      return r;
  }
  throw std::logic_error("unknown NakamuraEq");
}

int toda_case_number(OrderwiseFamily family, int n, int I) {
  switch (family) {
    case OrderwiseFamily::g: return I <= n - 1 ? 1 : (I == n ? 2 : 3);
    case OrderwiseFamily::f: return I <= n - 2 ? 4 : (I == n - 1 ? 5 : 6);
    case OrderwiseFamily::mixed: return I <= n - 2 ? 7 : (I == n - 1 ? 8 : 9);
  }
  return 0;
}

int nakamura_case_number(NakamuraEq eq, int n, int I) {
  const int regime = I <= n - 1 ? 0 : (I == n ? 1 : 2);
  switch (eq) {
    case NakamuraEq::B1: return 1 + regime;
    case NakamuraEq::B2: return 4 + regime;
    case NakamuraEq::B3: return 7 + regime;
    case NakamuraEq::B4: return I == 0 ? 11 : (I <= n ? 10 : 12);
  }
  return 0;
}

LaurentPoly toda_parent(const TauFamily& fam, int n, OrderwiseFamily family) {
  switch (family) {
    case OrderwiseFamily::g: return toda_residual(fam, n, TodaWhich::g);
    case OrderwiseFamily::f: return toda_residual(fam, n, TodaWhich::f);
    case OrderwiseFamily::mixed: return mixed_residual(fam, n);
  }
  throw std::logic_error("unknown OrderwiseFamily");
}

const char* family_name(OrderwiseFamily family) {
  switch (family) {
    case OrderwiseFamily::g: return "g";
    case OrderwiseFamily::f: return "f";
    case OrderwiseFamily::mixed: return "mixed";
  }
  return "?";
}

int nakamura_number(NakamuraEq eq) { return static_cast<int>(eq) + 1; }

CheckReport route_report(std::string id, int n, int I, const LaurentPoly& case_residual,
                         const LaurentPoly& direct_residual, std::size_t term_count) {
  CheckReport r = residual_report(std::move(id), n, I, case_residual, term_count);
  if (case_residual != direct_residual) {
    r.status = CheckStatus::fail;
    const LaurentPoly gap = case_residual - direct_residual;
    r.witness = gap.leading_term_text();
    r.note = "case formula disagrees with the t-coefficient of the parent residual";
  }
  return r;
}

std::size_t family_terms(const TauFamily& fam, int lo, int hi) {
  std::size_t s = 0;
  for (int k = lo; k <= hi; ++k) s += fam.g[k].size() + fam.f[k].size();
  return s;
}

}  // namespace

int orderwise_max_index(OrderwiseFamily family, int n) {
  switch (family) {
    case OrderwiseFamily::g: return 2 * n;
    case OrderwiseFamily::f: return 2 * n - 2;
    case OrderwiseFamily::mixed: return 2 * n - 1;
  }
  return -1;
}

int nakamura_max_index(NakamuraEq eq, int n) { return eq == NakamuraEq::B4 ? 2 * n : 2 * n - 1; }

int orderwise_t_exponent(OrderwiseFamily family, int n, int I) {
  switch (family) {
    case OrderwiseFamily::g: return 2 * n - 2 * I;
    case OrderwiseFamily::f: return 2 * n - 2 * I - 2;
    case OrderwiseFamily::mixed: return 2 * n - 2 * I - 1;
  }
  return 0;
}

int nakamura_t_exponent(NakamuraEq eq, int n, int I) {
  return eq == NakamuraEq::B4 ? 2 * n - 2 * I : 2 * n - 2 * I - 1;
}

LaurentPoly orderwise_toda_case_residual(const TauFamily& fam, int n, int I, OrderwiseFamily family) {
  check_index(I, orderwise_max_index(family, n), n, "orderwise_toda_case_residual");
  if (n + 1 > fam.n_max) throw std::invalid_argument("orderwise_toda_case_residual: family too short");
  const Coeffs c{fam};
  const Route route = toda_route(family, n, I);
  if (!route.mirror) return toda_direct_case(c, n, I, family);
  LaurentPoly partner = toda_direct_case(c, n, route.partner, family);
  return GaussianRational(route.sign) * substitute(partner, Substitution::y_negate);
}

LaurentPoly orderwise_nakamura_case_residual(const TauFamily& fam, int n, int I, NakamuraEq eq) {
  check_index(I, nakamura_max_index(eq, n), n, "orderwise_nakamura_case_residual");
  if (n > fam.n_max) throw std::invalid_argument("orderwise_nakamura_case_residual: family too short");
  const Coeffs c{fam};
  const Route route = nakamura_route(eq, n, I);
  if (!route.mirror) return nakamura_direct_case(c, n, I, eq);
  LaurentPoly partner = nakamura_direct_case(c, n, route.partner, eq);
  return GaussianRational(route.sign) * substitute(partner, Substitution::y_negate);
}

CheckReport check_orderwise_toda(const TauFamily& fam, int n, int I, OrderwiseFamily family) {
  return timed([&] {
    LaurentPoly cr = orderwise_toda_case_residual(fam, n, I, family);
    LaurentPoly direct = coeff_of_t(toda_parent(fam, n, family), orderwise_t_exponent(family, n, I));
    return route_report("TD" + std::to_string(toda_case_number(family, n, I)), n, I, cr, direct,
                        family_terms(fam, n - 1, n + 1));
  });
}

CheckReport check_orderwise_nakamura(const TauFamily& fam, int n, int I, NakamuraEq eq) {
  return timed([&] {
    LaurentPoly cr = orderwise_nakamura_case_residual(fam, n, I, eq);
    LaurentPoly direct = coeff_of_t(conjecture_residual(fam, n, eq), nakamura_t_exponent(eq, n, I));
    return route_report("B." + std::to_string(nakamura_case_number(eq, n, I)), n, I, cr, direct,
                        family_terms(fam, n, n));
  });
}

LaurentPoly orderwise_toda_sum_defect(const TauFamily& fam, int n, OrderwiseFamily family) {
  LaurentPoly sum;
  for (int I = 0; I <= orderwise_max_index(family, n); ++I) {
    sum += times_t_power(orderwise_toda_case_residual(fam, n, I, family), orderwise_t_exponent(family, n, I));
  }
  return sum - toda_parent(fam, n, family);
}

LaurentPoly orderwise_nakamura_sum_defect(const TauFamily& fam, int n, NakamuraEq eq) {
  LaurentPoly sum;
  for (int I = 0; I <= nakamura_max_index(eq, n); ++I) {
    sum += times_t_power(orderwise_nakamura_case_residual(fam, n, I, eq), nakamura_t_exponent(eq, n, I));
  }
  return sum - conjecture_residual(fam, n, eq);
}

CheckReport check_orderwise_toda_sum(const TauFamily& fam, int n, OrderwiseFamily family) {
  return timed([&] {
    return residual_report(std::string("TDsum.") + family_name(family), n, std::nullopt,
                           orderwise_toda_sum_defect(fam, n, family), family_terms(fam, n - 1, n + 1));
  });
}

CheckReport check_orderwise_nakamura_sum(const TauFamily& fam, int n, NakamuraEq eq) {
  return timed([&] {
    return residual_report("Bsum." + std::to_string(nakamura_number(eq)), n, std::nullopt,
                           orderwise_nakamura_sum_defect(fam, n, eq), family_terms(fam, n, n));
  });
}

}  // namespace hv
