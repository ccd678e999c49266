#include "hv/verifier.hpp"

namespace hv {

namespace {

struct Jet {
  GaussianRational v, dx, dy, dxx, dyy;
};

Jet jet_at(const LaurentPoly& p, const ErnstPoint& pt) {
  const LaurentPoly px = differentiate(p, Var::x);
  const LaurentPoly py = differentiate(p, Var::y);
  auto at = [&](const LaurentPoly& q) { return evaluate(q, pt.x, pt.y, pt.t); };
  return {at(p), at(px), at(py), at(differentiate(px, Var::x)), at(differentiate(py, Var::y))};
}

}  // namespace

std::vector<ErnstPoint> default_ernst_points() {
  using GR = GaussianRational;
  return {
      {GR(2), GR::ratio(1, 2), GR(1)},
      {GR(3), GR::ratio(1, 3), GR::ratio(3, 5, 4, 5)},
      {GR::ratio(5, 2), GR::ratio(-1, 4), GR::ratio(5, 13, 12, 13)},
      {GR::ratio(7, 3), GR::ratio(2, 5), GR::ratio(8, 17, 15, 17)},
  };
}

std::vector<ErnstSample> ernst_residual_numeric(const TauFamily& fam, int n, const std::vector<ErnstPoint>& samples) {
  if (n < 1 || n > fam.n_max) throw std::invalid_argument("ernst_residual_numeric: n outside family range");
  std::vector<ErnstSample> out;
  out.reserve(samples.size());
  for (const auto& pt : samples) {
    ErnstSample s;
    s.point = pt;
    if (pt.t.norm() != 1) {
      s.error = "|t| != 1";
      out.push_back(std::move(s));
      continue;
    }
    if (!pt.x.is_real() || !pt.y.is_real()) {
      s.error = "x, y must be real";
      out.push_back(std::move(s));
      continue;
    }
    const Jet g = jet_at(fam.g[n], pt);
    const Jet f = jet_at(fam.f[n], pt);
    if (f.v.is_zero()) {
      s.error = "f vanishes at the sample point";
      out.push_back(std::move(s));
      continue;
    }
    // Quotient rule for xi = g/f.
    const GaussianRational inv = f.v.inverse();
    const GaussianRational xi = g.v * inv;
    const GaussianRational xi_x = (g.dx - xi * f.dx) * inv;
    const GaussianRational xi_y = (g.dy - xi * f.dy) * inv;
    const GaussianRational xi_xx = (g.dxx - xi * f.dxx - GaussianRational(2) * xi_x * f.dx) * inv;
    const GaussianRational xi_yy = (g.dyy - xi * f.dyy - GaussianRational(2) * xi_y * f.dy) * inv;

    const GaussianRational& x = pt.x;
    const GaussianRational& y = pt.y;
    const GaussianRational one(1), two(2);
    const GaussianRational x2m1 = x * x - one;
    const GaussianRational one_m_y2 = one - y * y;
    const GaussianRational lap = x2m1 * xi_xx + two * x * xi_x + one_m_y2 * xi_yy - two * y * xi_y;
    const GaussianRational grad = x2m1 * xi_x * xi_x + one_m_y2 * xi_y * xi_y;
    const GaussianRational xi_bar = xi.conj();

    s.residual = (xi * xi_bar - one) * lap - two * xi_bar * grad;
    s.magnitude = s.residual.abs_approx();
    s.evaluated = true;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hv
