#include "hv/gaussian_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace hv {

GaussianRational GaussianRational::ratio(long num, long den, long im_num, long im_den) {
  if (den == 0 || im_den == 0) throw std::domain_error("GaussianRational: zero denominator");
  return {mpq_class(num, den), mpq_class(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long k) const {
  GaussianRational base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  GaussianRational acc(1);
  while (e != 0) {
    if (e & 1UL) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
  mpq_add(re_.get_mpq_t(), re_.get_mpq_t(), tmp.get_mpq_t());
  const bool a_real = a.is_real();
  const bool b_real = b.is_real();
  if (a_real && b_real) return;
  if (!a_real && !b_real) {
    mpq_mul(tmp.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_sub(re_.get_mpq_t(), re_.get_mpq_t(), tmp.get_mpq_t());
  }
  if (!b_real) {
    mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_add(im_.get_mpq_t(), im_.get_mpq_t(), tmp.get_mpq_t());
  }
  if (!a_real) {
    mpq_mul(tmp.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    mpq_add(im_.get_mpq_t(), im_.get_mpq_t(), tmp.get_mpq_t());
  }
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "*i";
  std::string s = re_.get_str();
  if (sgn(im_) > 0) s += '+';
  return s + im_.get_str() + "*i";
}

double GaussianRational::abs_approx() const { return std::hypot(re_.get_d(), im_.get_d()); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace hv
