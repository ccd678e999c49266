#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace hv {

/// Exact complex rational a + b*i. Both parts are kept canonical by GMP
/// (positive denominators, lowest terms) after every operation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussianRational i() { return {0, 1}; }
  static GaussianRational ratio(long num, long den, long im_num = 0, long im_den = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always a non-negative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussianRational inverse() const;
  /// z^k for any integer k (negative powers require z != 0).
  GaussianRational pow(long k) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Adds a*b into this. Skips the imaginary cross terms when both factors are real,
  /// which is the common case for tau-function coefficients.
  void add_product(const GaussianRational& a, const GaussianRational& b);

  /// Canonical text form used by the polynomial grammar: "p/q" or "p/q+r/s*i".
  std::string to_string() const;
  /// Approximate modulus, for reports only.
  double abs_approx() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace hv
