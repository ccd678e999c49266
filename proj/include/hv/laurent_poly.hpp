#pragma once

#include "hv/gaussian_rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hv {

/// Exponents of x, y and t. Negative exponents are allowed for every variable;
/// tau-function objects only use negative powers of t.
struct Monomial {
  int et = 0;
  int ex = 0;
  int ey = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const { return {et + o.et, ex + o.ex, ey + o.ey}; }
  Monomial operator/(const Monomial& o) const { return {et - o.et, ex - o.ex, ey - o.ey}; }
};

/// Canonical order: t-exponent descending, then total x,y degree descending,
/// then x-exponent descending. Compatible with monomial multiplication.
struct CanonicalBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.et != b.et) return a.et > b.et;
    const int da = a.ex + a.ey;
    const int db = b.ex + b.ey;
    if (da != db) return da > db;
    return a.ex > b.ex;
  }
};

enum class Var { x, y, t };

/// Substitutions that preserve the term structure.
enum class Substitution {
  t_inverse,   // t -> 1/t
  y_negate,    // y -> -y
  t_negate,    // t -> -t
  t_times_i,   // t -> i*t
  swap_xy,     // x <-> y
  conjugate,   // complex-conjugate every coefficient
};

class LaurentPoly;

/// Thrown by exact division when the divisor does not divide the dividend.
class NonDivisibleError : public std::runtime_error {
 public:
  NonDivisibleError(const std::string& what, std::string remainder_witness)
      : std::runtime_error(what), witness_(std::move(remainder_witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// Sparse polynomial in x, y and t with Gaussian-rational coefficients.
///
/// Terms are kept sorted in canonical order with no zero coefficients, so the
/// representation of a value is unique and equality is structural.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly term(GaussianRational c, Monomial m);
  static LaurentPoly x() { return term(1, {0, 1, 0}); }
  static LaurentPoly y() { return term(1, {0, 0, 1}); }
  static LaurentPoly t() { return term(1, {1, 0, 0}); }
  /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// Wraps terms that are already canonical (sorted, unique, nonzero). Unchecked.
  static LaurentPoly from_canonical(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }
  /// Coefficient of one monomial (zero if absent).
  GaussianRational coeff(const Monomial& m) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& c);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
  friend LaurentPoly operator*(const GaussianRational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies every exponent vector by m (shift).
  LaurentPoly shifted(const Monomial& m) const;
  LaurentPoly pow(unsigned k) const;

  bool all_real() const;
  /// Smallest and largest exponent of a variable over all terms. Requires nonzero.
  std::pair<int, int> exponent_range(Var v) const;
  bool has_negative_xy() const;

  /// "coeff*monomial" text for the leading term, used as a failure witness.
  std::string leading_term_text() const;

 private:
  std::vector<Term> terms_;
};

// ring_ops: exact division. Throws NonDivisibleError (carrying the remainder's
// leading term) when `divisor` does not divide `dividend` in the Laurent ring.
LaurentPoly exact_divide(const LaurentPoly& dividend, const LaurentPoly& divisor);

LaurentPoly differentiate(const LaurentPoly& p, Var v);
LaurentPoly substitute(const LaurentPoly& p, Substitution s);

/// The x,y polynomial multiplying t^m.
LaurentPoly coeff_of_t(const LaurentPoly& p, int m);
/// Inverse of coeff_of_t: c(x,y) * t^m.
LaurentPoly times_t_power(const LaurentPoly& c, int m);

enum class UvDirection { to_uv, from_uv };

/// Linear change of basis between (x, y) and (u, v) = ((x+y)/2, (x-y)/2).
/// In the u,v representation the x slot of a monomial holds the u exponent and
/// the y slot holds the v exponent. Requires non-negative x,y exponents.
LaurentPoly basis_uv(const LaurentPoly& p, UvDirection direction);

/// Exact evaluation at a point; t must be nonzero if negative t powers occur.
GaussianRational evaluate(const LaurentPoly& p, const GaussianRational& x, const GaussianRational& y,
                          const GaussianRational& t);

/// Sets every t to 1, giving a polynomial in x,y only.
LaurentPoly at_t_equals_one(const LaurentPoly& p);

namespace kernel {

/// Straightforward map-based product. Kept as the test oracle for the slab kernel.
LaurentPoly mul_reference(const LaurentPoly& a, const LaurentPoly& b);

/// Dense-accumulator product, one output t-slab at a time. With `parallel` the
/// slabs are distributed over OpenMP threads; output is identical either way.
LaurentPoly mul_slab(const LaurentPoly& a, const LaurentPoly& b, bool parallel);

/// Products with at least this many term pairs use the parallel slab kernel when
/// called outside an OpenMP parallel region.
inline constexpr std::size_t kParallelThreshold = 20000;

}  // namespace kernel

}  // namespace hv
