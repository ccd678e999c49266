#pragma once

#include "hv/check_report.hpp"
#include "hv/laurent_poly.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace hv {

/// Square matrix of symbolic (Laurent polynomial) entries, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// psi = t (x-y)/2 + t^-1 (x+y)/2, i.e. p x - i q y after p = (t+1/t)/2, q = (t-1/t)/(2i).
LaurentPoly build_psi();

/// Two-directional Wronskian: entry(i,j) = L_plus^i L_minus^j seed, 0 <= i,j < n.
SymMatrix wronskian_matrix(const LaurentPoly& seed, int n);

enum class DetAlgo { fraction_free, cofactor };

/// Exact determinant. The 0x0 determinant is 1. fraction_free is one-step Bareiss
/// elimination with row pivoting; cofactor is Laplace expansion memoised over
/// column subsets and is meant as an oracle for small matrices.
LaurentPoly determinant(const SymMatrix& m, DetAlgo algo = DetAlgo::fraction_free);

/// Leading principal minors det(M[0..k, 0..k]) for k = 0..dim-1, read off the
/// pivots of a single Bareiss pass. Empty optional if a pivot vanishes.
std::optional<std::vector<LaurentPoly>> leading_principal_minors(const SymMatrix& m);

/// Submatrix with the listed rows and columns removed (0-based indices).
/// Throws std::out_of_range / std::invalid_argument on bad index sets.
SymMatrix minor_matrix(const SymMatrix& m, std::span<const std::size_t> rows,
                       std::span<const std::size_t> cols);

/// tau_n, g_n = tau_n and f_n = tau_{n-1}|_{psi -> L+L- psi} for n = 0..n_max.
/// Conventions: tau_0 = g_0 = 1, f_0 = 0, f_1 = 1.
struct TauFamily {
  int n_max = 0;
  LaurentPoly seed;
  std::vector<LaurentPoly> tau;
  std::vector<LaurentPoly> g;
  std::vector<LaurentPoly> f;
};

TauFamily tau_family(int n_max);
/// Same construction from an arbitrary seed (used to build non-solution families in tests).
TauFamily tau_family(int n_max, const LaurentPoly& seed);

/// Desnanot-Jacobi identity on the (n+1)x(n+1) Wronskian of `seed`:
///   D[n;n] D[n+1;n+1] - D[n+1;n] D[n;n+1] - D D[n,n+1;n,n+1] = 0   (1-based minors).
CheckReport jacobi_identity_check(int n);
CheckReport jacobi_identity_check(int n, const LaurentPoly& seed);

/// Cache file: header line, then for k = 0..n_max the records "tau n=k", "g n=k",
/// "f n=k", each followed by one canonical polynomial line.
void write_cache(const TauFamily& fam, std::ostream& os);
TauFamily read_cache(std::istream& is);

}  // namespace hv
