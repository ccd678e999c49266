#include "hv/laurent_poly.hpp"

#include "hv/poly_text.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

namespace hv {

namespace {

void sort_and_merge(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return CanonicalBefore{}(a.first, b.first); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].first == terms[i].first) {
      terms[i].second += terms[j].second;
      ++j;
    }
    if (!terms[i].second.is_zero()) {
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists, b scaled by sign.
std::vector<LaurentPoly::Term> merge(std::span<const LaurentPoly::Term> a,
                                     std::span<const LaurentPoly::Term> b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  CanonicalBefore before;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && before(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || before(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      GaussianRational c = a[i].second;
      if (subtract) {
        c -= b[j].second;
      } else {
        c += b[j].second;
      }
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

int floor_mod4(int e) { return ((e % 4) + 4) % 4; }

}  // namespace

LaurentPoly::LaurentPoly(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

LaurentPoly LaurentPoly::term(GaussianRational c, Monomial m) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  sort_and_merge(terms);
  return from_canonical(std::move(terms));
}

LaurentPoly LaurentPoly::from_canonical(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

GaussianRational LaurentPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return CanonicalBefore{}(t.first, k); });
  if (it != terms_.end() && it->first == m) return it->second;
  return {};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, k] : terms_) k *= c;
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly::from_canonical(merge(a.terms_, b.terms_, false));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly::from_canonical(merge(a.terms_, b.terms_, true));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.shifted(a.terms_[0].first) * a.terms_[0].second;
  if (b.size() == 1) return a.shifted(b.terms_[0].first) * b.terms_[0].second;
  const bool parallel = a.size() * b.size() >= kernel::kParallelThreshold && !omp_in_parallel();
  return kernel::mul_slab(a, b, parallel);
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly r = *this;
  for (auto& [mono, c] : r.terms_) mono = mono * m;
  return r;  // translation preserves the canonical order
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly acc(1);
  LaurentPoly base = *this;
  while (k != 0) {
    if (k & 1U) acc = acc * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return acc;
}

bool LaurentPoly::all_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_real(); });
}

std::pair<int, int> LaurentPoly::exponent_range(Var v) const {
  if (terms_.empty()) throw std::logic_error("exponent_range of zero polynomial");
  auto get = [v](const Monomial& m) { return v == Var::x ? m.ex : v == Var::y ? m.ey : m.et; };
  int lo = get(terms_.front().first);
  int hi = lo;
  for (const auto& [m, c] : terms_) {
    lo = std::min(lo, get(m));
    hi = std::max(hi, get(m));
  }
  return {lo, hi};
}

bool LaurentPoly::has_negative_xy() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.ex < 0 || t.first.ey < 0; });
}

std::string LaurentPoly::leading_term_text() const {
  if (terms_.empty()) return "0";
  return term_to_text(terms_.front());
}

LaurentPoly exact_divide(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (dividend.is_zero()) return {};

  // Per-variable exponent box that any exact quotient must lie in.
  Monomial lo;
  Monomial hi;
  bool empty_box = false;
  for (Var v : {Var::t, Var::x, Var::y}) {
    auto [a_lo, a_hi] = dividend.exponent_range(v);
    auto [b_lo, b_hi] = divisor.exponent_range(v);
    int q_lo = a_lo - b_lo;
    int q_hi = a_hi - b_hi;
    if (q_lo > q_hi) empty_box = true;
    (v == Var::t ? lo.et : v == Var::x ? lo.ex : lo.ey) = q_lo;
    (v == Var::t ? hi.et : v == Var::x ? hi.ex : hi.ey) = q_hi;
  }
  auto in_box = [&](const Monomial& m) {
    return !empty_box && m.et >= lo.et && m.et <= hi.et && m.ex >= lo.ex && m.ex <= hi.ex &&
           m.ey >= lo.ey && m.ey <= hi.ey;
  };

  std::map<Monomial, GaussianRational, CanonicalBefore> rem;
  for (const auto& [m, c] : dividend.terms()) rem.emplace(m, c);

  const auto& [lead_m, lead_c] = divisor.leading_term();
  const GaussianRational lead_inv = lead_c.inverse();
  std::vector<LaurentPoly::Term> quotient;
  while (!rem.empty()) {
    const auto& [m, c] = *rem.begin();
    Monomial qm = m / lead_m;
    if (!in_box(qm)) {
      throw NonDivisibleError("exact_divide: divisor does not divide dividend",
                              term_to_text({m, c}));
    }
    GaussianRational qc = c * lead_inv;
    for (const auto& [bm, bc] : divisor.terms()) {
      auto [it, inserted] = rem.try_emplace(bm * qm);
      it->second -= qc * bc;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return LaurentPoly::from_canonical(std::move(quotient));
}

LaurentPoly differentiate(const LaurentPoly& p, Var v) {
  if (v == Var::t) throw std::invalid_argument("differentiate: only x and y are supported");
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    int e = v == Var::x ? m.ex : m.ey;
    if (e == 0) continue;
    Monomial d = m;
    (v == Var::x ? d.ex : d.ey) -= 1;
    out.emplace_back(d, c * GaussianRational(e));
  }
  // Lowering one exponent by one keeps the relative canonical order.
  return LaurentPoly::from_canonical(std::move(out));
}

LaurentPoly substitute(const LaurentPoly& p, Substitution s) {
  std::vector<LaurentPoly::Term> out(p.terms().begin(), p.terms().end());
  for (auto& [m, c] : out) {
    switch (s) {
      case Substitution::t_inverse:
        m.et = -m.et;
        break;
      case Substitution::y_negate:
        if (m.ey % 2 != 0) c = -c;
        break;
      case Substitution::t_negate:
        if (m.et % 2 != 0) c = -c;
        break;
      case Substitution::t_times_i:
        switch (floor_mod4(m.et)) {
          case 1: c *= GaussianRational::i(); break;
          case 2: c = -c; break;
          case 3: c *= -GaussianRational::i(); break;
          default: break;
        }
        break;
      case Substitution::swap_xy:
        std::swap(m.ex, m.ey);
        break;
      case Substitution::conjugate:
        c = c.conj();
        break;
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly coeff_of_t(const LaurentPoly& p, int m) {
  std::vector<LaurentPoly::Term> out;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.et == m) out.emplace_back(Monomial{0, mono.ex, mono.ey}, c);
  }
  return LaurentPoly::from_canonical(std::move(out));
}

LaurentPoly times_t_power(const LaurentPoly& c, int m) { return c.shifted({m, 0, 0}); }

LaurentPoly basis_uv(const LaurentPoly& p, UvDirection direction) {
  if (p.has_negative_xy()) throw std::invalid_argument("basis_uv: negative x/y exponent");
  if (p.is_zero()) return {};
  // Images of the two slot variables.
  LaurentPoly first;
  LaurentPoly second;
  if (direction == UvDirection::to_uv) {
    first = LaurentPoly::x() + LaurentPoly::y();   // x = u + v
    second = LaurentPoly::x() - LaurentPoly::y();  // y = u - v
  } else {
    const GaussianRational half = GaussianRational::ratio(1, 2);
    first = (LaurentPoly::x() + LaurentPoly::y()) * half;   // u
    second = (LaurentPoly::x() - LaurentPoly::y()) * half;  // v
  }
  auto [x_lo, x_hi] = p.exponent_range(Var::x);
  auto [y_lo, y_hi] = p.exponent_range(Var::y);
  std::vector<LaurentPoly> first_pow{LaurentPoly(1)};
  std::vector<LaurentPoly> second_pow{LaurentPoly(1)};
  for (int k = 1; k <= x_hi; ++k) first_pow.push_back(first_pow.back() * first);
  for (int k = 1; k <= y_hi; ++k) second_pow.push_back(second_pow.back() * second);

  std::map<std::pair<int, int>, std::vector<std::pair<int, GaussianRational>>> by_xy;
  for (const auto& [m, c] : p.terms()) by_xy[{m.ex, m.ey}].emplace_back(m.et, c);

  std::vector<LaurentPoly::Term> acc;
  for (const auto& [xy, ts] : by_xy) {
    LaurentPoly image = first_pow[xy.first] * second_pow[xy.second];
    for (const auto& [et, c] : ts) {
      for (const auto& [m, k] : image.terms()) acc.emplace_back(Monomial{et, m.ex, m.ey}, k * c);
    }
  }
  return LaurentPoly::from_terms(std::move(acc));
}

GaussianRational evaluate(const LaurentPoly& p, const GaussianRational& x, const GaussianRational& y,
                          const GaussianRational& t) {
  std::map<int, GaussianRational> xp;
  std::map<int, GaussianRational> yp;
  std::map<int, GaussianRational> tp;
  auto power = [](std::map<int, GaussianRational>& cache, const GaussianRational& base, int e) {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
    return it->second;
  };
  GaussianRational sum;
  for (const auto& [m, c] : p.terms()) {
    GaussianRational term = c;
    term *= power(xp, x, m.ex);
    term *= power(yp, y, m.ey);
    term *= power(tp, t, m.et);
    sum += term;
  }
  return sum;
}

LaurentPoly at_t_equals_one(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) out.emplace_back(Monomial{0, m.ex, m.ey}, c);
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace hv
