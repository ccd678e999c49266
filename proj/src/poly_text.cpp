#include "hv/poly_text.hpp"

#include <cctype>

namespace hv {

std::string term_to_text(const LaurentPoly::Term& term) {
  const auto& [m, c] = term;
  std::string s = "(" + c.to_string() + ")";
  auto factor = [&s](char var, int e) {
    if (e == 0) return;
    s += '*';
    s += var;
    s += '^';
    s += std::to_string(e);
  };
  factor('t', m.et);
  factor('x', m.ex);
  factor('y', m.ey);
  return s;
}

std::string serialize(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += term_to_text(t);
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly parse_all() {
    LaurentPoly p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expression() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    LaurentPoly acc = signed_term();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
      acc += signed_term();
    }
    return acc;
  }

  LaurentPoly signed_term() {
    bool negate = false;
    for (;;) {
      if (accept('+')) continue;
      if (accept('-')) {
        negate = !negate;
        continue;
      }
      break;
    }
    LaurentPoly t = product();
    return negate ? -t : t;
  }

  LaurentPoly product() {
    LaurentPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int exponent() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    mpz_class e = integer();
    if (!e.fits_sint_p()) fail("exponent out of range");
    int v = static_cast<int>(e.get_si());
    return neg ? -v : v;
  }

  LaurentPoly factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return LaurentPoly(GaussianRational(mpq_class(num, den)));
    }
    if (c == 'i') {
      ++pos_;
      return LaurentPoly(GaussianRational::i());
    }
    if (c == 't' || c == 'x' || c == 'y') {
      ++pos_;
      int e = 1;
      if (accept('^')) e = exponent();
      Monomial m;
      (c == 't' ? m.et : c == 'x' ? m.ex : m.ey) = e;
      return LaurentPoly::term(1, m);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace hv
