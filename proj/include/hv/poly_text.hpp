#pragma once

#include "hv/laurent_poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace hv {

/// Syntax error while parsing polynomial text; `position()` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Canonical text: terms in canonical order joined by " + ", each written as
/// `(coeff)*t^a*x^b*y^c` with zero-exponent factors omitted. Zero is "0".
std::string serialize(const LaurentPoly& p);
std::string term_to_text(const LaurentPoly::Term& term);

/// Accepts the canonical form and the usual relaxations: bare coefficients,
/// `-` between terms, `i` as a factor, nested parentheses, any whitespace.
LaurentPoly parse(std::string_view text);

}  // namespace hv
