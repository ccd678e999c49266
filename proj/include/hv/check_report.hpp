#pragma once

#include "hv/laurent_poly.hpp"

#include <chrono>
#include <optional>
#include <string>

namespace hv {

enum class CheckStatus { pass, fail };

/// Outcome of one identity check. status == pass iff the residual is the zero polynomial.
struct CheckReport {
  std::string equation_id;
  int n = 0;
  std::optional<int> order_index;
  CheckStatus status = CheckStatus::fail;
  std::optional<std::string> witness;  // leading term of a nonzero residual
  std::size_t term_count = 0;          // terms in the two sides before cancellation
  std::chrono::duration<double> elapsed{};
  // Informational checks document a known-false printed variant; they do not
  // affect the exit status.
  bool informational = false;
  std::string note;

  bool passed() const { return status == CheckStatus::pass; }
};

CheckReport residual_report(std::string equation_id, int n, std::optional<int> order_index,
                            const LaurentPoly& residual, std::size_t term_count);

/// Times `fn` (which returns a CheckReport) and stores the duration in the result.
template <class Fn>
CheckReport timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r = fn();
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace hv
