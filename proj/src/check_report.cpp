#include "hv/check_report.hpp"

namespace hv {

CheckReport residual_report(std::string equation_id, int n, std::optional<int> order_index,
                            const LaurentPoly& residual, std::size_t term_count) {
  CheckReport r;
  r.equation_id = std::move(equation_id);
  r.n = n;
  r.order_index = order_index;
  r.term_count = term_count;
  if (residual.is_zero()) {
    r.status = CheckStatus::pass;
  } else {
    r.status = CheckStatus::fail;
    r.witness = residual.leading_term_text();
  }
  return r;
}

}  // namespace hv
