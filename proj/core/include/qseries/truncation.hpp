#ifndef QSERIES_TRUNCATION_HPP
#define QSERIES_TRUNCATION_HPP

#include <string>

#include "qseries/errors.hpp"

namespace qseries {

/// Caps and tolerances for every infinite sum and product.
struct TruncationPolicy {
  int max_terms = 2000;
  int max_factors = 4000;
  double tail_tol = 1e-14;
  // Minimum modulus of any denominator factor before PoleError is raised.
  double pole_margin = 1e-8;

  void validate() const {
    if (max_terms < 1 || max_factors < 1 || !(tail_tol > 0.0) || !(pole_margin > 0.0)) {
      throw DomainError("invalid truncation policy: max_terms=" + std::to_string(max_terms) +
                        " max_factors=" + std::to_string(max_factors) +
                        " tail_tol=" + std::to_string(tail_tol) +
                        " pole_margin=" + std::to_string(pole_margin));
    }
  }
};

}  // namespace qseries

#endif  // QSERIES_TRUNCATION_HPP
