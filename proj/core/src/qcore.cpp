#include "qseries/qcore.hpp"

#include <cmath>

namespace qseries {

Complex q_hermite(long n, double theta, const Complex& q) {
  if (n < 0) {
    throw DomainError("q-Hermite degree must be non-negative");
  }
  Complex sum = 0.0;
  Complex binom = 1.0;
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      binom *= (1.0 - std::pow(q, static_cast<double>(n - k + 1))) /
               (1.0 - std::pow(q, static_cast<double>(k)));
    }
    sum += binom * std::polar(1.0, static_cast<double>(n - 2 * k) * theta);
  }
  return sum;
}

QPolynomial<Complex> q_hermite_polynomial(long n, const Complex& q) {
  if (n < 0) {
    throw DomainError("q-Hermite degree must be non-negative");
  }
  std::vector<Complex> prev;        // H_{-1} = 0
  std::vector<Complex> cur = {1.0};  // H_0 = 1
  Complex qk = 1.0;                  // q^k for the current k
  for (long k = 0; k < n; ++k) {
    std::vector<Complex> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += 2.0 * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] -= (1.0 - qk) * prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
    qk *= q;
  }
  return QPolynomial<Complex>(std::move(cur));
}

Complex hprod(double theta, std::span<const Complex> params, const Complex& q,
              const TruncationPolicy& policy) {
  detail::require_base(q);
  const double x = std::cos(theta);
  const double qabs = std::abs(q);
  Complex result = 1.0;
  for (const Complex& a : params) {
    Complex aqk = a;
    int k = 0;
    for (;; ++k) {
      if (k >= policy.max_factors) {
        throw NonConvergent("h(x; a) needs more than " + std::to_string(policy.max_factors) +
                            " factors");
      }
      const double m = std::abs(aqk);
      // two conjugate factors per k, hence twice the single-product bound
      if (m <= 0.5 && 4.0 * m / (1.0 - qabs) < policy.tail_tol) {
        break;
      }
      result *= 1.0 - 2.0 * aqk * x + aqk * aqk;
      aqk *= q;
    }
  }
  return result;
}

}  // namespace qseries
