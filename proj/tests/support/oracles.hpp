#ifndef QSERIES_TESTS_ORACLES_HPP
#define QSERIES_TESTS_ORACLES_HPP

// Independent reference computations. Nothing here uses the library: counts
// come from enumerating lattice points and series from plain integer
// polynomial arithmetic.

#include <cstdint>
#include <vector>

namespace oracle {

using Coeffs = std::vector<std::int64_t>;

/// r4(n) for n <= nmax: integer 4-tuples with x1^2 + ... + x4^2 = n.
Coeffs four_square_counts(int nmax);

/// t4(n) for n <= nmax: non-negative 4-tuples with sum of m(m+1)/2 = n.
Coeffs four_triangular_counts(int nmax);

/// 8 sigma(n) - 32 sigma(n/4) by trial division, with the n = 0 term 1.
Coeffs four_square_divisor_side(int nmax);

/// sigma(2n + 1) by trial division.
Coeffs four_triangular_divisor_side(int nmax);

/// prod_{k>=1} (1 - q^k)^e mod q^{nmax+1} by repeated polynomial multiplication.
Coeffs euler_product_power(int nmax, int e);

/// sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
Coeffs pentagonal_series(int nmax);

/// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}.
Coeffs cube_series(int nmax);

/// 1 - sum_{n>=1} (q;q)_{n-1} q^n mod q^{nmax+1}.
Coeffs euler_identity_lhs(int nmax);

/// Polynomial [n,k]_q coefficients by counting k-subsets of {0..n-1} by
/// (sum of elements - k(k-1)/2).
Coeffs gaussian_binomial_by_subsets(int n, int k);

}  // namespace oracle

#endif  // QSERIES_TESTS_ORACLES_HPP
