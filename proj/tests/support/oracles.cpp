#include "oracles.hpp"

#include <cmath>
#include <cstdlib>

namespace oracle {

Coeffs four_square_counts(int nmax) {
  Coeffs out(static_cast<std::size_t>(nmax + 1), 0);
  const int m = static_cast<int>(std::sqrt(static_cast<double>(nmax))) + 1;
  for (int a = -m; a <= m; ++a) {
    for (int b = -m; b <= m; ++b) {
      for (int c = -m; c <= m; ++c) {
        for (int d = -m; d <= m; ++d) {
          const int n = a * a + b * b + c * c + d * d;
          if (n <= nmax) {
            ++out[static_cast<std::size_t>(n)];
          }
        }
      }
    }
  }
  return out;
}

Coeffs four_triangular_counts(int nmax) {
  Coeffs out(static_cast<std::size_t>(nmax + 1), 0);
  std::vector<int> tri;
  for (int m = 0; m * (m + 1) / 2 <= nmax; ++m) {
    tri.push_back(m * (m + 1) / 2);
  }
  for (int a : tri) {
    for (int b : tri) {
      for (int c : tri) {
        for (int d : tri) {
          const int n = a + b + c + d;
          if (n <= nmax) {
            ++out[static_cast<std::size_t>(n)];
          }
        }
      }
    }
  }
  return out;
}

namespace {

std::int64_t sigma(int n) {
  std::int64_t s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      s += d;
    }
  }
  return s;
}

Coeffs multiply(const Coeffs& x, const Coeffs& y) {
  Coeffs out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; i + j < x.size(); ++j) {
      out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

}  // namespace

Coeffs four_square_divisor_side(int nmax) {
  Coeffs out(static_cast<std::size_t>(nmax + 1), 0);
  out[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    out[static_cast<std::size_t>(n)] = 8 * sigma(n) - (n % 4 == 0 ? 32 * sigma(n / 4) : 0);
  }
  return out;
}

Coeffs four_triangular_divisor_side(int nmax) {
  Coeffs out(static_cast<std::size_t>(nmax + 1), 0);
  for (int n = 0; n <= nmax; ++n) {
    out[static_cast<std::size_t>(n)] = sigma(2 * n + 1);
  }
  return out;
}

Coeffs euler_product_power(int nmax, int e) {
  const auto size = static_cast<std::size_t>(nmax + 1);
  Coeffs out(size, 0);
  out[0] = 1;
  for (int k = 1; k <= nmax; ++k) {
    Coeffs factor(size, 0);
    factor[0] = 1;
    factor[static_cast<std::size_t>(k)] = -1;
    for (int i = 0; i < e; ++i) {
      out = multiply(out, factor);
    }
  }
  return out;
}

Coeffs pentagonal_series(int nmax) {
  Coeffs out(static_cast<std::size_t>(nmax + 1), 0);
  for (int k = -nmax; k <= nmax; ++k) {
    const int e = k * (3 * k - 1) / 2;
    if (e <= nmax) {
      out[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
  }
  return out;
}

Coeffs cube_series(int nmax) {
  Coeffs out(static_cast<std::size_t>(nmax + 1), 0);
  for (int n = 0; n * (n + 1) / 2 <= nmax; ++n) {
    out[static_cast<std::size_t>(n * (n + 1) / 2)] += (n % 2 == 0 ? 1 : -1) * (2 * n + 1);
  }
  return out;
}

Coeffs euler_identity_lhs(int nmax) {
  const auto size = static_cast<std::size_t>(nmax + 1);
  Coeffs out(size, 0);
  out[0] = 1;
  Coeffs poch(size, 0);  // (q;q)_{n-1}
  poch[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    if (n > 1) {
      Coeffs factor(size, 0);
      factor[0] = 1;
      factor[static_cast<std::size_t>(n - 1)] = -1;
      poch = multiply(poch, factor);
    }
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) < size; ++i) {
      out[i + static_cast<std::size_t>(n)] -= poch[i];
    }
  }
  return out;
}

Coeffs gaussian_binomial_by_subsets(int n, int k) {
  const int top = k * (n - k);
  Coeffs out(static_cast<std::size_t>(top + 1), 0);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) {
      continue;
    }
    int s = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) {
        s += i;
      }
    }
    ++out[static_cast<std::size_t>(s - k * (k - 1) / 2)];
  }
  return out;
}

}  // namespace oracle
