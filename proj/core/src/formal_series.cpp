#include "qseries/formal_series.hpp"

#include <sstream>
#include <utility>

#include "qseries/errors.hpp"

namespace qseries {

FormalSeries::FormalSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) {
    throw DomainError("formal series order must be positive");
  }
}

FormalSeries FormalSeries::constant(const Rational& c, std::size_t order) {
  FormalSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

FormalSeries FormalSeries::monomial(const Rational& c, std::size_t power, std::size_t order) {
  FormalSeries s(order);
  if (power < order) {
    s.coeffs_[power] = c;
  }
  return s;
}

FormalSeries FormalSeries::from_coefficients(std::vector<Rational> coeffs) {
  FormalSeries s(coeffs.empty() ? 1 : coeffs.size());
  if (!coeffs.empty()) {
    s.coeffs_ = std::move(coeffs);
  }
  return s;
}

const Rational& FormalSeries::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw OrderExceeded("coefficient index " + std::to_string(k) + " beyond series order " +
                        std::to_string(coeffs_.size()));
  }
  return coeffs_[k];
}

void FormalSeries::set_coeff(std::size_t k, Rational value) {
  if (k >= coeffs_.size()) {
    throw OrderExceeded("coefficient index " + std::to_string(k) + " beyond series order " +
                        std::to_string(coeffs_.size()));
  }
  coeffs_[k] = std::move(value);
}

bool FormalSeries::is_zero() const { return !valuation().has_value(); }

std::optional<std::size_t> FormalSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) {
      return k;
    }
  }
  return std::nullopt;
}

void FormalSeries::check_order(const FormalSeries& other) const {
  if (other.coeffs_.size() != coeffs_.size()) {
    throw OrderMismatch("formal series orders differ: " + std::to_string(coeffs_.size()) + " vs " +
                        std::to_string(other.coeffs_.size()));
  }
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
  check_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) {
  check_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] -= rhs.coeffs_[k];
  }
  return *this;
}

FormalSeries& FormalSeries::operator*=(const FormalSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

FormalSeries& FormalSeries::operator/=(const FormalSeries& rhs) {
  *this = *this / rhs;
  return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) {
    x *= c;
  }
  return *this;
}

FormalSeries FormalSeries::operator-() const {
  FormalSeries r(*this);
  for (auto& x : r.coeffs_) {
    x = -x;
  }
  return r;
}

// Cauchy product restricted to the non-zero support of both operands; most
// factors met in q-products are binomials, so this is close to linear there.
FormalSeries operator*(const FormalSeries& lhs, const FormalSeries& rhs) {
  lhs.check_order(rhs);
  const std::size_t n = lhs.order();
  std::vector<std::size_t> rhs_support;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(rhs.coeffs_[j]) != 0) {
      rhs_support.push_back(j);
    }
  }
  FormalSeries out(n);
  Rational tmp;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) {
      continue;
    }
    for (std::size_t j : rhs_support) {
      if (i + j >= n) {
        break;
      }
      tmp = lhs.coeffs_[i] * rhs.coeffs_[j];
      out.coeffs_[i + j] += tmp;
    }
  }
  return out;
}

FormalSeries FormalSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0) {
    throw NotInvertible("formal series with zero constant term is not invertible");
  }
  const std::size_t n = order();
  FormalSeries y(n);
  const Rational inv0 = 1 / coeffs_[0];
  y.coeffs_[0] = inv0;
  Rational acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(coeffs_[j]) != 0) {
        acc += coeffs_[j] * y.coeffs_[k - j];
      }
    }
    y.coeffs_[k] = -acc * inv0;
  }
  return y;
}

bool operator==(const FormalSeries& lhs, const FormalSeries& rhs) {
  return lhs.coeffs_ == rhs.coeffs_;
}

std::string FormalSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) {
      continue;
    }
    Rational mag = abs(c);
    if (first) {
      os << (sgn(c) < 0 ? "-" : "");
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) {
        os << mag.get_str() << "*";
      }
      os << "q";
      if (k > 1) {
        os << "^" << k;
      }
    }
  }
  if (first) {
    os << "0";
  }
  os << " + O(q^" << coeffs_.size() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FormalSeries& s) { return os << s.to_string(); }

FormalSeries formal_qpoch_infinite(const Rational& a, std::size_t order) {
  FormalSeries result = FormalSeries::constant(1, order);
  if (sgn(a) == 0) {
    return result;
  }
  for (std::size_t k = 0; k < order; ++k) {
    FormalSeries factor = FormalSeries::constant(1, order);
    Rational c = factor.coeff(k) - a;
    factor.set_coeff(k, c);
    result *= factor;
  }
  return result;
}

Rational parse_rational(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) {
      throw DomainError("not a rational number: '" + text + "'");
    }
    r.canonicalize();
    if (sgn(r.get_den()) == 0) {
      throw DomainError("zero denominator in '" + text + "'");
    }
    return r;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t decimals = text.size() - dot - 1;
  mpz_class num;
  if (digits.empty() || digits == "-" || digits == "+" || num.set_str(digits, 10) != 0) {
    throw DomainError("not a decimal number: '" + text + "'");
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, decimals);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace qseries
