#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nested {

/// Exact rational, always canonical (lowest terms, positive denominator).
using BigRational = mpq_class;

/// "p/q" with an explicit denominator, "1/1" included.
std::string to_fraction_string(const BigRational& q);

enum class SeriesVariant { circular, hyperbolic };

/**
 * Polynomial in x with only even powers: coefficient j multiplies x^(2j).
 * Trailing zero coefficients are trimmed on construction.
 */
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRational> even_coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^(2j); zero past the stored length.
  BigRational coefficient(std::size_t j) const;
  /// Degree in x, i.e. 2 * (size() - 1); 0 for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : 2 * (coeffs_.size() - 1); }

  /// Horner evaluation in x^2 with each coefficient rounded to double.
  double evaluate(double x) const;

 private:
  std::vector<BigRational> coeffs_;
};

inline constexpr int kMaxExpansionDepth = 12;

/**
 * Exact expansion of T composed n times on the seed 1 -+ x^2 / 2^(2n+1)
 * (minus for circular, plus for hyperbolic). The result has 2^n + 1
 * coefficients. n must lie in 1..12.
 */
RationalPoly expand_nested_cos(int n, SeriesVariant variant = SeriesVariant::circular);

/// c_j(n) - (-1)^j / (2j)! for j = 0..max_j, using the circular expansion.
std::vector<BigRational> maclaurin_error_profile(int n, int max_j);

}  // namespace nested
