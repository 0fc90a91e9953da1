#include "nested/series_expander.hpp"

#include <string>

#include "nested/complex_value.hpp"

namespace nested {

std::string to_fraction_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalPoly::RationalPoly(std::vector<BigRational> even_coeffs) : coeffs_(std::move(even_coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RationalPoly::coefficient(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : BigRational(0);
}

double RationalPoly::evaluate(double x) const {
  const double x2 = x * x;
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x2 + it->get_d();
  return acc;
}

namespace {

// Integer coefficients in s = x^2 / 2^(2n+1); the scale is applied once at
// the end so the composition never touches rationals.
std::vector<mpz_class> compose_integer(int n, SeriesVariant variant) {
  std::vector<mpz_class> p{1, variant == SeriesVariant::circular ? -1 : 1};
  for (int level = 0; level < n; ++level) {
    const std::size_t len = p.size();
    std::vector<mpz_class> sq(2 * len - 1);
    for (std::size_t a = 0; a < len; ++a) {
      sq[2 * a] += p[a] * p[a];
      for (std::size_t b = a + 1; b < len; ++b) {
        mpz_class cross = p[a] * p[b];
        sq[a + b] += cross + cross;
      }
    }
    for (auto& c : sq) c *= 2;
    sq[0] -= 1;
    p = std::move(sq);
  }
  return p;
}

}  // namespace

RationalPoly expand_nested_cos(int n, SeriesVariant variant) {
  if (n < 1 || n > kMaxExpansionDepth) {
    throw ArgumentError("expansion depth must be in 1.." + std::to_string(kMaxExpansionDepth) +
                        ", got " + std::to_string(n));
  }
  const std::vector<mpz_class> integer = compose_integer(n, variant);
  const auto shift_per_power = static_cast<mp_bitcnt_t>(2 * n + 1);
  std::vector<BigRational> coeffs;
  coeffs.reserve(integer.size());
  for (std::size_t j = 0; j < integer.size(); ++j) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, shift_per_power * j);
    coeffs.emplace_back(integer[j], den);
  }
  return RationalPoly(std::move(coeffs));
}

std::vector<BigRational> maclaurin_error_profile(int n, int max_j) {
  if (max_j < 0) throw ArgumentError("max_j must be nonnegative");
  const RationalPoly poly = expand_nested_cos(n, SeriesVariant::circular);
  std::vector<BigRational> deviation;
  deviation.reserve(static_cast<std::size_t>(max_j) + 1);
  mpz_class factorial = 1;
  for (int j = 0; j <= max_j; ++j) {
    if (j > 0) factorial *= (2 * j - 1) * (2 * j);
    BigRational exact(1, factorial);
    exact.canonicalize();
    if (j % 2 == 1) exact = -exact;
    deviation.push_back(poly.coefficient(static_cast<std::size_t>(j)) - exact);
  }
  return deviation;
}

}  // namespace nested
