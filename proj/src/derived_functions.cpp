#include "nested/derived_functions.hpp"

#include <bit>
#include <cmath>

#include "nested/nested_core.hpp"

namespace nested {

namespace {

// Sign of x - period * round(x / period), the representative of x in
// [-period/2, period/2].
double reduced_sign(double x, double period) {
  const double r = x - period * std::round(x / period);
  return r < 0.0 ? -1.0 : 1.0;
}

// Real arguments get a correctly rounded real division; the library's
// complex division rescales and can be an ulp off.
ComplexValue reciprocal(ComplexValue z) {
  if (is_real(z)) return 1.0 / z.real();
  return 1.0 / z;
}

ComplexValue with_sign_of(ComplexValue value, ComplexValue arg) {
  if (is_real(arg) && arg.real() < 0.0) return -value;
  return value;
}

}  // namespace

ComplexValue nested_sin(ComplexValue x, const EvalConfig& cfg) {
  const ComplexValue c = nested_cos(x, cfg);
  const ComplexValue s = principal_sqrt(1.0 - c * c);
  if (is_real(x) && reduced_sign(x.real(), 2.0 * kPi) < 0.0) return -s;
  return s;
}

ComplexValue nested_asin(ComplexValue y, int depth, DepthPolicy policy) {
  return nested_acos(principal_sqrt(1.0 - y * y), depth, policy);
}

ComplexValue nested_tan(ComplexValue x, const EvalConfig& cfg) {
  const ComplexValue c = nested_cos(x, cfg);
  if (c == 0.0) throw PoleError("tan: nested cosine is exactly zero");
  const ComplexValue t = principal_sqrt(reciprocal(c * c) - 1.0);
  if (is_real(x) && reduced_sign(x.real(), kPi) < 0.0) return -t;
  return t;
}

ComplexValue nested_atan(ComplexValue y, int depth, DepthPolicy policy) {
  const ComplexValue q = 1.0 + y * y;
  if (q == 0.0) throw PoleError("atan: 1 + y^2 vanishes at y = +-i");
  return with_sign_of(nested_acos(reciprocal(principal_sqrt(q)), depth, policy), y);
}

ComplexValue nested_sinh(ComplexValue x, const EvalConfig& cfg) {
  const ComplexValue c = nested_cosh(x, cfg);
  return with_sign_of(principal_sqrt(c * c - 1.0), x);
}

ComplexValue nested_asinh(ComplexValue y, int depth, DepthPolicy policy) {
  return with_sign_of(nested_acosh(principal_sqrt(1.0 + y * y), depth, policy), y);
}

ComplexValue nested_tanh(ComplexValue x, const EvalConfig& cfg) {
  const ComplexValue c = nested_cosh(x, cfg);
  return with_sign_of(principal_sqrt(1.0 - reciprocal(c * c)), x);
}

ComplexValue nested_atanh(ComplexValue y, int depth, DepthPolicy policy) {
  const ComplexValue q = 1.0 - y * y;
  if (q == 0.0) throw PoleError("atanh: pole at y = +-1");
  return with_sign_of(nested_acosh(reciprocal(principal_sqrt(q)), depth, policy), y);
}

ComplexValue nested_log(ComplexValue y, int depth, DepthPolicy policy) {
  if (y == 0.0) throw ArgumentError("log: argument must be nonzero");
  const ComplexValue value = nested_acosh((y + reciprocal(y)) / 2.0, depth, policy);
  if (is_real(y) && y.real() > 0.0 && y.real() < 1.0) return -value;
  return value;
}

ComplexValue nested_exp(ComplexValue x, const EvalConfig& cfg) {
  return nested_cosh(x, cfg) + nested_sinh(x, cfg);
}

ComplexValue exp_limit(ComplexValue x, std::uint64_t n) {
  if (n == 0) throw ArgumentError("exp_limit: n must be at least 1");
  ComplexValue base = 1.0 + x / static_cast<double>(n);
  ComplexValue result = 1.0;
  for (std::uint64_t e = n; e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

ComplexValue log_limit(ComplexValue y, std::uint64_t n) {
  if (y == 0.0) throw ArgumentError("log_limit: argument must be nonzero");
  if (!std::has_single_bit(n)) {
    throw ArgumentError("log_limit: n must be a power of two, got " + std::to_string(n));
  }
  ComplexValue root = y;
  for (std::uint64_t m = n; m > 1; m >>= 1) root = principal_sqrt(root);
  return static_cast<double>(n) * (root - 1.0);
}

}  // namespace nested
