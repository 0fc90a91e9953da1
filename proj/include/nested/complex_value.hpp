#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace nested {

using ComplexValue = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Depths beyond this need DepthPolicy::unguarded. Past n ~ 30 the 2^n factor
// in front of the outer radical amplifies rounding more than the truncation
// error shrinks.
inline constexpr int kDefaultMaxDepth = 30;
// 2^n must stay exact and the sign-sequence bit tricks need n < 64.
inline constexpr int kHardMaxDepth = 62;

enum class DepthPolicy { guarded, unguarded };

/// Invalid caller input: bad depth, seed order, branch index, domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematically well-posed call whose evaluation failed numerically.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An intermediate iterate left the floating-point range.
class OverflowError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Division by zero at a pole or singular input.
class PoleError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Nesting depth and number of Maclaurin terms in the innermost seed.
struct EvalConfig {
  int depth = 10;
  int seed_order = 2;
  DepthPolicy policy = DepthPolicy::guarded;

  void validate() const;
};

void validate_depth(int depth, DepthPolicy policy = DepthPolicy::guarded);

// Principal square root with the cut on the negative real axis. A zero
// imaginary part is treated as +0 regardless of its sign bit, so negative
// reals always map to +i*sqrt(|x|).
ComplexValue principal_sqrt(ComplexValue z);

// Principal logarithm, same signed-zero normalization as principal_sqrt.
ComplexValue principal_log(ComplexValue z);

inline bool is_real(ComplexValue z) { return z.imag() == 0.0; }

inline bool is_finite(ComplexValue z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace nested
