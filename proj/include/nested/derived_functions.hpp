#pragma once

#include <cstdint>

#include "nested/complex_value.hpp"

namespace nested {

// Functions built on the nested cosine kernels through square-root
// identities. For real arguments the sign lost in each square root is
// restored (period-reduced argument sign for sin/tan, argument sign for the
// odd hyperbolic and inverse functions); complex arguments get the principal
// root as is.

ComplexValue nested_sin(ComplexValue x, const EvalConfig& cfg);
ComplexValue nested_asin(ComplexValue y, int depth, DepthPolicy policy = DepthPolicy::guarded);

/// Throws PoleError when the nested cosine is exactly zero.
ComplexValue nested_tan(ComplexValue x, const EvalConfig& cfg);

/// Throws PoleError at y = +-i, where 1 + y^2 vanishes.
ComplexValue nested_atan(ComplexValue y, int depth, DepthPolicy policy = DepthPolicy::guarded);

ComplexValue nested_sinh(ComplexValue x, const EvalConfig& cfg);
ComplexValue nested_asinh(ComplexValue y, int depth, DepthPolicy policy = DepthPolicy::guarded);
ComplexValue nested_tanh(ComplexValue x, const EvalConfig& cfg);

/// Throws PoleError at y = +-1.
ComplexValue nested_atanh(ComplexValue y, int depth, DepthPolicy policy = DepthPolicy::guarded);

/**
 * Nested logarithm: nested_acosh((y + 1/y) / 2). The symmetric argument
 * cannot tell y from 1/y, so real y in (0, 1) gets the sign flipped.
 * Throws ArgumentError for y = 0.
 */
ComplexValue nested_log(ComplexValue y, int depth, DepthPolicy policy = DepthPolicy::guarded);

/// cosh + sinh with the sign-restored sinh.
ComplexValue nested_exp(ComplexValue x, const EvalConfig& cfg);

/// (1 + x/n)^n by binary exponentiation, n >= 1.
ComplexValue exp_limit(ComplexValue x, std::uint64_t n);

/// n (y^(1/n) - 1); n must be a power of two so the root is a chain of
/// principal square roots.
ComplexValue log_limit(ComplexValue y, std::uint64_t n);

}  // namespace nested
