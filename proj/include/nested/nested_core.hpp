#pragma once

#include <vector>

#include "nested/complex_value.hpp"

namespace nested {

/// Chebyshev step T(x) = -1 + 2x^2, i.e. the cosine double-angle map.
ComplexValue t_step(ComplexValue x);

/// Inverse step sqrt((1 + y) / 2), principal root.
ComplexValue t_inv_step(ComplexValue y);

/// Truncated Maclaurin series of cos(x / 2^depth) with cfg.seed_order terms.
ComplexValue cos_seed(ComplexValue x, const EvalConfig& cfg);

/// Same as cos_seed with all terms positive (cosh series).
ComplexValue cosh_seed(ComplexValue x, const EvalConfig& cfg);

/**
 * Forward nested cosine: T applied cfg.depth times to cos_seed(x, cfg).
 *
 * The loop performs exactly the arithmetic of the half-angle recursion, so
 * the iterates carry the usual 4^n amplification of the seed rounding.
 * Throws OverflowError when an iterate is no longer finite; large complex
 * arguments need more depth.
 */
ComplexValue nested_cos(ComplexValue x, const EvalConfig& cfg);

/// Forward nested hyperbolic cosine, seeded with cosh_seed.
ComplexValue nested_cosh(ComplexValue x, const EvalConfig& cfg);

/// Seed followed by every iterate; entry j is y_j, the last entry the result.
std::vector<ComplexValue> nested_cos_trace(ComplexValue x, const EvalConfig& cfg);

/// g(y) = sqrt(2(1 - y)), the n = 0 approximation of arccos.
ComplexValue outer_g(ComplexValue y);

/// h(y) = sqrt(2(y - 1)), the n = 0 approximation of arccosh.
ComplexValue outer_h(ComplexValue y);

/// Principal nested-radical arccos: 2^depth * g(T^-1 applied depth times).
ComplexValue nested_acos(ComplexValue y, int depth, DepthPolicy policy = DepthPolicy::guarded);

/// Principal nested-radical arccosh: as nested_acos with h in place of g.
ComplexValue nested_acosh(ComplexValue y, int depth, DepthPolicy policy = DepthPolicy::guarded);

// The depth inverse-step iterates x_0..x_{depth-1} followed by the final
// scaled outer value.
std::vector<ComplexValue> nested_acos_trace(ComplexValue y, int depth,
                                            DepthPolicy policy = DepthPolicy::guarded);

}  // namespace nested
