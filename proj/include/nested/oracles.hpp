#pragma once

#include <cstdint>

#include "nested/complex_value.hpp"

namespace nested {

/// Closed-form arccos: pi/2 + i log(iz + sqrt(1 - z^2)), principal branches.
/// On the real cuts this returns +i*acosh(z) for z > 1, unlike std::acos.
ComplexValue ref_acos(ComplexValue z);

/**
 * Closed-form principal arccosh, log(z + sqrt(z + 1) sqrt(z - 1)).
 * Splitting the radical keeps the result in the right half plane for
 * Re z < 0, where log(z + sqrt(z^2 - 1)) with a principal root would not.
 */
ComplexValue ref_acosh(ComplexValue z);

/// Complex extension of the branch oracle: k*pi + ref_acos(y) for even k,
/// (k+1)*pi - ref_acos(y) for odd k, and the negation of branch -k-1 for k < 0.
ComplexValue ref_acos_branch(ComplexValue y, std::int64_t k);

}  // namespace nested
