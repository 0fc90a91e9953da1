#pragma once

#include <string>
#include <string_view>

#include "nested/complex_value.hpp"

namespace nested {

// 15 significant digits, lowercase exponent, negative zero printed as 0.
std::string format_real(double v);

// "a" when the imaginary part is zero, otherwise "a+bi" / "a-bi" with no
// spaces; the real part is always present ("0+1.5i").
std::string format_complex(ComplexValue z);

/**
 * Parses "a", "bi", "a+bi", "a-bi" with decimal or scientific components.
 * A bare "i" / "-i" means unit imaginary. Throws ArgumentError otherwise.
 */
ComplexValue parse_complex(std::string_view text);

}  // namespace nested
