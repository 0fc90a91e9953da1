#include "nested/complex_value.hpp"

#include <cmath>
#include <string>

namespace nested {

namespace {

ComplexValue positive_zero_imag(ComplexValue z) {
  if (z.imag() == 0.0) return {z.real(), 0.0};
  return z;
}

}  // namespace

void validate_depth(int depth, DepthPolicy policy) {
  if (depth < 1) {
    throw ArgumentError("depth must be at least 1, got " + std::to_string(depth));
  }
  if (depth > kHardMaxDepth) {
    throw ArgumentError("depth " + std::to_string(depth) + " exceeds the hard limit " +
                        std::to_string(kHardMaxDepth));
  }
  if (policy == DepthPolicy::guarded && depth > kDefaultMaxDepth) {
    throw ArgumentError("depth " + std::to_string(depth) + " exceeds " +
                        std::to_string(kDefaultMaxDepth) +
                        "; rounding dominates there, pass the deep-depth override to proceed");
  }
}

void EvalConfig::validate() const {
  validate_depth(depth, policy);
  if (seed_order < 1 || seed_order > 4) {
    throw ArgumentError("seed order must be in 1..4, got " + std::to_string(seed_order));
  }
}

ComplexValue principal_sqrt(ComplexValue z) { return std::sqrt(positive_zero_imag(z)); }

ComplexValue principal_log(ComplexValue z) { return std::log(positive_zero_imag(z)); }

}  // namespace nested
