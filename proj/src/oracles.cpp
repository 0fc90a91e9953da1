#include "nested/oracles.hpp"

namespace nested {

ComplexValue ref_acos(ComplexValue z) {
  const ComplexValue i{0.0, 1.0};
  return kPi / 2.0 + i * principal_log(i * z + principal_sqrt(1.0 - z * z));
}

ComplexValue ref_acosh(ComplexValue z) {
  return principal_log(z + principal_sqrt(z + 1.0) * principal_sqrt(z - 1.0));
}

ComplexValue ref_acos_branch(ComplexValue y, std::int64_t k) {
  if (k < 0) return -ref_acos_branch(y, -k - 1);
  const ComplexValue principal = ref_acos(y);
  const auto kd = static_cast<double>(k);
  return k % 2 == 0 ? kd * kPi + principal : (kd + 1.0) * kPi - principal;
}

}  // namespace nested
