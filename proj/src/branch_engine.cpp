#include "nested/branch_engine.hpp"

#include <algorithm>
#include <cmath>

#include "nested/nested_core.hpp"

namespace nested {

SignSequence::SignSequence(std::vector<int> inner_first) : signs_(std::move(inner_first)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw ArgumentError("sign entries must be +1 or -1");
  }
}

std::vector<int> SignSequence::outer_first() const {
  return {signs_.rbegin(), signs_.rend()};
}

std::string SignSequence::to_string(bool inner_first_order) const {
  std::string out;
  out.reserve(signs_.size());
  for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
  if (!inner_first_order) std::reverse(out.begin(), out.end());
  return out;
}

std::int64_t branch_capacity(int width) {
  if (width < 1 || width > kHardMaxDepth) {
    throw ArgumentError("sign width must be in 1.." + std::to_string(kHardMaxDepth));
  }
  return std::int64_t{1} << (width - 1);
}

SignSequence gray_signs(std::int64_t k, int n) {
  const std::int64_t capacity = branch_capacity(n);
  if (k < 0 || k >= capacity) {
    throw ArgumentError("branch " + std::to_string(k) + " needs more than " +
                        std::to_string(n) + " radicals (valid range 0.." +
                        std::to_string(capacity - 1) + ")");
  }
  const auto bits = static_cast<std::uint64_t>(k);
  const std::uint64_t gray = bits ^ (bits >> 1);
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) signs[m] = ((gray >> m) & 1U) ? -1 : 1;
  return SignSequence(std::move(signs));
}

int gray_adjacent_distance(std::int64_t k, int n) {
  const SignSequence a = gray_signs(k, n);
  const SignSequence b = gray_signs(k + 1, n);
  int distance = 0;
  for (std::size_t m = 0; m < a.size(); ++m) distance += a.inner(m) != b.inner(m);
  return distance;
}

namespace {

template <typename Outer>
ComplexValue signed_chain(ComplexValue y, std::int64_t k, int depth, DepthPolicy policy,
                          Outer outer) {
  validate_depth(depth, policy);
  const std::int64_t capacity = branch_capacity(depth);
  if (k >= capacity || k <= -capacity) {
    throw ArgumentError("branch " + std::to_string(k) + " out of range for depth " +
                        std::to_string(depth) + " (|k| < " + std::to_string(capacity) + ")");
  }
  if (k < 0) return -signed_chain(y, -k - 1, depth, policy, outer);

  const SignSequence signs = gray_signs(k, depth);
  for (int m = 0; m < depth; ++m) {
    y = t_inv_step(y);
    if (signs.inner(m) < 0) y = -y;
  }
  return std::ldexp(1.0, depth) * outer(y);
}

}  // namespace

ComplexValue nested_acos_branch(ComplexValue y, std::int64_t k, int depth, DepthPolicy policy) {
  return signed_chain(y, k, depth, policy, outer_g);
}

ComplexValue nested_acosh_branch(ComplexValue y, std::int64_t k, int depth, DepthPolicy policy) {
  return signed_chain(y, k, depth, policy, outer_h);
}

double extract_branch(ComplexValue x) { return x.real() / kPi - 0.5; }

double branch_oracle_acos(double y, std::int64_t k) {
  if (!(y >= -1.0 && y <= 1.0)) {
    throw ArgumentError("branch oracle needs a real argument in [-1, 1]");
  }
  if (k < 0) throw ArgumentError("branch oracle needs k >= 0");
  const double principal = std::acos(y);
  const auto kd = static_cast<double>(k);
  return k % 2 == 0 ? kd * kPi + principal : (kd + 1.0) * kPi - principal;
}

}  // namespace nested
