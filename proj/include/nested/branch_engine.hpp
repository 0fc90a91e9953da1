#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nested/complex_value.hpp"

namespace nested {

/**
 * Radical signs selecting one branch of the nested inverse.
 *
 * Stored innermost-first: entry 0 multiplies the first inverse step applied
 * to the argument, entry n-1 the last radical before the outer function.
 * The printed form used in tables is outermost-first.
 */
class SignSequence {
 public:
  SignSequence() = default;
  explicit SignSequence(std::vector<int> inner_first);

  std::size_t size() const { return signs_.size(); }
  int inner(std::size_t m) const { return signs_.at(m); }
  const std::vector<int>& inner_first() const { return signs_; }
  std::vector<int> outer_first() const;

  // '+' / '-' characters, outermost first unless inner_first_order is set.
  std::string to_string(bool inner_first_order = false) const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;

 private:
  std::vector<int> signs_;
};

/// Number of branches addressable at this width: 2^(width - 1).
std::int64_t branch_capacity(int width);

/**
 * Gray-code sign pattern of branch k at width n.
 *
 * The outermost-first reading spells the n-bit reflected Gray code of k with
 * '+' for 0 and '-' for 1. The leading (outermost) sign is always '+', so k
 * must lie in [0, 2^(n-1)); anything else throws ArgumentError.
 */
SignSequence gray_signs(std::int64_t k, int n);

/// Hamming distance between the patterns of k and k + 1.
int gray_adjacent_distance(std::int64_t k, int n);

/**
 * Branch-k nested arccos. For k >= 0 every inverse step is multiplied by the
 * matching entry of gray_signs(k, depth) before 2^depth * g is applied; k = 0
 * reproduces nested_acos bit for bit. A negative k returns the negation of
 * branch -k-1. Requires |k| < 2^(depth-1).
 */
ComplexValue nested_acos_branch(ComplexValue y, std::int64_t k, int depth,
                                DepthPolicy policy = DepthPolicy::guarded);

/// Branch-k nested arccosh: the same signed chain closed with h instead of g.
ComplexValue nested_acosh_branch(ComplexValue y, std::int64_t k, int depth,
                                 DepthPolicy policy = DepthPolicy::guarded);

/// Branch number recovered from an arccos(0) value: Re(x)/pi - 1/2.
double extract_branch(ComplexValue x);

/**
 * Closed-form k-th preimage of y under cos for real y in [-1, 1], k >= 0:
 * k*pi + acos(y) for even k, (k+1)*pi - acos(y) for odd k. Matches the
 * ordering the Gray-code patterns produce.
 */
double branch_oracle_acos(double y, std::int64_t k);

}  // namespace nested
