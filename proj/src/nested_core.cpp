#include "nested/nested_core.hpp"

#include <cmath>
#include <string>

namespace nested {

namespace {

// (2j)! for j = 1..3
constexpr double kEvenFactorials[] = {1.0, 2.0, 24.0, 720.0};

ComplexValue maclaurin_seed(ComplexValue x, const EvalConfig& cfg, bool hyperbolic) {
  cfg.validate();
  const ComplexValue u = x / std::ldexp(1.0, cfg.depth);
  const ComplexValue u2 = u * u;
  ComplexValue power = 1.0;
  ComplexValue y = 1.0;
  for (int j = 1; j < cfg.seed_order; ++j) {
    power *= u2;
    const ComplexValue term = power / kEvenFactorials[j];
    if (hyperbolic || j % 2 == 0) {
      y += term;
    } else {
      y -= term;
    }
  }
  if (!is_finite(y)) throw OverflowError("seed is not finite; increase depth");
  return y;
}

ComplexValue forward(ComplexValue seed, int depth, std::vector<ComplexValue>* trace) {
  ComplexValue y = seed;
  if (trace) trace->push_back(y);
  for (int level = 1; level <= depth; ++level) {
    y = t_step(y);
    if (!is_finite(y)) {
      throw OverflowError("nested recursion overflowed at level " + std::to_string(level) +
                          " of " + std::to_string(depth) + "; increase depth");
    }
    if (trace) trace->push_back(y);
  }
  return y;
}

ComplexValue inverse_chain(ComplexValue y, int depth, std::vector<ComplexValue>* trace) {
  for (int level = 0; level < depth; ++level) {
    y = t_inv_step(y);
    if (trace) trace->push_back(y);
  }
  return y;
}

}  // namespace

ComplexValue t_step(ComplexValue x) { return -1.0 + 2.0 * (x * x); }

ComplexValue t_inv_step(ComplexValue y) { return principal_sqrt((y + 1.0) / 2.0); }

ComplexValue cos_seed(ComplexValue x, const EvalConfig& cfg) {
  return maclaurin_seed(x, cfg, false);
}

ComplexValue cosh_seed(ComplexValue x, const EvalConfig& cfg) {
  return maclaurin_seed(x, cfg, true);
}

ComplexValue nested_cos(ComplexValue x, const EvalConfig& cfg) {
  return forward(cos_seed(x, cfg), cfg.depth, nullptr);
}

ComplexValue nested_cosh(ComplexValue x, const EvalConfig& cfg) {
  return forward(cosh_seed(x, cfg), cfg.depth, nullptr);
}

std::vector<ComplexValue> nested_cos_trace(ComplexValue x, const EvalConfig& cfg) {
  std::vector<ComplexValue> trace;
  trace.reserve(static_cast<std::size_t>(cfg.depth) + 1);
  forward(cos_seed(x, cfg), cfg.depth, &trace);
  return trace;
}

ComplexValue outer_g(ComplexValue y) { return principal_sqrt(2.0 * (1.0 - y)); }

ComplexValue outer_h(ComplexValue y) { return principal_sqrt(2.0 * (y - 1.0)); }

ComplexValue nested_acos(ComplexValue y, int depth, DepthPolicy policy) {
  validate_depth(depth, policy);
  return std::ldexp(1.0, depth) * outer_g(inverse_chain(y, depth, nullptr));
}

ComplexValue nested_acosh(ComplexValue y, int depth, DepthPolicy policy) {
  validate_depth(depth, policy);
  return std::ldexp(1.0, depth) * outer_h(inverse_chain(y, depth, nullptr));
}

std::vector<ComplexValue> nested_acos_trace(ComplexValue y, int depth, DepthPolicy policy) {
  validate_depth(depth, policy);
  std::vector<ComplexValue> trace;
  trace.reserve(static_cast<std::size_t>(depth) + 1);
  const ComplexValue inner = inverse_chain(y, depth, &trace);
  trace.push_back(std::ldexp(1.0, depth) * outer_g(inner));
  return trace;
}

}  // namespace nested
