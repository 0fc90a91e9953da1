#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nested/branch_engine.hpp"
#include "nested/complex_value.hpp"

namespace nested {

enum class Function {
  cos, sin, tan, cosh, sinh, tanh,
  acos, asin, atan, acosh, asinh, atanh,
  log, exp, exp_limit, log_limit, sin_shift,
};

/// CLI spelling, e.g. "exp-limit".
std::string_view function_name(Function fn);
std::optional<Function> parse_function(std::string_view name);
const std::vector<Function>& all_functions();

/// Whether the function honours a nonzero branch index (acos, acosh).
bool supports_branch(Function fn);

/**
 * Evaluates fn through the nested formulas. Inverse functions read only
 * cfg.depth; exp-limit and log-limit use n = 2^cfg.depth; sin-shift is
 * nested_cos(x - pi/2). A nonzero branch on any other function throws
 * ArgumentError.
 */
ComplexValue evaluate(Function fn, ComplexValue z, const EvalConfig& cfg, std::int64_t branch = 0);

/// Closed-form reference value the nested result is measured against.
ComplexValue oracle(Function fn, ComplexValue z, std::int64_t branch = 0);

struct EvalReport {
  ComplexValue input;
  ComplexValue value;
  ComplexValue oracle_value;
  double abs_error = 0.0;
  double rel_error = 0.0;
  int depth = 0;
  int seed_order = 0;
  std::int64_t branch = 0;
};

/// abs_error = |value - oracle|, rel_error = abs_error / max(|oracle|, 1).
EvalReport make_report(ComplexValue input, ComplexValue value, ComplexValue oracle_value,
                       const EvalConfig& cfg, std::int64_t branch);

EvalReport evaluate_report(Function fn, ComplexValue z, const EvalConfig& cfg,
                           std::int64_t branch = 0);

struct ConvergenceRow {
  int depth = 0;
  ComplexValue value;
  double abs_error = 0.0;
  // Previous abs_error over this one; 0 on the first row and whenever this
  // row's error is exactly zero.
  double error_ratio = 0.0;
};

/// One row per depth in [first_depth, last_depth], ascending.
std::vector<ConvergenceRow> converge(Function fn, ComplexValue z, int first_depth, int last_depth,
                                     int seed_order = 2, DepthPolicy policy = DepthPolicy::guarded);

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

struct SweepRow {
  std::int64_t k = 0;
  double extracted = 0.0;
  double abs_dev = 0.0;
};

/**
 * Branch extraction at y = 0 for k = 0, step, 2*step, ... <= k_max.
 * Work is split over `workers` threads (0 picks the hardware count); rows
 * come back in ascending k regardless.
 */
std::vector<SweepRow> sweep_branches(std::int64_t k_max, std::int64_t step, int depth,
                                     unsigned workers = 0,
                                     DepthPolicy policy = DepthPolicy::guarded);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct Table1Row {
  std::int64_t k = 0;
  std::string signs;  // outermost first, full depth
  double value = 0.0;
  double converging = 0.0;  // (2k+1) pi / 2
};

/// Branches 0..7 of arccos(0).
std::vector<Table1Row> reproduce_table1(int depth, DepthPolicy policy = DepthPolicy::guarded);
void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, int depth);

struct Table2Row {
  std::int64_t k = 0;
  double at_plus_one = 0.0;   // Re nested_acos_branch(1, k) / pi
  double at_minus_one = 0.0;  // Re nested_acos_branch(-1, k) / pi
};

/// Branches 0..10 of arccos(+1) and arccos(-1), in units of pi.
std::vector<Table2Row> reproduce_table2(int depth, DepthPolicy policy = DepthPolicy::guarded);
void write_table2(std::ostream& out, const std::vector<Table2Row>& rows, int depth);

}  // namespace nested
