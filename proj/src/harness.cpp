#include "nested/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <thread>

#include "nested/derived_functions.hpp"
#include "nested/format.hpp"
#include "nested/nested_core.hpp"
#include "nested/oracles.hpp"

namespace nested {

namespace {

struct FunctionEntry {
  Function fn;
  std::string_view name;
};

constexpr std::array<FunctionEntry, 17> kFunctions{{
    {Function::cos, "cos"},
    {Function::sin, "sin"},
    {Function::tan, "tan"},
    {Function::cosh, "cosh"},
    {Function::sinh, "sinh"},
    {Function::tanh, "tanh"},
    {Function::acos, "acos"},
    {Function::asin, "asin"},
    {Function::atan, "atan"},
    {Function::acosh, "acosh"},
    {Function::asinh, "asinh"},
    {Function::atanh, "atanh"},
    {Function::log, "log"},
    {Function::exp, "exp"},
    {Function::exp_limit, "exp-limit"},
    {Function::log_limit, "log-limit"},
    {Function::sin_shift, "sin-shift"},
}};

std::uint64_t limit_order(int depth) { return std::uint64_t{1} << depth; }

ComplexValue acosh_branch_oracle(ComplexValue y, std::int64_t k) {
  if (k == 0) return ref_acosh(y);
  if (k < 0) return -acosh_branch_oracle(y, -k - 1);
  // h = sqrt(2(y - 1)) is +-i times g, with the sign that keeps Re >= 0.
  const ComplexValue w = ComplexValue{0.0, 1.0} * ref_acos_branch(y, k);
  return w.real() < 0.0 ? -w : w;
}

}  // namespace

std::string_view function_name(Function fn) {
  for (const auto& entry : kFunctions) {
    if (entry.fn == fn) return entry.name;
  }
  return "?";
}

std::optional<Function> parse_function(std::string_view name) {
  for (const auto& entry : kFunctions) {
    if (entry.name == name) return entry.fn;
  }
  return std::nullopt;
}

const std::vector<Function>& all_functions() {
  static const std::vector<Function> fns = [] {
    std::vector<Function> out;
    for (const auto& entry : kFunctions) out.push_back(entry.fn);
    return out;
  }();
  return fns;
}

bool supports_branch(Function fn) { return fn == Function::acos || fn == Function::acosh; }

ComplexValue evaluate(Function fn, ComplexValue z, const EvalConfig& cfg, std::int64_t branch) {
  cfg.validate();
  if (branch != 0 && !supports_branch(fn)) {
    throw ArgumentError("branch selection is only available for acos and acosh");
  }
  switch (fn) {
    case Function::cos: return nested_cos(z, cfg);
    case Function::sin: return nested_sin(z, cfg);
    case Function::tan: return nested_tan(z, cfg);
    case Function::cosh: return nested_cosh(z, cfg);
    case Function::sinh: return nested_sinh(z, cfg);
    case Function::tanh: return nested_tanh(z, cfg);
    case Function::acos: return nested_acos_branch(z, branch, cfg.depth, cfg.policy);
    case Function::asin: return nested_asin(z, cfg.depth, cfg.policy);
    case Function::atan: return nested_atan(z, cfg.depth, cfg.policy);
    case Function::acosh: return nested_acosh_branch(z, branch, cfg.depth, cfg.policy);
    case Function::asinh: return nested_asinh(z, cfg.depth, cfg.policy);
    case Function::atanh: return nested_atanh(z, cfg.depth, cfg.policy);
    case Function::log: return nested_log(z, cfg.depth, cfg.policy);
    case Function::exp: return nested_exp(z, cfg);
    case Function::exp_limit: return exp_limit(z, limit_order(cfg.depth));
    case Function::log_limit: return log_limit(z, limit_order(cfg.depth));
    case Function::sin_shift: return nested_cos(z - kPi / 2.0, cfg);
  }
  throw ArgumentError("unknown function");
}

ComplexValue oracle(Function fn, ComplexValue z, std::int64_t branch) {
  switch (fn) {
    case Function::cos: return std::cos(z);
    case Function::sin:
    case Function::sin_shift: return std::sin(z);
    case Function::tan: return std::tan(z);
    case Function::cosh: return std::cosh(z);
    case Function::sinh: return std::sinh(z);
    case Function::tanh: return std::tanh(z);
    case Function::acos: return ref_acos_branch(z, branch);
    case Function::asin: return std::asin(z);
    case Function::atan: return std::atan(z);
    case Function::acosh: return acosh_branch_oracle(z, branch);
    case Function::asinh: return std::asinh(z);
    case Function::atanh: return std::atanh(z);
    case Function::log:
    case Function::log_limit: return principal_log(z);
    case Function::exp:
    case Function::exp_limit: return std::exp(z);
  }
  throw ArgumentError("unknown function");
}

EvalReport make_report(ComplexValue input, ComplexValue value, ComplexValue oracle_value,
                       const EvalConfig& cfg, std::int64_t branch) {
  EvalReport r;
  r.input = input;
  r.value = value;
  r.oracle_value = oracle_value;
  r.abs_error = std::abs(value - oracle_value);
  r.rel_error = r.abs_error / std::max(std::abs(oracle_value), 1.0);
  r.depth = cfg.depth;
  r.seed_order = cfg.seed_order;
  r.branch = branch;
  return r;
}

EvalReport evaluate_report(Function fn, ComplexValue z, const EvalConfig& cfg,
                           std::int64_t branch) {
  const ComplexValue value = evaluate(fn, z, cfg, branch);
  return make_report(z, value, oracle(fn, z, branch), cfg, branch);
}

std::vector<ConvergenceRow> converge(Function fn, ComplexValue z, int first_depth, int last_depth,
                                     int seed_order, DepthPolicy policy) {
  if (first_depth > last_depth) throw ArgumentError("empty depth range");
  const ComplexValue reference = oracle(fn, z);
  std::vector<ConvergenceRow> rows;
  for (int depth = first_depth; depth <= last_depth; ++depth) {
    const EvalConfig cfg{depth, seed_order, policy};
    ConvergenceRow row;
    row.depth = depth;
    row.value = evaluate(fn, z, cfg);
    row.abs_error = std::abs(row.value - reference);
    if (!rows.empty() && row.abs_error != 0.0) row.error_ratio = rows.back().abs_error / row.abs_error;
    rows.push_back(row);
  }
  return rows;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "depth,value,abs_error,error_ratio\n";
  for (const auto& row : rows) {
    out << row.depth << ',' << format_complex(row.value) << ',' << format_real(row.abs_error) << ','
        << format_real(row.error_ratio) << '\n';
  }
}

std::vector<SweepRow> sweep_branches(std::int64_t k_max, std::int64_t step, int depth,
                                     unsigned workers, DepthPolicy policy) {
  validate_depth(depth, policy);
  if (step < 1) throw ArgumentError("sweep step must be at least 1");
  if (k_max <= 0 || k_max >= branch_capacity(depth)) {
    throw ArgumentError("sweep needs 0 < kmax < 2^(depth-1) = " +
                        std::to_string(branch_capacity(depth)));
  }
  const auto count = static_cast<std::size_t>(k_max / step + 1);
  std::vector<SweepRow> rows(count);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto k = static_cast<std::int64_t>(i) * step;
      const double extracted = extract_branch(nested_acos_branch(0.0, k, depth, policy));
      rows[i] = {k, extracted, std::fabs(extracted - static_cast<double>(k))};
    }
  };

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    fill(0, count);
    return rows;
  }
  // Each worker owns a contiguous slice of the preallocated rows, so the
  // output order never depends on scheduling.
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t begin = 0; begin < count; begin += chunk) {
      pool.emplace_back(fill, begin, std::min(count, begin + chunk));
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "k,extracted,abs_dev\n";
  for (const auto& row : rows) {
    out << row.k << ',' << format_real(row.extracted) << ',' << format_real(row.abs_dev) << '\n';
  }
}

std::vector<Table1Row> reproduce_table1(int depth, DepthPolicy policy) {
  if (depth < 10) throw ArgumentError("table 1 needs depth >= 10");
  std::vector<Table1Row> rows;
  for (std::int64_t k = 0; k < 8; ++k) {
    Table1Row row;
    row.k = k;
    row.signs = gray_signs(k, depth).to_string();
    row.value = nested_acos_branch(0.0, k, depth, policy).real();
    row.converging = static_cast<double>(2 * k + 1) * kPi / 2.0;
    rows.push_back(row);
  }
  return rows;
}

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, int depth) {
  const int sign_width = std::max<int>(5, depth);
  out << std::left << std::setw(4) << "k" << std::setw(sign_width + 2) << "signs"
      << std::setw(22) << ("acos(0) n=" + std::to_string(depth)) << std::setw(22)
      << "converging value" << "multiple\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(4) << row.k << std::setw(sign_width + 2) << row.signs
        << std::setw(22) << format_real(row.value) << std::setw(22) << format_real(row.converging)
        << (2 * row.k + 1) << "pi/2\n";
  }
}

std::vector<Table2Row> reproduce_table2(int depth, DepthPolicy policy) {
  if (depth < 10) throw ArgumentError("table 2 needs depth >= 10");
  std::vector<Table2Row> rows;
  for (std::int64_t k = 0; k <= 10; ++k) {
    Table2Row row;
    row.k = k;
    row.at_plus_one = nested_acos_branch(1.0, k, depth, policy).real() / kPi;
    row.at_minus_one = nested_acos_branch(-1.0, k, depth, policy).real() / kPi;
    rows.push_back(row);
  }
  return rows;
}

void write_table2(std::ostream& out, const std::vector<Table2Row>& rows, int depth) {
  out << std::left << std::setw(6) << "k" << std::setw(22)
      << ("acos(1)/pi n=" + std::to_string(depth)) << "acos(-1)/pi n=" << depth << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(6) << row.k << std::setw(22) << format_real(row.at_plus_one)
        << format_real(row.at_minus_one) << '\n';
  }
}

}  // namespace nested
