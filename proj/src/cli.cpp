#include "nested/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <regex>

#include "nested/branch_engine.hpp"
#include "nested/format.hpp"
#include "nested/harness.hpp"
#include "nested/series_expander.hpp"

namespace nested {

namespace {

DepthPolicy policy_for(bool allow_deep) {
  return allow_deep ? DepthPolicy::unguarded : DepthPolicy::guarded;
}

Function require_function(const std::string& name) {
  if (auto fn = parse_function(name)) return *fn;
  std::string known;
  for (Function f : all_functions()) {
    if (!known.empty()) known += ", ";
    known += function_name(f);
  }
  throw ArgumentError("unknown function '" + name + "' (expected one of: " + known + ")");
}

std::pair<int, int> parse_depth_range(const std::string& text) {
  static const std::regex range(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, range)) {
    throw ArgumentError("depth range must look like A..B, got '" + text + "'");
  }
  const int first = std::stoi(m[1].str());
  const int last = std::stoi(m[2].str());
  if (first > last) throw ArgumentError("depth range " + text + " is empty");
  return {first, last};
}

void write_eval(std::ostream& out, Function fn, const EvalReport& r, bool json) {
  if (json) {
    nlohmann::ordered_json j;
    j["input"] = format_complex(r.input);
    j["value"] = format_complex(r.value);
    j["oracle"] = format_complex(r.oracle_value);
    j["abs_error"] = r.abs_error;
    j["rel_error"] = r.rel_error;
    j["depth"] = r.depth;
    j["seed_order"] = r.seed_order;
    j["branch"] = r.branch;
    out << j.dump() << '\n';
    return;
  }
  out << "function:   " << function_name(fn) << '\n'
      << "input:      " << format_complex(r.input) << '\n'
      << "depth:      " << r.depth << '\n'
      << "seed_order: " << r.seed_order << '\n'
      << "branch:     " << r.branch << '\n'
      << "value:      " << format_complex(r.value) << '\n'
      << "oracle:     " << format_complex(r.oracle_value) << '\n'
      << "abs_error:  " << format_real(r.abs_error) << '\n'
      << "rel_error:  " << format_real(r.rel_error) << '\n';
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nested-radical and Chebyshev-iteration evaluation of elementary functions"};
  app.name("nestedfx");
  app.require_subcommand(1);

  std::string fn_name;
  std::string arg_text;
  int depth = 10;
  int seed_order = 2;
  std::int64_t branch = 0;
  bool json = false;
  bool allow_deep = false;

  auto* eval = app.add_subcommand("eval", "Evaluate one function and compare with its oracle");
  eval->add_option("fn", fn_name, "Function name")->required();
  eval->add_option("arg", arg_text, "Argument: a, bi, a+bi or a-bi")->required();
  eval->add_option("--depth", depth, "Nesting depth n");
  eval->add_option("--seed-order", seed_order, "Maclaurin terms in the innermost seed (1-4)");
  eval->add_option("--branch", branch, "Branch index k (acos, acosh)");
  eval->add_flag("--json", json, "Print a single-line JSON object");
  eval->add_flag("--allow-deep", allow_deep, "Permit depths above 30");

  std::string depth_range;
  auto* conv = app.add_subcommand("converge", "Error against the oracle over a depth range");
  conv->add_option("fn", fn_name, "Function name")->required();
  conv->add_option("arg", arg_text, "Argument")->required();
  conv->add_option("--depths", depth_range, "Depth range A..B")->required();
  conv->add_option("--seed-order", seed_order, "Maclaurin terms in the innermost seed (1-4)");
  conv->add_flag("--allow-deep", allow_deep, "Permit depths above 30");

  std::int64_t k_max = 0;
  std::int64_t step = 1;
  int sweep_depth = 10;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Extracted branch of acos(0) for a range of k (CSV)");
  sweep->add_option("--kmax", k_max, "Largest branch index")->required();
  sweep->add_option("--step", step, "Branch stride");
  sweep->add_option("--depth", sweep_depth, "Nesting depth n");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");
  sweep->add_flag("--allow-deep", allow_deep, "Permit depths above 30");

  int table1_depth = 10;
  auto* table1 = app.add_subcommand("table1", "Branches 0..7 of acos(0)");
  table1->add_option("--depth", table1_depth, "Nesting depth n (>= 10)");
  table1->add_flag("--allow-deep", allow_deep, "Permit depths above 30");

  int table2_depth = 10;
  auto* table2 = app.add_subcommand("table2", "Branches 0..10 of acos(1) and acos(-1), over pi");
  table2->add_option("--depth", table2_depth, "Nesting depth n (>= 10)");
  table2->add_flag("--allow-deep", allow_deep, "Permit depths above 30");

  int expand_depth = 0;
  bool hyperbolic = false;
  auto* expand = app.add_subcommand("expand", "Exact Maclaurin coefficients of the nested cosine");
  expand->add_option("--depth", expand_depth, "Nesting depth n (1-12)")->required();
  expand->add_flag("--hyperbolic", hyperbolic, "Expand the hyperbolic variant");

  std::int64_t sign_branch = 0;
  int width = 0;
  bool inner_first = false;
  auto* signs = app.add_subcommand("signs", "Gray-code radical signs of a branch");
  signs->add_option("--branch", sign_branch, "Branch index k")->required();
  signs->add_option("--width", width, "Number of radicals n")->required();
  signs->add_flag("--inner-first", inner_first, "Print innermost sign first");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      const Function fn = require_function(fn_name);
      const EvalConfig cfg{depth, seed_order, policy_for(allow_deep)};
      const EvalReport report = evaluate_report(fn, parse_complex(arg_text), cfg, branch);
      write_eval(out, fn, report, json);
    } else if (*conv) {
      const Function fn = require_function(fn_name);
      const auto [first, last] = parse_depth_range(depth_range);
      write_convergence_csv(
          out, converge(fn, parse_complex(arg_text), first, last, seed_order, policy_for(allow_deep)));
    } else if (*sweep) {
      write_sweep_csv(out, sweep_branches(k_max, step, sweep_depth, threads, policy_for(allow_deep)));
    } else if (*table1) {
      write_table1(out, reproduce_table1(table1_depth, policy_for(allow_deep)), table1_depth);
    } else if (*table2) {
      write_table2(out, reproduce_table2(table2_depth, policy_for(allow_deep)), table2_depth);
    } else if (*expand) {
      const RationalPoly poly = expand_nested_cos(
          expand_depth, hyperbolic ? SeriesVariant::hyperbolic : SeriesVariant::circular);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        out << j << ',' << to_fraction_string(poly.coeffs()[j]) << '\n';
      }
    } else if (*signs) {
      out << gray_signs(sign_branch, width).to_string(inner_first) << '\n';
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace nested
