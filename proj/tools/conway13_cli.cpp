// Command-line front end: evaluation, oracle comparison, differential
// fuzzing, formula rendering, and plot-data export for the base-13
// construction.
//
// Exit codes: 0 success/agreement, 1 differential mismatch,
// 2 usage/parse error, 3 internal invariant breach, 4 I/O failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "conway13/conway.hpp"
#include "conway13/differential.hpp"
#include "conway13/formula.hpp"
#include "conway13/oracle.hpp"

namespace {

using namespace conway13;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIo = 4;

struct EvalOptions {
  std::string literal;
  int base = 13;
  std::string format = "decimal";
  unsigned long scale = 0;
};

std::string render_value(const DecimalValue& v, const std::string& format) {
  if (format == "rational") {
    const Rational r = v.as_rational();
    if (is_integer(r)) return r.get_num().get_str(10);
    return r.get_str(10);
  }
  if (format == "digits") {
    if (v.sign() == 0) return "0";
    return format_literal(from_natural(encode_decimal(v), tridecimal::base));
  }
  return v.to_decimal_string();
}

DecimalValue evaluate(const EvalOptions& opt, bool through_oracle) {
  const SignedLiteral parsed = parse_signed_literal(opt.literal, Base(opt.base));
  Integer value = to_natural(parsed.magnitude).value();
  if (parsed.sign < 0) value = -value;
  const Z13Point point(std::move(value), opt.scale);
  if (through_oracle) return oracle::oracle_f(point.numerator());
  return eval_z13(point);
}

int cmd_eval(const EvalOptions& opt, bool through_oracle) {
  std::cout << render_value(evaluate(opt, through_oracle), opt.format) << "\n";
  return kExitOk;
}

struct DiffCmdOptions {
  int digits = -1;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string profile;
  unsigned jobs = 1;
  bool force = false;
  bool mutate_reradix = false;
};

int cmd_diff(const DiffCmdOptions& opt) {
  if (opt.digits < 0 && opt.samples == 0) {
    std::cerr << "diff: need --digits N or --samples K\n";
    return kExitUsage;
  }
  if (opt.digits > 7 && !opt.force) {
    std::cerr << "diff: --digits " << opt.digits
              << " exceeds the runtime guard (7); pass --force to run anyway\n";
    return kExitUsage;
  }
  DiffOptions options;
  options.jobs = opt.jobs;
  if (opt.mutate_reradix) options.rule = detail::ReRadixExponentRule::adjust_below_marker;
  DiffReport total;
  if (opt.digits >= 0) {
    const DiffReport r = diff_exhaustive(static_cast<unsigned>(opt.digits), options);
    std::cout << "exhaustive digits<=" << opt.digits << ": checked " << r.cases << " cases, "
              << r.mismatches << " mismatches\n";
    total.cases += r.cases;
    total.mismatches += r.mismatches;
    if (!total.first_counterexample) total.first_counterexample = r.first_counterexample;
  }
  if (opt.samples > 0) {
    std::optional<oracle::GeneratorProfile> profile;
    if (!opt.profile.empty()) profile = oracle::profile_from_name(opt.profile);
    const DiffReport r = diff_generated(opt.seed, opt.samples, profile, options);
    std::cout << "generated samples=" << opt.samples << " seed=" << opt.seed << " profile="
              << (opt.profile.empty() ? "all" : opt.profile) << ": checked " << r.cases
              << " cases, " << r.mismatches << " mismatches\n";
    total.cases += r.cases;
    total.mismatches += r.mismatches;
    if (!total.first_counterexample) total.first_counterexample = r.first_counterexample;
  }
  if (total.mismatches > 0) {
    const Integer& x = *total.first_counterexample;
    std::cout << "first counterexample: x=" << x.get_str(10) << " ("
              << format_literal(from_natural(Natural(Integer(abs(x))), tridecimal::base))
              << "_13) phase3=" << detail::phase3_with_rule(x, options.rule).to_decimal_string()
              << " oracle=" << oracle::oracle_f(x).to_decimal_string() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

struct RenderOptions {
  std::string target;
  std::string mode = "macro";
  std::string format = "ascii";
  int mmax = 3;
  int base = 13;
  int base_to = 10;
  int digit = -1;
  int digit2 = 11;
  long index = 1;
  bool stats = false;
  std::string out;
};

int cmd_render(const RenderOptions& opt) {
  const auto target = ir::target_from_name(opt.target);
  if (!target) {
    std::cerr << "render: unknown target '" << opt.target << "'\n";
    return kExitUsage;
  }
  ir::FormulaParams params;
  params.m_max = opt.mmax;
  params.base = opt.base;
  params.base_to = opt.base_to;
  params.index = opt.index;
  params.digit2 = opt.digit2;
  if (opt.digit >= 0)
    params.digit = opt.digit;
  else
    params.digit = *target == ir::FormulaTarget::resulting_sign ? 10 : 12;
  ir::ExprPtr formula = ir::build_formula(*target, params);
  if (opt.mode == "expanded") formula = ir::lower(formula);
  std::string text =
      ir::render(formula, opt.format == "latex" ? ir::RenderFormat::latex : ir::RenderFormat::ascii);
  if (opt.stats) text += "\n" + ir::format_stats(ir::stats(formula));
  text += "\n";
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
      std::cerr << "render: cannot open " << opt.out << " for writing\n";
      return kExitIo;
    }
    file << text;
    if (!file.good()) return kExitIo;
  }
  return kExitOk;
}

struct PlotOptions {
  unsigned long scale = 0;
  std::string range;
  std::string out = "-";
};

int cmd_plot(const PlotOptions& opt) {
  const std::size_t dots = opt.range.find("..");
  if (dots == std::string::npos) {
    std::cerr << "plot: --range must have the form a..b\n";
    return kExitUsage;
  }
  Integer lo, hi;
  try {
    lo = Integer(opt.range.substr(0, dots));
    hi = Integer(opt.range.substr(dots + 2));
  } catch (const std::invalid_argument&) {
    std::cerr << "plot: malformed --range bounds\n";
    return kExitUsage;
  }
  if (lo > hi) {
    std::cerr << "plot: empty range\n";
    return kExitUsage;
  }
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (opt.out != "-") {
    file.open(opt.out, std::ios::binary);
    if (!file) {
      std::cerr << "plot: cannot open " << opt.out << " for writing\n";
      return kExitIo;
    }
    out = &file;
  }
  *out << "x_num,x_exp,f_num,f_den\n";
  for (Integer y = lo; y <= hi; ++y) {
    const DecimalValue v = eval_z13(Z13Point(y, opt.scale));
    *out << y.get_str(10) << ',' << opt.scale << ',' << v.numerator().get_str(10) << ','
         << v.denominator().get_str(10) << "\n";
  }
  out->flush();
  if (!out->good()) {
    std::cerr << "plot: write failure\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluator for the base-13 function over Z and Z[1/13]"};
  app.require_subcommand(1);

  // A leading '-' on the literal would otherwise be taken for an option,
  // so eval/oracle collect unrecognized tokens and recover the literal
  // after parsing.
  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate the function at a tridecimal literal");
  eval->allow_extras();
  eval->add_option("literal", eval_opt.literal, "Input literal, grammar [+-]?[0-9A-Ca-c]+(_<radix>)?");
  eval->add_option("--base", eval_opt.base, "Radix used to parse the literal (default 13)");
  eval->add_option("--format", eval_opt.format, "Output format")
      ->check(CLI::IsMember({"rational", "decimal", "digits"}));
  eval->add_option("--scale", eval_opt.scale, "Interpret the input as literal / 13^n");

  EvalOptions oracle_opt;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Evaluate through the digit-surgery oracle");
  oracle_cmd->allow_extras();
  oracle_cmd->add_option("literal", oracle_opt.literal, "Input literal");
  oracle_cmd->add_option("--base", oracle_opt.base, "Radix used to parse the literal (default 13)");
  oracle_cmd->add_option("--format", oracle_opt.format, "Output format")
      ->check(CLI::IsMember({"rational", "decimal", "digits"}));
  oracle_cmd->add_option("--scale", oracle_opt.scale, "Interpret the input as literal / 13^n");

  DiffCmdOptions diff_opt;
  CLI::App* diff = app.add_subcommand("diff", "Differential check: construction vs oracle");
  diff->add_option("--digits", diff_opt.digits, "Exhaustive over all inputs of at most N digits");
  diff->add_option("--samples", diff_opt.samples, "Number of generated samples");
  diff->add_option("--seed", diff_opt.seed, "Base seed for generated samples");
  diff->add_option("--profile", diff_opt.profile,
                   "Generator profile (default: cycle through all)");
  diff->add_option("--jobs", diff_opt.jobs, "Parallel workers");
  diff->add_flag("--force", diff_opt.force, "Lift the --digits runtime guard");
  // Mutation-testing hook: runs the re-radix sum with the wrong exponent
  // order, which the sweep must catch. Hidden from --help.
  diff->add_flag("--mutate-reradix", diff_opt.mutate_reradix)->group("");

  RenderOptions render_opt;
  CLI::App* render = app.add_subcommand("render", "Render a toolkit formula");
  render->add_option("target", render_opt.target, "Formula target (E, N, GE, M, Ttrail, D, L, O, I, Tlead, K, X, S, f1, f2, f3)")
      ->required();
  render->add_option("--mode", render_opt.mode, "macro or expanded")
      ->check(CLI::IsMember({"macro", "expanded"}));
  render->add_option("--format", render_opt.format, "ascii or latex")
      ->check(CLI::IsMember({"ascii", "latex"}));
  render->add_option("--mmax", render_opt.mmax, "Static unroll bound for length-dependent sums");
  render->add_option("--base", render_opt.base, "Base b (b1 for X)");
  render->add_option("--base2", render_opt.base_to, "Base b2 for X");
  render->add_option("--digit", render_opt.digit, "Digit parameter p");
  render->add_option("--digit2", render_opt.digit2, "Second digit parameter (S)");
  render->add_option("--index", render_opt.index, "Index parameter n");
  render->add_flag("--stats", render_opt.stats, "Append node counts");
  render->add_option("--out", render_opt.out, "Output path (default stdout)");

  PlotOptions plot_opt;
  CLI::App* plot = app.add_subcommand("plot", "Export plot rows over numerator/13^scale");
  plot->add_option("--scale", plot_opt.scale, "Denominator exponent n (x = num/13^n)");
  plot->add_option("--range", plot_opt.range, "Numerator range a..b (inclusive)")->required();
  plot->add_option("--out", plot_opt.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto take_literal = [](CLI::App* sub, std::string& literal) -> bool {
    std::vector<std::string> extras = sub->remaining();
    if (literal.empty()) {
      if (extras.empty()) return false;
      literal = extras.front();
      extras.erase(extras.begin());
    }
    return extras.empty();
  };

  try {
    if (eval->parsed() || oracle_cmd->parsed()) {
      const bool through_oracle = oracle_cmd->parsed();
      EvalOptions& opt = through_oracle ? oracle_opt : eval_opt;
      if (!take_literal(through_oracle ? oracle_cmd : eval, opt.literal)) {
        std::cerr << (through_oracle ? "oracle" : "eval") << ": exactly one literal expected\n";
        return kExitUsage;
      }
      return cmd_eval(opt, through_oracle);
    }
    if (diff->parsed()) return cmd_diff(diff_opt);
    if (render->parsed()) return cmd_render(render_opt);
    if (plot->parsed()) return cmd_plot(plot_opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
