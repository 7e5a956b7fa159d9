#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "conway13/errors.hpp"
#include "conway13/numeric.hpp"

namespace conway13::ir {

// Expression DAG over the permitted closed-form operations (addition,
// subtraction, multiplication, division, exponentiation, principal root,
// principal Log) plus macro nodes (floor, ceiling, modulo, absolute
// value) that lowering rewrites into the permitted set. The special
// constants pi, e, i appear only in lowered expressions.

enum class ExprKind {
  constant,
  input,
  add,
  subtract,
  multiply,
  divide,
  power,
  root,
  log,
  floor,
  ceil,
  mod,
  abs,
  pi,
  euler,
  imaginary,
};

inline constexpr std::size_t kExprKindCount = 16;

const char* kind_name(ExprKind kind);
bool is_macro_kind(ExprKind kind);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable DAG node; shared subtrees are expressed by shared child
/// pointers. Binary kinds use both children, unary kinds only the left.
class Expr {
 public:
  ExprKind kind() const noexcept { return kind_; }
  const Rational& constant_value() const noexcept { return value_; }
  const std::string& input_name() const noexcept { return name_; }
  const ExprPtr& left() const noexcept { return left_; }
  const ExprPtr& right() const noexcept { return right_; }

  friend ExprPtr make_node(ExprKind kind, Rational value, std::string name, ExprPtr left,
                           ExprPtr right);

 private:
  Expr(ExprKind kind, Rational value, std::string name, ExprPtr left, ExprPtr right)
      : kind_(kind),
        value_(std::move(value)),
        name_(std::move(name)),
        left_(std::move(left)),
        right_(std::move(right)) {}

  ExprKind kind_;
  Rational value_;
  std::string name_;
  ExprPtr left_;
  ExprPtr right_;
};

// Node factories.
ExprPtr constant(Rational v);
ExprPtr constant(long v);
ExprPtr input(std::string name);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr subtract(ExprPtr a, ExprPtr b);
ExprPtr multiply(ExprPtr a, ExprPtr b);
ExprPtr divide(ExprPtr a, ExprPtr b);
ExprPtr power(ExprPtr base, ExprPtr exponent);
ExprPtr root(ExprPtr u);
ExprPtr log(ExprPtr u);
ExprPtr floor(ExprPtr u);
ExprPtr ceil(ExprPtr u);
ExprPtr mod(ExprPtr a, ExprPtr b);
ExprPtr abs(ExprPtr u);
ExprPtr pi_constant();
ExprPtr euler_constant();
ExprPtr imaginary_unit();

/// Toolkit functions expressible as formulas.
enum class FormulaTarget {
  equal,
  not_equal,
  greater_equal,
  minimum,
  trunc_trailing,
  digit_at,
  length,
  count_occurrences,
  rightmost_index,
  trunc_leading,
  cut_to_index,
  re_radix,
  resulting_sign,
  phase1,
  phase2,
  phase3,
};

std::optional<FormulaTarget> target_from_name(std::string_view name);
std::string_view target_name(FormulaTarget target);

/// Bound parameters of a built formula. Summations whose bound
/// depends on the length of the input are unrolled to m_max terms, each
/// gated so the formula is exact for all inputs of at most m_max digits.
struct FormulaParams {
  Rational epsilon{1};
  int base = 13;     // b (b1 for re_radix)
  int base_to = 10;  // b2 for re_radix
  int digit = 12;    // p (p1 for resulting_sign)
  int digit2 = 11;   // p2 for resulting_sign
  long index = 1;    // n for trunc_trailing / digit_at / trunc_leading
  int m_max = 3;     // static unroll bound
};

/// Macro-mode formula for the target; inputs are named "a"/"b" for the
/// logical indicators and "x" otherwise. Throws std::domain_error on
/// invalid parameters.
ExprPtr build_formula(FormulaTarget target, const FormulaParams& params);

/// Rewrites macro nodes into the permitted operations:
/// x mod y -> (y/2 pi i) Log(e^(2 pi i x / y)), floor/ceil via mod,
/// |x| -> root(x^2). Sharing-preserving: macro-free subtrees are
/// returned as-is.
ExprPtr lower(const ExprPtr& e);

using Bindings = std::map<std::string, Rational>;

/// Exact evaluation of a macro-mode expression. Macro nodes evaluate via
/// the exact primitives; the ceil(Log/Log) length pattern evaluates by
/// integer comparison against powers. Throws UnsupportedEval for
/// non-integer exponents or irrational subterms, std::domain_error for
/// division by zero / nonpositive modulus / unbound inputs.
Rational eval_exact(const ExprPtr& e, const Bindings& bindings);

/// Result of complex floating evaluation. ill_conditioned is set when any
/// Log evaluation happened within the guard band of its branch cut, i.e.
/// the result's floor-sensitive digits cannot be trusted.
struct ComplexResult {
  std::complex<double> value;
  bool ill_conditioned = false;
};

/// Evaluates a lowered (macro-free) expression in complex floating
/// arithmetic with `precision_digits` decimal digits (>= 16). The Log
/// node uses the 0 <= Im Log(e^(i theta)) < 2 pi branch convention; the
/// principal root is the power-1/2 branch consistent with it. guard_band
/// is the flagged distance from the branch cut, as a fraction of the
/// full turn.
ComplexResult eval_complex(const ExprPtr& e, const Bindings& bindings, int precision_digits,
                           double guard_band = 1e-6);

struct ExprStats {
  std::size_t total = 0;
  std::array<std::size_t, kExprKindCount> by_kind{};
  std::size_t depth = 0;

  std::size_t count(ExprKind kind) const { return by_kind[static_cast<std::size_t>(kind)]; }
};

/// Unique-node counts and depth of the DAG.
ExprStats stats(const ExprPtr& e);

enum class RenderFormat { ascii, latex };

/// Deterministic rendering; shared composite subtrees are emitted as
/// let-bindings so output size stays proportional to the DAG.
std::string render(const ExprPtr& e, RenderFormat format);

/// One-line summary of stats for CLI output.
std::string format_stats(const ExprStats& s);

}  // namespace conway13::ir
