#include "conway13/formula.hpp"

#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace conway13::ir {

const char* kind_name(ExprKind kind) {
  switch (kind) {
    case ExprKind::constant: return "constant";
    case ExprKind::input: return "input";
    case ExprKind::add: return "add";
    case ExprKind::subtract: return "subtract";
    case ExprKind::multiply: return "multiply";
    case ExprKind::divide: return "divide";
    case ExprKind::power: return "power";
    case ExprKind::root: return "root";
    case ExprKind::log: return "log";
    case ExprKind::floor: return "floor";
    case ExprKind::ceil: return "ceil";
    case ExprKind::mod: return "mod";
    case ExprKind::abs: return "abs";
    case ExprKind::pi: return "pi";
    case ExprKind::euler: return "e";
    case ExprKind::imaginary: return "i";
  }
  return "?";
}

bool is_macro_kind(ExprKind kind) {
  return kind == ExprKind::floor || kind == ExprKind::ceil || kind == ExprKind::mod ||
         kind == ExprKind::abs;
}

ExprPtr make_node(ExprKind kind, Rational value, std::string name, ExprPtr left, ExprPtr right) {
  return ExprPtr(new Expr(kind, std::move(value), std::move(name), std::move(left), std::move(right)));
}

ExprPtr constant(Rational v) { return make_node(ExprKind::constant, std::move(v), {}, nullptr, nullptr); }
ExprPtr constant(long v) { return constant(Rational(v)); }
ExprPtr input(std::string name) {
  return make_node(ExprKind::input, Rational(0), std::move(name), nullptr, nullptr);
}

namespace {
ExprPtr unary(ExprKind k, ExprPtr u) { return make_node(k, Rational(0), {}, std::move(u), nullptr); }
ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
  return make_node(k, Rational(0), {}, std::move(a), std::move(b));
}
}  // namespace

ExprPtr add(ExprPtr a, ExprPtr b) { return binary(ExprKind::add, std::move(a), std::move(b)); }
ExprPtr subtract(ExprPtr a, ExprPtr b) { return binary(ExprKind::subtract, std::move(a), std::move(b)); }
ExprPtr multiply(ExprPtr a, ExprPtr b) { return binary(ExprKind::multiply, std::move(a), std::move(b)); }
ExprPtr divide(ExprPtr a, ExprPtr b) { return binary(ExprKind::divide, std::move(a), std::move(b)); }
ExprPtr power(ExprPtr base, ExprPtr exponent) {
  return binary(ExprKind::power, std::move(base), std::move(exponent));
}
ExprPtr root(ExprPtr u) { return unary(ExprKind::root, std::move(u)); }
ExprPtr log(ExprPtr u) { return unary(ExprKind::log, std::move(u)); }
ExprPtr floor(ExprPtr u) { return unary(ExprKind::floor, std::move(u)); }
ExprPtr ceil(ExprPtr u) { return unary(ExprKind::ceil, std::move(u)); }
ExprPtr mod(ExprPtr a, ExprPtr b) { return binary(ExprKind::mod, std::move(a), std::move(b)); }
ExprPtr abs(ExprPtr u) { return unary(ExprKind::abs, std::move(u)); }
ExprPtr pi_constant() { return make_node(ExprKind::pi, Rational(0), {}, nullptr, nullptr); }
ExprPtr euler_constant() { return make_node(ExprKind::euler, Rational(0), {}, nullptr, nullptr); }
ExprPtr imaginary_unit() { return make_node(ExprKind::imaginary, Rational(0), {}, nullptr, nullptr); }

std::optional<FormulaTarget> target_from_name(std::string_view name) {
  if (name == "E" || name == "equal") return FormulaTarget::equal;
  if (name == "N" || name == "not_equal") return FormulaTarget::not_equal;
  if (name == "GE" || name == "greater_equal") return FormulaTarget::greater_equal;
  if (name == "M" || name == "minimum") return FormulaTarget::minimum;
  if (name == "Ttrail" || name == "Tt" || name == "trunc_trailing")
    return FormulaTarget::trunc_trailing;
  if (name == "D" || name == "digit_at") return FormulaTarget::digit_at;
  if (name == "L" || name == "length") return FormulaTarget::length;
  if (name == "O" || name == "count_occurrences") return FormulaTarget::count_occurrences;
  if (name == "I" || name == "rightmost_index") return FormulaTarget::rightmost_index;
  if (name == "Tlead" || name == "Tl" || name == "trunc_leading")
    return FormulaTarget::trunc_leading;
  if (name == "K" || name == "cut_to_index") return FormulaTarget::cut_to_index;
  if (name == "X" || name == "re_radix") return FormulaTarget::re_radix;
  if (name == "S" || name == "resulting_sign") return FormulaTarget::resulting_sign;
  if (name == "f1" || name == "phase1") return FormulaTarget::phase1;
  if (name == "f2" || name == "phase2") return FormulaTarget::phase2;
  if (name == "f3" || name == "phase3") return FormulaTarget::phase3;
  return std::nullopt;
}

std::string_view target_name(FormulaTarget target) {
  switch (target) {
    case FormulaTarget::equal: return "E";
    case FormulaTarget::not_equal: return "N";
    case FormulaTarget::greater_equal: return "GE";
    case FormulaTarget::minimum: return "M";
    case FormulaTarget::trunc_trailing: return "Ttrail";
    case FormulaTarget::digit_at: return "D";
    case FormulaTarget::length: return "L";
    case FormulaTarget::count_occurrences: return "O";
    case FormulaTarget::rightmost_index: return "I";
    case FormulaTarget::trunc_leading: return "Tlead";
    case FormulaTarget::cut_to_index: return "K";
    case FormulaTarget::re_radix: return "X";
    case FormulaTarget::resulting_sign: return "S";
    case FormulaTarget::phase1: return "f1";
    case FormulaTarget::phase2: return "f2";
    case FormulaTarget::phase3: return "f3";
  }
  return "?";
}

namespace {

// Assembles the toolkit formulas with the length-bounded summations
// unrolled to m_max gated terms. Repeated subterms (digit selections,
// truncations, lengths, occurrence counts) are shared through caches so
// the result is a compact DAG.
class Builder {
 public:
  explicit Builder(const FormulaParams& params) : p_(params) {
    if (p_.epsilon <= 0) throw std::domain_error("build_formula: epsilon must be positive");
    if (p_.base < 2 || p_.base_to < 2) throw std::domain_error("build_formula: base must be >= 2");
    if (p_.m_max < 1) throw std::domain_error("build_formula: m_max must be >= 1");
    if (p_.index < 0) throw std::domain_error("build_formula: index must be nonnegative");
    eps1_ = constant(Rational(p_.epsilon + 1));
    half_ = constant(Rational(1, 2));
  }

  void require_digit(int d) const {
    if (d < 0 || d >= p_.base) throw std::domain_error("build_formula: digit out of range for base");
  }

  ExprPtr cint(long v) {
    auto it = int_cache_.find(v);
    if (it != int_cache_.end()) return it->second;
    ExprPtr node = constant(v);
    int_cache_.emplace(v, node);
    return node;
  }

  // Negation via subtraction from zero, matching the shape of the
  // indicator definitions.
  ExprPtr neg(ExprPtr u) { return subtract(cint(0), std::move(u)); }

  ExprPtr eq(ExprPtr a, ExprPtr b) {
    return ir::floor(power(eps1_, neg(ir::abs(subtract(std::move(a), std::move(b))))));
  }

  ExprPtr neq(ExprPtr a, ExprPtr b) { return subtract(cint(1), eq(std::move(a), std::move(b))); }

  ExprPtr ge(ExprPtr a, ExprPtr b) {
    return ir::floor(
        add(half_, divide(cint(1), add(cint(1), power(eps1_, subtract(std::move(b), std::move(a)))))));
  }

  ExprPtr minimum(const ExprPtr& a, const ExprPtr& b) {
    return subtract(add(multiply(a, ge(b, a)), multiply(b, ge(a, b))), multiply(a, eq(a, b)));
  }

  ExprPtr base_power(int radix, long k) {
    auto key = std::pair<int, long>(radix, k);
    auto it = pow_cache_.find(key);
    if (it != pow_cache_.end()) return it->second;
    ExprPtr node = power(cint(radix), cint(k));
    pow_cache_.emplace(key, node);
    return node;
  }

  ExprPtr trunc(const ExprPtr& u, long n) {
    auto key = std::pair<const Expr*, long>(u.get(), n);
    auto it = trunc_cache_.find(key);
    if (it != trunc_cache_.end()) return it->second;
    ExprPtr node = ir::floor(divide(u, base_power(p_.base, n)));
    trunc_cache_.emplace(key, node);
    return node;
  }

  ExprPtr digit(const ExprPtr& u, long n) {
    auto key = std::pair<const Expr*, long>(u.get(), n);
    auto it = digit_cache_.find(key);
    if (it != digit_cache_.end()) return it->second;
    ExprPtr node = subtract(trunc(u, n), multiply(cint(p_.base), trunc(u, n + 1)));
    digit_cache_.emplace(key, node);
    return node;
  }

  ExprPtr len(const ExprPtr& u) {
    auto it = len_cache_.find(u.get());
    if (it != len_cache_.end()) return it->second;
    ExprPtr node = ir::ceil(divide(ir::log(add(u, cint(1))), ir::log(cint(p_.base))));
    len_cache_.emplace(u.get(), node);
    return node;
  }

  ExprPtr sum(std::vector<ExprPtr> terms) {
    if (terms.empty()) return cint(0);
    ExprPtr acc = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) acc = add(std::move(acc), terms[i]);
    return acc;
  }

  ExprPtr occurrences(const ExprPtr& u, int p) {
    auto key = std::pair<const Expr*, int>(u.get(), p);
    auto it = occ_cache_.find(key);
    if (it != occ_cache_.end()) return it->second;
    std::vector<ExprPtr> terms;
    for (int k = 0; k < p_.m_max; ++k)
      terms.push_back(
          multiply(eq(digit(u, k), cint(p)), ge(subtract(len(u), cint(1)), cint(k))));
    ExprPtr node = sum(std::move(terms));
    occ_cache_.emplace(key, node);
    return node;
  }

  ExprPtr rightmost(const ExprPtr& u, int p) {
    auto key = std::pair<const Expr*, int>(u.get(), p);
    auto it = ridx_cache_.find(key);
    if (it != ridx_cache_.end()) return it->second;
    std::vector<ExprPtr> terms;
    for (int k = 1; k <= p_.m_max; ++k)
      terms.push_back(multiply(eq(occurrences(trunc(u, k), p), occurrences(u, p)),
                               ge(len(u), cint(k))));
    ExprPtr node = sum(std::move(terms));
    ridx_cache_.emplace(key, node);
    return node;
  }

  ExprPtr lead_trunc(const ExprPtr& u, long n) {
    std::vector<ExprPtr> terms;
    for (int k = 0; k < p_.m_max; ++k)
      terms.push_back(multiply(multiply(base_power(p_.base, k), digit(u, k)),
                               ge(subtract(len(u), cint(n + 1)), cint(k))));
    return sum(std::move(terms));
  }

  ExprPtr cut(const ExprPtr& u, int p) {
    const ExprPtr idx = rightmost(u, p);
    std::vector<ExprPtr> terms;
    for (int k = 0; k <= p_.m_max; ++k)
      terms.push_back(
          multiply(multiply(base_power(p_.base, k), digit(u, k)), ge(idx, cint(k))));
    return sum(std::move(terms));
  }

  ExprPtr re_radix(const ExprPtr& u, int p) {
    const ExprPtr idx = rightmost(u, p);
    std::vector<ExprPtr> terms;
    for (int k = 0; k < p_.m_max; ++k) {
      const ExprPtr dk = digit(u, k);
      const ExprPtr exponent = subtract(subtract(cint(k), idx), ge(cint(k), idx));
      terms.push_back(multiply(
          multiply(multiply(neq(dk, cint(p)), dk), power(cint(p_.base_to), exponent)),
          ge(subtract(len(u), cint(1)), cint(k))));
    }
    return sum(std::move(terms));
  }

  ExprPtr sign_fn(const ExprPtr& u, int p1, int p2) {
    return subtract(eq(occurrences(u, p1), cint(1)), eq(occurrences(u, p2), cint(1)));
  }

  ExprPtr f1(const ExprPtr& x) {
    const ExprPtr magnitude = ir::abs(x);
    return minimum(cut(magnitude, 10), cut(magnitude, 11));
  }

  ExprPtr f2(const ExprPtr& x) {
    const ExprPtr f1x = f1(x);
    return multiply(f1x, eq(occurrences(f1x, 12), cint(1)));
  }

  ExprPtr f3(const ExprPtr& x) {
    const ExprPtr f2x = f2(x);
    return multiply(sign_fn(f2x, 10, 11), re_radix(lead_trunc(f2x, 1), 12));
  }

  const FormulaParams& params() const { return p_; }

 private:
  struct PairHash {
    template <class A, class B>
    std::size_t operator()(const std::pair<A, B>& p) const {
      return std::hash<A>()(p.first) * 1000003u ^ std::hash<B>()(p.second);
    }
  };

  FormulaParams p_;
  ExprPtr eps1_;
  ExprPtr half_;
  std::unordered_map<long, ExprPtr> int_cache_;
  std::unordered_map<std::pair<int, long>, ExprPtr, PairHash> pow_cache_;
  std::unordered_map<std::pair<const Expr*, long>, ExprPtr, PairHash> trunc_cache_;
  std::unordered_map<std::pair<const Expr*, long>, ExprPtr, PairHash> digit_cache_;
  std::unordered_map<const Expr*, ExprPtr> len_cache_;
  std::unordered_map<std::pair<const Expr*, int>, ExprPtr, PairHash> occ_cache_;
  std::unordered_map<std::pair<const Expr*, int>, ExprPtr, PairHash> ridx_cache_;
};

}  // namespace

ExprPtr build_formula(FormulaTarget target, const FormulaParams& params) {
  FormulaParams effective = params;
  if (target == FormulaTarget::phase1 || target == FormulaTarget::phase2 ||
      target == FormulaTarget::phase3) {
    effective.base = 13;
    effective.base_to = 10;
  }
  Builder b(effective);
  switch (target) {
    case FormulaTarget::equal: return b.eq(input("a"), input("b"));
    case FormulaTarget::not_equal: return b.neq(input("a"), input("b"));
    case FormulaTarget::greater_equal: return b.ge(input("a"), input("b"));
    case FormulaTarget::minimum: {
      const ExprPtr a = input("a"), bb = input("b");
      return b.minimum(a, bb);
    }
    case FormulaTarget::trunc_trailing: return b.trunc(input("x"), effective.index);
    case FormulaTarget::digit_at: return b.digit(input("x"), effective.index);
    case FormulaTarget::length: return b.len(input("x"));
    case FormulaTarget::count_occurrences:
      b.require_digit(effective.digit);
      return b.occurrences(input("x"), effective.digit);
    case FormulaTarget::rightmost_index:
      b.require_digit(effective.digit);
      return b.rightmost(input("x"), effective.digit);
    case FormulaTarget::trunc_leading: return b.lead_trunc(input("x"), effective.index);
    case FormulaTarget::cut_to_index:
      b.require_digit(effective.digit);
      return b.cut(input("x"), effective.digit);
    case FormulaTarget::re_radix:
      b.require_digit(effective.digit);
      return b.re_radix(input("x"), effective.digit);
    case FormulaTarget::resulting_sign:
      b.require_digit(effective.digit);
      b.require_digit(effective.digit2);
      return b.sign_fn(input("x"), effective.digit, effective.digit2);
    case FormulaTarget::phase1: return b.f1(input("x"));
    case FormulaTarget::phase2: return b.f2(input("x"));
    case FormulaTarget::phase3: return b.f3(input("x"));
  }
  throw std::domain_error("build_formula: unknown target");
}

namespace {

class Lowerer {
 public:
  Lowerer() {
    one_ = constant(1l);
    // 2 pi i, shared by every lowered mod.
    tau_i_ = multiply(constant(2l), multiply(pi_constant(), imaginary_unit()));
  }

  ExprPtr run(const ExprPtr& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    ExprPtr result = rewrite(e);
    memo_.emplace(e.get(), std::move(result));
    return memo_[e.get()];
  }

 private:
  // x mod y -> (y / 2 pi i) Log(e^(2 pi i x / y))
  ExprPtr lowered_mod(ExprPtr x, ExprPtr y) {
    return multiply(divide(y, tau_i_),
                    ir::log(power(euler_constant(), divide(multiply(tau_i_, std::move(x)), y))));
  }

  ExprPtr rewrite(const ExprPtr& e) {
    const ExprPtr left = e->left() ? run(e->left()) : nullptr;
    const ExprPtr right = e->right() ? run(e->right()) : nullptr;
    switch (e->kind()) {
      case ExprKind::abs:
        return root(power(left, constant(2l)));
      case ExprKind::floor:
        return subtract(left, lowered_mod(left, one_));
      case ExprKind::ceil: {
        const ExprPtr negated = subtract(constant(0l), left);
        return add(left, lowered_mod(negated, one_));
      }
      case ExprKind::mod:
        return lowered_mod(left, right);
      default:
        break;
    }
    if (left == e->left() && right == e->right()) return e;
    return make_node(e->kind(), e->constant_value(), e->input_name(), left, right);
  }

  std::unordered_map<const Expr*, ExprPtr> memo_;
  ExprPtr one_;
  ExprPtr tau_i_;
};

}  // namespace

ExprPtr lower(const ExprPtr& e) {
  Lowerer lowerer;
  return lowerer.run(e);
}

namespace {

constexpr long kMaxExactExponent = 50'000'000;

class ExactEvaluator {
 public:
  ExactEvaluator(const Bindings& bindings) : bindings_(bindings) {}

  Rational eval(const ExprPtr& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    Rational v = compute(e);
    memo_.emplace(e.get(), v);
    return v;
  }

 private:
  Rational compute(const ExprPtr& e) {
    switch (e->kind()) {
      case ExprKind::constant:
        return e->constant_value();
      case ExprKind::input: {
        auto it = bindings_.find(e->input_name());
        if (it == bindings_.end())
          throw std::domain_error("eval_exact: unbound input " + e->input_name());
        return it->second;
      }
      case ExprKind::add: return eval(e->left()) + eval(e->right());
      case ExprKind::subtract: return eval(e->left()) - eval(e->right());
      case ExprKind::multiply: return eval(e->left()) * eval(e->right());
      case ExprKind::divide: {
        const Rational d = eval(e->right());
        if (sgn(d) == 0) throw std::domain_error("eval_exact: division by zero");
        return eval(e->left()) / d;
      }
      case ExprKind::power: {
        const Rational base = eval(e->left());
        const Rational exponent = eval(e->right());
        if (!is_integer(exponent))
          throw UnsupportedEval("eval_exact: non-integer exponent in exact mode");
        const Integer& n = exponent.get_num();
        if (!n.fits_slong_p() || n > kMaxExactExponent || n < -kMaxExactExponent)
          throw UnsupportedEval("eval_exact: exponent magnitude beyond exact evaluation");
        return pow_int(base, n.get_si());
      }
      case ExprKind::floor: return Rational(conway13::floor(eval(e->left())));
      case ExprKind::ceil: {
        // The length pattern ceil(Log(u)/Log(v)) evaluates by comparing
        // u against powers of v; Log alone has no exact value.
        const Expr* child = e->left().get();
        if (child->kind() == ExprKind::divide && child->left()->kind() == ExprKind::log &&
            child->right()->kind() == ExprKind::log) {
          const Rational u = eval(child->left()->left());
          const Rational v = eval(child->right()->left());
          if (u < 1 || v <= 1)
            throw UnsupportedEval("eval_exact: ceil(Log/Log) needs operand >= 1 and base > 1");
          unsigned long t = 0;
          Rational p(1);
          while (p < u) {
            p *= v;
            ++t;
          }
          return Rational(static_cast<unsigned long>(t));
        }
        return Rational(conway13::ceil(eval(e->left())));
      }
      case ExprKind::mod: return mod_exact(eval(e->left()), eval(e->right()));
      case ExprKind::abs: return abs_exact(eval(e->left()));
      case ExprKind::root:
        throw UnsupportedEval("eval_exact: principal root has no exact rational value");
      case ExprKind::log:
        throw UnsupportedEval("eval_exact: Log has no exact rational value");
      case ExprKind::pi:
      case ExprKind::euler:
      case ExprKind::imaginary:
        throw UnsupportedEval("eval_exact: irrational constant");
    }
    throw std::domain_error("eval_exact: unknown node kind");
  }

  const Bindings& bindings_;
  std::unordered_map<const Expr*, Rational> memo_;
};

}  // namespace

Rational eval_exact(const ExprPtr& e, const Bindings& bindings) {
  return ExactEvaluator(bindings).eval(e);
}

namespace {

struct StatsWalker {
  ExprStats result;
  std::unordered_map<const Expr*, std::size_t> depth;

  std::size_t visit(const ExprPtr& e) {
    auto it = depth.find(e.get());
    if (it != depth.end()) return it->second;
    ++result.total;
    ++result.by_kind[static_cast<std::size_t>(e->kind())];
    std::size_t child_depth = 0;
    if (e->left()) child_depth = visit(e->left());
    if (e->right()) {
      const std::size_t r = visit(e->right());
      if (r > child_depth) child_depth = r;
    }
    const std::size_t d = child_depth + 1;
    depth.emplace(e.get(), d);
    if (d > result.depth) result.depth = d;
    return d;
  }
};

}  // namespace

ExprStats stats(const ExprPtr& e) {
  StatsWalker walker;
  walker.visit(e);
  return walker.result;
}

std::string format_stats(const ExprStats& s) {
  std::string out = "nodes=" + std::to_string(s.total) + " depth=" + std::to_string(s.depth);
  for (std::size_t i = 0; i < kExprKindCount; ++i) {
    if (s.by_kind[i] == 0) continue;
    out += ' ';
    out += kind_name(static_cast<ExprKind>(i));
    out += '=';
    out += std::to_string(s.by_kind[i]);
  }
  return out;
}

namespace {

class Renderer {
 public:
  Renderer(RenderFormat format) : latex_(format == RenderFormat::latex) {}

  std::string run(const ExprPtr& root) {
    count_refs(root);
    assign_names(root);
    std::string out;
    if (latex_) {
      if (!order_.empty()) {
        out += "\\begin{aligned}\n";
        for (const Expr* node : order_)
          out += names_[node] + " &= " + render_body(node) + "\\\\\n";
        out += "\\mathrm{result} &= " + render_body(root.get()) + "\n\\end{aligned}";
      } else {
        out = render_body(root.get());
      }
    } else {
      for (const Expr* node : order_) out += "let " + names_[node] + " = " + render_body(node) + "\n";
      if (!order_.empty()) out += "in ";
      out += render_body(root.get());
    }
    return out;
  }

 private:
  static bool composite(const Expr* e) { return e->left() != nullptr; }

  void count_refs(const ExprPtr& e) {
    if (visited_.insert(e.get()).second) {
      if (e->left()) {
        ++refs_[e->left().get()];
        count_refs(e->left());
      }
      if (e->right()) {
        ++refs_[e->right().get()];
        count_refs(e->right());
      }
    }
  }

  void assign_names(const ExprPtr& e) {
    if (!named_visited_.insert(e.get()).second) return;
    if (e->left()) assign_names(e->left());
    if (e->right()) assign_names(e->right());
    if (composite(e.get()) && refs_[e.get()] >= 2) {
      const std::string id = std::to_string(order_.size() + 1);
      names_[e.get()] = latex_ ? "t_{" + id + "}" : "t" + id;
      order_.push_back(e.get());
    }
  }

  std::string ref(const ExprPtr& e) {
    auto it = names_.find(e.get());
    if (it != names_.end()) return it->second;
    return render_body(e.get());
  }

  std::string render_constant(const Rational& q) const {
    if (!latex_) return q.get_str();
    if (is_integer(q)) return q.get_num().get_str();
    const std::string num = Integer(abs(q.get_num())).get_str();
    const std::string den = q.get_den().get_str();
    const std::string frac = "\\frac{" + num + "}{" + den + "}";
    return sgn(q) < 0 ? "-" + frac : frac;
  }

  std::string render_body(const Expr* e) {
    const std::string l = e->left() ? ref(e->left()) : std::string();
    const std::string r = e->right() ? ref(e->right()) : std::string();
    switch (e->kind()) {
      case ExprKind::constant: return render_constant(e->constant_value());
      case ExprKind::input: return e->input_name();
      case ExprKind::add:
        return latex_ ? "\\left( " + l + " + " + r + " \\right)" : "(" + l + " + " + r + ")";
      case ExprKind::subtract:
        return latex_ ? "\\left( " + l + " - " + r + " \\right)" : "(" + l + " - " + r + ")";
      case ExprKind::multiply:
        return latex_ ? "\\left( " + l + " \\cdot " + r + " \\right)" : "(" + l + " * " + r + ")";
      case ExprKind::divide: return latex_ ? "\\frac{" + l + "}{" + r + "}" : "(" + l + " / " + r + ")";
      case ExprKind::power: return latex_ ? "{" + l + "}^{" + r + "}" : "(" + l + " ^ " + r + ")";
      case ExprKind::root: return latex_ ? "\\sqrt{" + l + "}" : "sqrt(" + l + ")";
      case ExprKind::log:
        return latex_ ? "\\mathrm{Log}\\left( " + l + " \\right)" : "Log(" + l + ")";
      case ExprKind::floor: return latex_ ? "\\lfloor " + l + " \\rfloor" : "floor(" + l + ")";
      case ExprKind::ceil: return latex_ ? "\\lceil " + l + " \\rceil" : "ceil(" + l + ")";
      case ExprKind::mod:
        return latex_ ? "\\left( " + l + " \\bmod " + r + " \\right)" : "(" + l + " mod " + r + ")";
      case ExprKind::abs: return latex_ ? "\\left| " + l + " \\right|" : "|" + l + "|";
      case ExprKind::pi: return latex_ ? "\\pi" : "pi";
      case ExprKind::euler: return "e";
      case ExprKind::imaginary: return "i";
    }
    return "?";
  }

  bool latex_;
  std::unordered_map<const Expr*, int> refs_;
  std::unordered_map<const Expr*, std::string> names_;
  std::unordered_set<const Expr*> visited_;
  std::unordered_set<const Expr*> named_visited_;
  std::vector<const Expr*> order_;
};

}  // namespace

std::string render(const ExprPtr& e, RenderFormat format) {
  return Renderer(format).run(e);
}

}  // namespace conway13::ir
