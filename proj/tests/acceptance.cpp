// Acceptance suite: runs every top-level criterion of the project and
// prints one PASS/FAIL line per criterion. Exits nonzero on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conway13/conway.hpp"
#include "conway13/differential.hpp"
#include "conway13/formula.hpp"
#include "conway13/logic.hpp"
#include "conway13/oracle.hpp"

using namespace conway13;

namespace {

const Base b13 = tridecimal::base;
const Base b10{10};

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(CONWAY13_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliResult result;
  std::array<char, 65536> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

Integer random_tridecimal(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = min_len + draw(rng, max_len - min_len + 1);
  Integer v = 0;
  for (std::size_t i = 0; i < len; ++i) v = v * 13 + static_cast<long>(draw(rng, 13));
  return v;
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

// ---- criterion 1: golden example suite --------------------------------------

void criterion1(Check& c) {
  c.require(phase3(to_natural(parse_literal("137", b13)).value()) == DecimalValue(),
            "phase3(137_13) != 0");
  c.require(phase3(to_natural(parse_literal("B17C11", b13)).value()) ==
                DecimalValue::from_scaled(-1, 1711, 2),
            "phase3(B17C11_13) != -17.11");
  c.require(re_radix(to_natural(parse_literal("1C3", b13)), b13, b10, tridecimal::digit_c) ==
                Rational(13, 10),
            "re_radix(1C3) != 1.3");
  c.require(trunc_trailing(Natural(123456ul), b10, 2).value() == 1234,
            "trunc_trailing(123456,10,2) != 1234");
  c.require(digit_at(Natural(123456ul), b10, 2).value() == 4, "digit_at(123456,10,2) != 4");
  c.require(length(Natural(10ul), b10) == 2, "length(10) != 2");
  c.require(length(Natural(99ul), b10) == 2, "length(99) != 2");
  c.require(length(Natural(0ul), b13) == 0, "length(0) != 0");
  c.require(run_cli("eval 137").out == "0\n", "CLI eval 137 != 0");
  c.require(run_cli("eval B17C11").out == "-17.11\n", "CLI eval B17C11 != -17.11");
}

// ---- criterion 2: exhaustive + randomized differential check ----------------

void criterion2(Check& c) {
  const DiffReport exhaustive = diff_exhaustive(5, {.jobs = 2});
  c.require(exhaustive.cases >= 371293, "exhaustive sweep smaller than 13^5");
  c.require(exhaustive.mismatches == 0, "exhaustive mismatch found");

  // 10^5 random 7-40-digit inputs, split across every shaped profile.
  std::uint64_t total = 0;
  for (const oracle::GeneratorProfile p : oracle::kAllProfiles) {
    if (p == oracle::GeneratorProfile::boundary) continue;
    const DiffReport r = diff_generated(1000, 16667, p, {.jobs = 2});
    total += r.cases;
    c.require(r.mismatches == 0,
              std::string("generated mismatch in profile ") + std::string(oracle::profile_name(p)));
  }
  c.require(total >= 100000, "fewer than 10^5 generated cases");
  // Boundary shapes on top.
  const DiffReport boundary =
      diff_generated(0, 10000, oracle::GeneratorProfile::boundary, {.jobs = 2});
  c.require(boundary.mismatches == 0, "generated mismatch in profile boundary");
}

// ---- criterion 3: digit-toolkit properties against the string oracle --------

Natural string_drop_trailing(const Natural& x, Base b, unsigned long n) {
  std::vector<int> d = from_natural(x, b).digits();
  if (x.is_zero()) d.clear();
  d.resize(d.size() > n ? d.size() - n : 0);
  return d.empty() ? Natural() : to_natural(DigitString::from_digits(d, b));
}

void criterion3(Check& c) {
  std::uint64_t trailing_cases = 0, select_cases = 0, length_cases = 0, index_cases = 0,
                re_radix_cases = 0, sign_cases = 0;

  for (long v = 0; v < 28561; ++v) {  // exhaustive over <= 4-digit strings
    const Natural x{Integer(v)};
    const DigitString s = from_natural(x, b13);
    const std::size_t len = v == 0 ? 0 : s.size();

    // Trailing truncation drops the rightmost n digits.
    for (unsigned long n = 0; n <= 5; ++n) {
      if (trunc_trailing(x, b13, n) != string_drop_trailing(x, b13, n)) {
        c.require(false, "trailing truncation disagrees with the string oracle at x=" + std::to_string(v));
        return;
      }
      ++trailing_cases;
    }
    // Digit selection matches string indexing.
    for (unsigned long n = 0; n <= 5; ++n) {
      if (digit_at(x, b13, n).value() != s.digit_at_index(n)) {
        c.require(false, "digit selection disagrees with the string oracle at x=" + std::to_string(v));
        return;
      }
      ++select_cases;
    }
    // Length is the digit count, and 0 for x=0.
    if (length(x, b13) != len) {
      c.require(false, "length disagrees with the digit count at x=" + std::to_string(v));
      return;
    }
    ++length_cases;
    // Rightmost-index dichotomy.
    for (int p = 0; p < 13; ++p) {
      std::size_t expected = len;  // absent -> L
      for (std::size_t k = 0; k < len; ++k)
        if (s.digit_at_index(k) == p) {
          expected = k;
          break;
        }
      if (rightmost_index(x, b13, Digit(p, b13)) != expected) {
        c.require(false, "rightmost index disagrees with the string scan at x=" + std::to_string(v));
        return;
      }
      ++index_cases;
    }
    // Resulting sign from direct occurrence counts.
    std::size_t count_a = 0, count_b = 0;
    for (std::size_t k = 0; k < len; ++k) {
      if (s.digit_at_index(k) == 10) ++count_a;
      if (s.digit_at_index(k) == 11) ++count_b;
    }
    const int expected_sign = (count_a == 1 ? 1 : 0) - (count_b == 1 ? 1 : 0);
    if (resulting_sign(x, b13, tridecimal::digit_a, tridecimal::digit_b) != expected_sign) {
      c.require(false, "resulting sign disagrees with direct counting at x=" + std::to_string(v));
      return;
    }
    ++sign_cases;
  }

  // Re-radix equals digit-string splicing on single-occurrence inputs;
  // exhaustive <= 4 digits plus random longer inputs.
  auto splice = [](const DigitString& s, std::size_t marker_index, Base to) -> Rational {
    Integer left = 0;
    for (std::size_t k = s.size() - 1; k > marker_index; --k)
      left = left * to.radix() + s.digit_at_index(k);
    Integer right = 0;
    for (std::size_t k = marker_index; k-- > 0;) right = right * to.radix() + s.digit_at_index(k);
    return Rational(left) + make_rational(right, pow_uint(Integer(to.radix()), marker_index));
  };
  auto check_re_radix = [&](const Natural& x) -> bool {
    const DigitString s = from_natural(x, b13);
    std::size_t count = 0, marker = 0;
    const std::size_t len = x.is_zero() ? 0 : s.size();
    for (std::size_t k = 0; k < len; ++k)
      if (s.digit_at_index(k) == 12) {
        ++count;
        marker = k;
      }
    if (count != 1) return true;  // single-occurrence inputs only
    ++re_radix_cases;
    return re_radix(x, b13, b10, tridecimal::digit_c) == splice(s, marker, b10);
  };
  for (long v = 0; v < 28561; ++v) {
    if (!check_re_radix(Natural(Integer(v)))) {
      c.require(false, "re-radix disagrees with the splice oracle at x=" + std::to_string(v));
      return;
    }
  }
  std::mt19937_64 rng(90001);
  while (re_radix_cases < 12000) {
    const Integer v = random_tridecimal(rng, 5, 20);
    if (!check_re_radix(Natural(v))) {
      c.require(false, "re-radix disagrees with the splice oracle at random x");
      return;
    }
  }

  c.require(trailing_cases >= 10000 && select_cases >= 10000 && length_cases >= 10000 &&
                index_cases >= 10000 && re_radix_cases >= 10000 && sign_cases >= 10000,
            "a property suite ran fewer than 10^4 cases");
}

// ---- criterion 4: fractal symmetry ------------------------------------------

void criterion4(Check& c) {
  std::mt19937_64 rng(90002);
  for (int i = 0; i < 10000; ++i) {
    const Integer x = random_tridecimal(rng, 1, 20);
    const DecimalValue v = phase3(x);
    Integer scaled = x;
    for (int n = 0; n <= 4; ++n) {
      if (phase3(scaled) != v) {
        c.require(false, "phase3(13^n x) != phase3(x)");
        return;
      }
      scaled *= 13;
    }
  }
}

// ---- criterion 5: epsilon robustness ----------------------------------------

void criterion5(Check& c) {
  const LogicConfig configs[] = {
      LogicConfig(Rational(1)),
      LogicConfig(Rational(1, 2)),
      LogicConfig(Rational(3)),
      LogicConfig(Rational(1, 13)),
  };
  std::mt19937_64 rng(90003);
  for (int i = 0; i < 10000; ++i) {
    const long a = static_cast<long>(draw(rng, 4001)) - 2000;
    const long b = static_cast<long>(draw(rng, 4001)) - 2000;
    const Integer e0 = equal_indicator(a, b, configs[0]);
    const Integer n0 = not_equal_indicator(a, b, configs[0]);
    const Integer g0 = ge_indicator(a, b, configs[0]);
    const Integer m0 = minimum(a, b, configs[0]);
    for (const LogicConfig& cfg : configs) {
      if (equal_indicator(a, b, cfg) != e0 || not_equal_indicator(a, b, cfg) != n0 ||
          ge_indicator(a, b, cfg) != g0 || minimum(a, b, cfg) != m0) {
        c.require(false, "epsilon-dependent output at a=" + std::to_string(a) +
                             " b=" + std::to_string(b));
        return;
      }
    }
  }
}

// ---- criterion 6: encode/evaluate roundtrip ---------------------------------

void criterion6(Check& c) {
  std::mt19937_64 rng(90004);
  for (int i = 0; i < 10000; ++i) {
    const int sign = draw(rng, 2) ? 1 : -1;
    const unsigned long scale = draw(rng, 13);          // up to 12 fractional digits
    const std::size_t int_digits = 1 + draw(rng, 12);   // up to 12 integer digits
    Integer units = 0;
    for (std::size_t k = 0; k < int_digits + scale; ++k)
      units = units * 10 + static_cast<long>(draw(rng, 10));
    if (sgn(units) == 0) units = 1;
    const DecimalValue v = DecimalValue::from_scaled(sign, units, scale);
    if (phase3(encode_decimal(v).value()) != v) {
      c.require(false, "roundtrip failed");
      return;
    }
  }
}

// ---- criterion 7: formula fidelity ------------------------------------------

void criterion7(Check& c) {
  using namespace conway13::ir;
  const LogicConfig cfg;
  FormulaParams params;
  params.m_max = 5;
  params.index = 2;
  params.digit = 12;
  params.digit2 = 11;

  struct NamedFormula {
    FormulaTarget target;
    ExprPtr expr;
  };
  std::vector<NamedFormula> formulas;
  for (const FormulaTarget t :
       {FormulaTarget::equal, FormulaTarget::not_equal, FormulaTarget::greater_equal,
        FormulaTarget::minimum, FormulaTarget::trunc_trailing, FormulaTarget::digit_at,
        FormulaTarget::length, FormulaTarget::count_occurrences, FormulaTarget::rightmost_index,
        FormulaTarget::trunc_leading, FormulaTarget::cut_to_index, FormulaTarget::re_radix,
        FormulaTarget::resulting_sign, FormulaTarget::phase1, FormulaTarget::phase2,
        FormulaTarget::phase3})
    formulas.push_back({t, build_formula(t, params)});

  const Digit dc = tridecimal::digit_c;
  std::mt19937_64 rng(90005);
  for (int i = 0; i < 1000; ++i) {
    const long a = static_cast<long>(draw(rng, 201)) - 100;
    const long b = static_cast<long>(draw(rng, 201)) - 100;
    const Bindings ab = {{"a", Rational(a)}, {"b", Rational(b)}};
    const Integer xv(static_cast<long>(draw(rng, 371293)));
    const Natural xn{xv};
    const Integer sx = draw(rng, 2) ? xv : Integer(-xv);
    const Bindings bx = {{"x", Rational(xv)}};
    const Bindings bs = {{"x", Rational(sx)}};

    for (const NamedFormula& f : formulas) {
      Rational got, want;
      switch (f.target) {
        case FormulaTarget::equal:
          got = eval_exact(f.expr, ab); want = Rational(equal_indicator(a, b, cfg)); break;
        case FormulaTarget::not_equal:
          got = eval_exact(f.expr, ab); want = Rational(not_equal_indicator(a, b, cfg)); break;
        case FormulaTarget::greater_equal:
          got = eval_exact(f.expr, ab); want = Rational(ge_indicator(a, b, cfg)); break;
        case FormulaTarget::minimum:
          got = eval_exact(f.expr, ab); want = Rational(minimum(a, b, cfg)); break;
        case FormulaTarget::trunc_trailing:
          got = eval_exact(f.expr, bx); want = Rational(trunc_trailing(xn, b13, 2).value()); break;
        case FormulaTarget::digit_at:
          got = eval_exact(f.expr, bx); want = Rational(digit_at(xn, b13, 2).value()); break;
        case FormulaTarget::length:
          got = eval_exact(f.expr, bx);
          want = Rational(static_cast<unsigned long>(length(xn, b13)));
          break;
        case FormulaTarget::count_occurrences:
          got = eval_exact(f.expr, bx);
          want = Rational(static_cast<unsigned long>(count_occurrences(xn, b13, dc)));
          break;
        case FormulaTarget::rightmost_index:
          got = eval_exact(f.expr, bx);
          want = Rational(static_cast<unsigned long>(rightmost_index(xn, b13, dc)));
          break;
        case FormulaTarget::trunc_leading:
          got = eval_exact(f.expr, bx); want = Rational(trunc_leading(xn, b13, 2).value()); break;
        case FormulaTarget::cut_to_index:
          got = eval_exact(f.expr, bx); want = Rational(cut_to_index(xn, b13, dc).value()); break;
        case FormulaTarget::re_radix:
          got = eval_exact(f.expr, bx); want = re_radix(xn, b13, b10, dc); break;
        case FormulaTarget::resulting_sign:
          got = eval_exact(f.expr, bx);
          want = Rational(resulting_sign(xn, b13, dc, tridecimal::digit_b));
          break;
        case FormulaTarget::phase1:
          got = eval_exact(f.expr, bs); want = Rational(phase1(sx).value()); break;
        case FormulaTarget::phase2:
          got = eval_exact(f.expr, bs); want = Rational(phase2(sx).value()); break;
        case FormulaTarget::phase3:
          got = eval_exact(f.expr, bs); want = phase3(sx).as_rational(); break;
      }
      if (got != want) {
        c.require(false, std::string("macro-mode fidelity failed for target ") +
                             std::string(target_name(f.target)));
        return;
      }
    }
  }

  // Complex leg: lowered floor/ceil/mod/abs vs exact, within 1e-9 on
  // guarded points.
  const ExprPtr x = input("x");
  const ExprPtr y = input("y");
  const ExprPtr floor_macro = ir::floor(x), floor_low = lower(floor_macro);
  const ExprPtr ceil_macro = ir::ceil(x), ceil_low = lower(ceil_macro);
  const ExprPtr abs_macro = ir::abs(x), abs_low = lower(abs_macro);
  const ExprPtr mod_macro = ir::mod(x, y), mod_low = lower(mod_macro);
  int checked = 0;
  auto close = [](const ComplexResult& got, const Rational& want) {
    const double w = want.get_d();
    const double dre = got.value.real() - w;
    const double dim = got.value.imag();
    return dre * dre + dim * dim <= 1e-18;
  };
  for (int i = 0; i < 250; ++i) {
    const long den = 1 + static_cast<long>(draw(rng, 1000));
    const long whole = static_cast<long>(draw(rng, 2001)) - 1000;
    const Rational v = make_rational(whole * den + static_cast<long>(draw(rng, den)), den);
    const Bindings bx2 = {{"x", v}};
    long mden = 1 + static_cast<long>(draw(rng, 100));
    const Rational m = make_rational(1 + static_cast<long>(draw(rng, 1000)), mden);
    const Bindings bm = {{"x", v}, {"y", m}};
    const std::pair<const ExprPtr*, const ExprPtr*> pairs[] = {
        {&floor_low, &floor_macro}, {&ceil_low, &ceil_macro}, {&abs_low, &abs_macro}};
    for (const auto& [low, macro] : pairs) {
      const ComplexResult r = eval_complex(*low, bx2, 50);
      if (r.ill_conditioned) continue;
      ++checked;
      if (!close(r, eval_exact(*macro, bx2))) {
        c.require(false, "lowering soundness failed");
        return;
      }
    }
    const ComplexResult r = eval_complex(mod_low, bm, 50);
    if (!r.ill_conditioned) {
      ++checked;
      if (!close(r, eval_exact(mod_macro, bm))) {
        c.require(false, "lowering soundness failed for mod");
        return;
      }
    }
  }
  c.require(checked >= 950, "guard band excluded too many complex-leg points");
}

// ---- criterion 8: deterministic plot export ---------------------------------

void criterion8(Check& c) {
  const std::string args = "plot --scale 2 --range 1..28561";
  const auto t0 = std::chrono::steady_clock::now();
  const CliResult first = run_cli(args);
  const auto t1 = std::chrono::steady_clock::now();
  const CliResult second = run_cli(args);
  const double seconds = std::chrono::duration<double>(t1 - t0).count();

  c.require(first.exit_code == 0, "plot exited nonzero");
  c.require(seconds <= 30.0, "plot took longer than 30 seconds");
  c.require(first.out == second.out, "plot output not byte-deterministic");

  std::istringstream lines(first.out);
  std::string line;
  std::size_t rows = 0;
  bool saw_zero = false, saw_nonzero = false;
  bool header_ok = false;
  while (std::getline(lines, line)) {
    if (rows == 0) {
      header_ok = line == "x_num,x_exp,f_num,f_den";
    } else {
      const std::size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
      const std::size_t c3 = line.find(',', c2 + 1);
      const std::string f_num = line.substr(c2 + 1, c3 - c2 - 1);
      (f_num == "0" ? saw_zero : saw_nonzero) = true;
    }
    ++rows;
  }
  c.require(header_ok, "plot header mismatch");
  c.require(rows == 28562, "plot row count != 28561 + header");
  c.require(saw_zero && saw_nonzero, "plot must contain zero and nonzero values");
}

// ---- criterion 9: mutation sensitivity --------------------------------------

void criterion9(Check& c) {
  // The swapped exponent order must fail the golden re-radix example...
  const Rational mutated =
      detail::re_radix_with_rule(to_natural(parse_literal("1C3", b13)), b13, b10,
                                 tridecimal::digit_c, detail::ReRadixExponentRule::adjust_below_marker);
  c.require(mutated != Rational(13, 10), "mutated re_radix still passes the golden test");

  // ...and the differential check must detect it.
  const DiffReport r =
      diff_exhaustive(4, {.jobs = 2, .rule = detail::ReRadixExponentRule::adjust_below_marker});
  c.require(r.mismatches > 0, "mutated build passes the differential check");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden example suite", criterion1},
      {2, "exhaustive + randomized differential check", criterion2},
      {3, "digit-toolkit property suites vs string oracle", criterion3},
      {4, "fractal symmetry f(13^n x) = f(x)", criterion4},
      {5, "epsilon robustness of the logical indicators", criterion5},
      {6, "encode/evaluate roundtrip on terminating decimals", criterion6},
      {7, "formula fidelity (exact) and lowering soundness (complex)", criterion7},
      {8, "deterministic plot export", criterion8},
      {9, "mutation sensitivity of the re-radix exponent order", criterion9},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
      check.ok = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.id == 1 && seconds >= 1.0)
      check.require(false, "golden suite exceeded 1 second");
    if (criterion.id == 2 && seconds > 300.0)
      check.require(false, "differential check exceeded 5 minutes");
    char line[64];
    std::snprintf(line, sizeof line, " (%.2fs)", seconds);
    if (check.ok) {
      std::cout << "PASS criterion " << criterion.id << ": " << criterion.name << line << "\n";
    } else {
      std::cout << "FAIL criterion " << criterion.id << ": " << criterion.name << line << " -- "
                << check.detail << "\n";
      ++failures;
    }
  }
  if (failures == 0) {
    std::cout << "all 9 acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
