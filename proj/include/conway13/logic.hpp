#pragma once

#include "conway13/numeric.hpp"

namespace conway13 {

/// Parameter of the indicator formulas; any epsilon > 0 yields the same
/// outputs. The default 1 makes (1+epsilon)^n a power of two.
class LogicConfig {
 public:
  LogicConfig() : epsilon_(1) {}
  explicit LogicConfig(Rational epsilon) : epsilon_(std::move(epsilon)) {
    if (epsilon_ <= 0) throw std::domain_error("LogicConfig: epsilon must be positive");
  }
  const Rational& epsilon() const noexcept { return epsilon_; }

 private:
  Rational epsilon_;
};

/// 1 if a = b else 0, evaluated as floor((1+eps)^(-|a-b|)).
Integer equal_indicator(const Integer& a, const Integer& b, const LogicConfig& cfg = LogicConfig());

/// 1 - equal_indicator(a, b).
Integer not_equal_indicator(const Integer& a, const Integer& b,
                            const LogicConfig& cfg = LogicConfig());

/// 1 if a >= b else 0, evaluated as floor(1/2 + 1/(1+(1+eps)^(b-a))).
Integer ge_indicator(const Integer& a, const Integer& b, const LogicConfig& cfg = LogicConfig());

/// min(a, b), evaluated as a*GE(b,a) + b*GE(a,b) - a*E(a,b).
Integer minimum(const Integer& a, const Integer& b, const LogicConfig& cfg = LogicConfig());

}  // namespace conway13
