#pragma once

#include <cstdint>
#include <optional>

#include "conway13/conway.hpp"
#include "conway13/oracle.hpp"

namespace conway13 {

/// Differential sweep of phase3 against the digit-surgery oracle.
struct DiffOptions {
  unsigned jobs = 1;
  detail::ReRadixExponentRule rule = detail::ReRadixExponentRule::adjust_above_marker;
};

struct DiffReport {
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::optional<Integer> first_counterexample;

  bool agreed() const noexcept { return mismatches == 0; }
};

/// Compares every integer with at most max_digits tridecimal digits
/// (0 .. 13^max_digits - 1). Partitioned contiguously across jobs;
/// aggregation is order-independent.
DiffReport diff_exhaustive(unsigned max_digits, const DiffOptions& options = {});

/// Compares generated inputs for seeds start_seed .. start_seed+count-1.
/// Without a profile, seeds cycle round-robin through all profiles.
/// Odd-numbered samples are negated to sweep negative integers.
DiffReport diff_generated(std::uint64_t start_seed, std::uint64_t count,
                          std::optional<oracle::GeneratorProfile> profile,
                          const DiffOptions& options = {});

}  // namespace conway13
