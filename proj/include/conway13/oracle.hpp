#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "conway13/base_digits.hpp"
#include "conway13/decimal_value.hpp"

namespace conway13::oracle {

// Independent plain-language implementation of the base-13 function by
// direct digit-string surgery. Shares only base_digits and the
// DecimalValue type with the arithmetic construction, so the two sides
// can be compared differentially.

enum class CaseTag { case1, case2, otherwise };

struct CaseClassification {
  CaseTag tag = CaseTag::otherwise;
  std::optional<std::size_t> sign_index;  // index of the governing A or B
  std::optional<std::size_t> c_index;     // index of the unique C below it
};

/// Classifies a tridecimal digit string by direct scans.
/// Throws std::domain_error when s is not base 13.
CaseClassification classify(const DigitString& s);

/// f by digit surgery on the tridecimal expansion of |x|.
DecimalValue oracle_f(const Integer& x);

enum class GeneratorProfile {
  uniform_digits,
  case1_shaped,
  case2_shaped,
  multi_c,
  multi_ab,
  no_c,
  boundary,
};

inline constexpr GeneratorProfile kAllProfiles[] = {
    GeneratorProfile::uniform_digits, GeneratorProfile::case1_shaped,
    GeneratorProfile::case2_shaped,   GeneratorProfile::multi_c,
    GeneratorProfile::multi_ab,       GeneratorProfile::no_c,
    GeneratorProfile::boundary,
};

/// Parses the profile names used on the command line
/// (uniform-digits, case1-shaped, case2-shaped, multi-C, multi-AB, no-C,
/// boundary). Throws std::domain_error on unknown names.
GeneratorProfile profile_from_name(std::string_view name);
std::string_view profile_name(GeneratorProfile profile);

/// Deterministic structured input generator: same (seed, profile) always
/// yields the same integer. Non-boundary profiles emit 7-40 tridecimal
/// digits; boundary cycles through edge shapes including 0.
Integer gen_structured(std::uint64_t seed, GeneratorProfile profile);

}  // namespace conway13::oracle
