#include "conway13/oracle.hpp"

#include <random>

namespace conway13::oracle {

namespace {

constexpr int kDigitA = 10;
constexpr int kDigitB = 11;
constexpr int kDigitC = 12;

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound ? rng() % bound : 0;
}

void append_digit(Integer& v, int d) { v = v * 13 + d; }

}  // namespace

CaseClassification classify(const DigitString& s) {
  if (s.base() != tridecimal::base) throw std::domain_error("classify: digit string must be base 13");
  CaseClassification result;
  // Rightmost A or B: lowest index whose digit is 10 or 11.
  std::optional<std::size_t> sign_index;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const int d = s.digit_at_index(k);
    if (d == kDigitA || d == kDigitB) {
      sign_index = k;
      break;
    }
  }
  if (!sign_index) return result;
  // Exactly one C strictly below it.
  std::optional<std::size_t> c_index;
  std::size_t c_count = 0;
  for (std::size_t k = 0; k < *sign_index; ++k) {
    if (s.digit_at_index(k) == kDigitC) {
      ++c_count;
      c_index = k;
    }
  }
  if (c_count != 1) return result;
  result.tag = s.digit_at_index(*sign_index) == kDigitA ? CaseTag::case1 : CaseTag::case2;
  result.sign_index = sign_index;
  result.c_index = c_index;
  return result;
}

DecimalValue oracle_f(const Integer& x) {
  const DigitString digits = from_natural(Natural(Integer(abs(x))), tridecimal::base);
  const CaseClassification c = classify(digits);
  if (c.tag == CaseTag::otherwise) return DecimalValue();
  const std::size_t sign_index = *c.sign_index;
  const std::size_t c_index = *c.c_index;
  // Integer part: digits strictly between the sign digit and the C.
  Integer ip = 0;
  for (std::size_t k = sign_index - 1; k > c_index; --k) ip = ip * 10 + digits.digit_at_index(k);
  // Fractional part: the c_index digits below the C.
  Integer fp = 0;
  for (std::size_t k = c_index; k-- > 0;) fp = fp * 10 + digits.digit_at_index(k);
  const unsigned long scale = static_cast<unsigned long>(c_index);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10ul, scale);
  return DecimalValue::from_scaled(c.tag == CaseTag::case1 ? 1 : -1, ip * den + fp, scale);
}

GeneratorProfile profile_from_name(std::string_view name) {
  if (name == "uniform-digits") return GeneratorProfile::uniform_digits;
  if (name == "case1-shaped") return GeneratorProfile::case1_shaped;
  if (name == "case2-shaped") return GeneratorProfile::case2_shaped;
  if (name == "multi-C") return GeneratorProfile::multi_c;
  if (name == "multi-AB") return GeneratorProfile::multi_ab;
  if (name == "no-C") return GeneratorProfile::no_c;
  if (name == "boundary") return GeneratorProfile::boundary;
  throw std::domain_error("unknown generator profile: " + std::string(name));
}

std::string_view profile_name(GeneratorProfile profile) {
  switch (profile) {
    case GeneratorProfile::uniform_digits: return "uniform-digits";
    case GeneratorProfile::case1_shaped: return "case1-shaped";
    case GeneratorProfile::case2_shaped: return "case2-shaped";
    case GeneratorProfile::multi_c: return "multi-C";
    case GeneratorProfile::multi_ab: return "multi-AB";
    case GeneratorProfile::no_c: return "no-C";
    case GeneratorProfile::boundary: return "boundary";
  }
  throw std::domain_error("unknown generator profile");
}

Integer gen_structured(std::uint64_t seed, GeneratorProfile profile) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(profile) + 1)));
  Integer v = 0;
  switch (profile) {
    case GeneratorProfile::uniform_digits: {
      const std::uint64_t len = 7 + draw(rng, 34);
      append_digit(v, 1 + static_cast<int>(draw(rng, 12)));
      for (std::uint64_t i = 1; i < len; ++i) append_digit(v, static_cast<int>(draw(rng, 13)));
      return v;
    }
    case GeneratorProfile::case1_shaped:
    case GeneratorProfile::case2_shaped: {
      const std::uint64_t total = 7 + draw(rng, 34);
      const std::uint64_t inner = total - 2;
      const std::uint64_t left = draw(rng, inner + 1);
      append_digit(v, profile == GeneratorProfile::case1_shaped ? kDigitA : kDigitB);
      for (std::uint64_t i = 0; i < left; ++i) append_digit(v, static_cast<int>(draw(rng, 10)));
      append_digit(v, kDigitC);
      for (std::uint64_t i = left; i < inner; ++i) append_digit(v, static_cast<int>(draw(rng, 10)));
      return v;
    }
    case GeneratorProfile::multi_c:
    case GeneratorProfile::multi_ab: {
      const std::uint64_t total = 7 + draw(rng, 34);
      std::vector<int> digits(total);
      for (auto& d : digits) d = static_cast<int>(draw(rng, 10));
      const int special = profile == GeneratorProfile::multi_c ? kDigitC : kDigitA;
      // At least two occurrences at distinct positions.
      const std::uint64_t p1 = draw(rng, total);
      std::uint64_t p2 = draw(rng, total);
      while (p2 == p1) p2 = draw(rng, total);
      digits[p1] = special;
      digits[p2] = profile == GeneratorProfile::multi_ab && draw(rng, 2) ? kDigitB : special;
      const std::uint64_t extra = draw(rng, 3);
      for (std::uint64_t i = 0; i < extra; ++i) digits[draw(rng, total)] = special;
      if (profile == GeneratorProfile::multi_ab && draw(rng, 2)) {
        std::uint64_t pc = draw(rng, total);
        while (pc == p1 || pc == p2) pc = draw(rng, total);
        digits[pc] = kDigitC;
      }
      if (digits[0] == 0) digits[0] = 1 + static_cast<int>(draw(rng, 9));
      for (int d : digits) append_digit(v, d);
      return v;
    }
    case GeneratorProfile::no_c: {
      const std::uint64_t len = 7 + draw(rng, 34);
      int first = static_cast<int>(draw(rng, 12));
      append_digit(v, first == 0 ? 1 : first);
      for (std::uint64_t i = 1; i < len; ++i) append_digit(v, static_cast<int>(draw(rng, 12)));
      return v;
    }
    case GeneratorProfile::boundary: {
      switch (seed % 7) {
        case 0: return 0;
        case 1: return static_cast<long>(draw(rng, 13));  // single digit
        case 2: {  // all-C string
          const std::uint64_t len = 1 + draw(rng, 6);
          for (std::uint64_t i = 0; i < len; ++i) append_digit(v, kDigitC);
          return v;
        }
        case 3: {  // power of 13
          Integer p;
          mpz_ui_pow_ui(p.get_mpz_t(), 13ul, 1 + draw(rng, 8));
          return p;
        }
        case 4: return Integer(kDigitA * 13 + kDigitC);  // "AC"
        case 5: return Integer(kDigitB * 13 + kDigitC);  // "BC"
        default: {  // sign digit with zero gap: "A0...0C"
          append_digit(v, draw(rng, 2) ? kDigitA : kDigitB);
          const std::uint64_t zeros = draw(rng, 5);
          for (std::uint64_t i = 0; i < zeros; ++i) append_digit(v, 0);
          append_digit(v, kDigitC);
          return v;
        }
      }
    }
  }
  throw std::domain_error("unknown generator profile");
}

}  // namespace conway13::oracle
