#pragma once

#include <stdexcept>
#include <string>

namespace conway13 {

/// Raised by literal parsing; carries the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A library invariant failed to hold. The CLI maps this to exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An expression cannot be evaluated in exact mode (irrational subterm,
/// non-integer exponent, unbound special constant).
class UnsupportedEval : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace conway13
