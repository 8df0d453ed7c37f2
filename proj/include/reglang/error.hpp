#ifndef REGLANG_ERROR_HPP
#define REGLANG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reglang {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbol outside the declared alphabet, duplicate or reserved symbol,
/// or two values built over different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Malformed regex or omega-term text. `position()` is the offset in
/// code points from the start of the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A structure failed its invariants (non-total table, non-associative
/// product, non-congruence partition, ...). The message names the witness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded a configured size limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace reglang

#endif  // REGLANG_ERROR_HPP
