#pragma once

#include <stdexcept>
#include <string>

namespace qsrank {

// Malformed shape or partition text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds the size a brute-force routine is configured for.
class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A broken internal invariant; never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qsrank
