#pragma once

#include <stdexcept>

namespace hdecomp {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A result contradicting a proven statement: either a bug or a violated precondition.
class TheoryViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hdecomp
