#pragma once

#include <stdexcept>
#include <string>

namespace ordval {

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateNameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotMemberError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonMonotoneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ordval
