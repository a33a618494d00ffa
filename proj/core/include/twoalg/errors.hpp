#pragma once

#include <stdexcept>
#include <string>

namespace twoalg {

// Malformed user input: bad files, bad rationals, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed object failed one of its structural checks.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iteration bound was reached before the computation terminated.
class CutoffExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twoalg
