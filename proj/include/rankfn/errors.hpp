#pragma once

#include <stdexcept>
#include <string>

namespace rankfn {

/// Input that cannot be checked at all: malformed data, unknown labels,
/// violated preconditions. The CLI maps it to exit status 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A correspondence that is only established for odd d was asked for even d.
class ParityError : public InputError {
 public:
  explicit ParityError(const std::string& what) : InputError(what) {}
};

/// The (d+2)-fold syzygy of some simple module is not simple.
class UnsupportedPeriodicity : public InputError {
 public:
  explicit UnsupportedPeriodicity(const std::string& what) : InputError(what) {}
};

/// A configured dimension or enumeration bound would be exceeded.
class BoundExceeded : public InputError {
 public:
  explicit BoundExceeded(const std::string& what) : InputError(what) {}
};

/// Psi produced a negative value, i.e. the input rank function violates RO2
/// on the rotation of the angle used for the evaluation.
class Ro2Violation : public std::runtime_error {
 public:
  explicit Ro2Violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rankfn
