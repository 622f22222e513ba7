#pragma once

#include <stdexcept>
#include <string>

namespace gnorm {

// Malformed caller input: dimension mismatch, non-finite coordinates,
// out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation's documented precondition does not hold for the given point.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Contraction/expansion constant outside the range the fixed-point theorems need.
class InvalidConstantError : public InputError {
 public:
  using InputError::InputError;
};

class NotInvertibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Jungck step could not find x with S(x) = T(x_n); T(X) ⊆ S(X) is violated
// along the orbit.
class RangeInclusionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Degenerate sampling, e.g. every sampled ratio had a vanishing denominator.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gnorm
