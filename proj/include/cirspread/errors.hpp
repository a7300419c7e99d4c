#pragma once

#include <stdexcept>
#include <string>

namespace cirspread {

// Bad inputs: malformed files, violated invariants, out-of-domain queries.
// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed inputs on which a numerical procedure failed (root solve did
// not converge, no feasible calibration point, ...). CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cirspread
