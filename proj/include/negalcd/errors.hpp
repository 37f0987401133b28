#pragma once

#include <stdexcept>
#include <string>

namespace negalcd {

/// Inadmissible input: a violated precondition on q, n, a family parameter or a flag.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by zero, or operands owned by different fields.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element (or polynomial coefficient) that does not lie in the requested subfield.
class SubfieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace negalcd
