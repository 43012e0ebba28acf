#ifndef NZFLOW_ERRORS_HPP
#define NZFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nzflow {

/// Malformed input: bad ids, shape mismatches, unparseable documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// The vertex function is not locally zero-sum on the graph.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard or enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic overflowed.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nzflow

#endif  // NZFLOW_ERRORS_HPP
