#pragma once

#include <stdexcept>
#include <string>

namespace antiassoc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad rationals, shape mismatches, broken files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical precondition
/// (e.g. asking for inner anti-derivations of a non-anti-associative algebra).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace antiassoc
