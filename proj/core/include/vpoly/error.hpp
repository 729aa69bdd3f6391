#pragma once

#include <stdexcept>
#include <string>

namespace vpoly {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (unknown ids, bad sizes, composite primes).
class InputError : public Error {
 public:
  using Error::Error;
};

// Contraction was requested on a looping edge.
class ContractLoopError : public Error {
 public:
  using Error::Error;
};

// A resource cap (edge count, recursion depth, enumeration budget) would be
// exceeded.
class RefusalError : public Error {
 public:
  using Error::Error;
};

// Arithmetic left the representable range (e.g. floating-point overflow).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace vpoly
