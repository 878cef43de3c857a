#ifndef MHS_ERRORS_H_
#define MHS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mhs {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle refuses instances over its universe limit.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

// Malformed input file or text. The message names the line or position.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mhs

#endif  // MHS_ERRORS_H_
