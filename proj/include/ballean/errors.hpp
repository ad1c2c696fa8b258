#ifndef BALLEAN_ERRORS_HPP
#define BALLEAN_ERRORS_HPP

#include <stdexcept>

namespace ballean {

// Error taxonomy shared by the library and the CLI exit codes.
//   InputError    -- malformed or out-of-range data handed to an operation
//   ContractError -- well-formed data that violates an operation's precondition
//   ResourceError -- a configured size bound would be exceeded
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class ContractError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ballean

#endif
