#pragma once

#include <stdexcept>

namespace synthcat {

// Error taxonomy shared with the CLI exit codes: input/config errors exit
// with 2, numeric/model errors with 3, inconsistent evidence with 4.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
  public:
    using Error::Error;
};

class NumericError : public Error {
  public:
    using Error::Error;
};

class EvidenceError : public Error {
  public:
    using Error::Error;
};

} // namespace synthcat
