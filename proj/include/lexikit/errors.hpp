#pragma once

#include <stdexcept>
#include <string>

namespace lexikit {

// Base error for everything the toolkit raises on bad input or bad state.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised for invalid configuration or malformed input files. The CLI maps
// this to exit code 1; all other errors map to exit code 2.
class ValidationError : public Error {
  public:
    using Error::Error;
};

} // namespace lexikit
