#pragma once

#include <stdexcept>
#include <string>

namespace xbow {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad command line: unknown flag, missing argument, conflicting options.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Bad input data: malformed files, dimension mismatches, missing labels.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace xbow
