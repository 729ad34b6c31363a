#ifndef DSMC_ERRORS_HPP
#define DSMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dsmc {

// Error categories map to CLI exit codes: usage -> 2, io -> 3, numeric -> 4.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : IoError {
  explicit ParseError(const std::string& msg) : IoError(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dsmc

#endif  // DSMC_ERRORS_HPP
