#ifndef GT_ERRORS_HPP
#define GT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace gt {

// All library failures carry a stable machine-readable code (e.g. "AdjacentWells")
// next to the human-readable message.  The CLI maps ValidationError to exit
// code 2 and NumericalError to exit code 3.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Invalid input: malformed files, bad parameters, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numerical breakdown: divergent series, singular systems, degenerate spectra.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gt

#endif
