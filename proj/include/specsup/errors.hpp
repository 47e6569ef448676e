#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specsup {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid graph or embedding specification.
struct ConstructionError : Error {
  using Error::Error;
};

// Input beyond the size an operation supports.
struct SizeError : Error {
  using Error::Error;
};

// A partition or structure failed an exact validity check.
struct ValidationError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct UnknownNameError : Error {
  using Error::Error;
};

struct IdentificationError : Error {
  using Error::Error;
};

struct InfeasibleError : Error {
  using Error::Error;
};

// Two independent computations disagreed.
struct InternalError : Error {
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace specsup
