#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fockmodes {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched mode counts, non-square matrices, wrong document shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a state has no amplitude above the pruning threshold.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// Rounding went beyond what double precision explains, or an objective
/// produced a non-finite value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NotUnitaryError : public Error {
 public:
  NotUnitaryError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fockmodes
