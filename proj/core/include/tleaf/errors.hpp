#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tleaf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported root type, bad rank, malformed automorphism data.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A floating-point computation could not be certified at the requested tolerance.
class NumericalQualityError : public Error {
 public:
  NumericalQualityError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Brute-force enumeration refused because the group is too large.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input form recognised but deliberately not handled.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Several candidates tie where a unique answer was expected.
class AmbiguityError : public Error {
 public:
  AmbiguityError(const std::string& what, std::vector<std::size_t> candidates)
      : Error(what), candidates_(std::move(candidates)) {}
  const std::vector<std::size_t>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<std::size_t> candidates_;
};

}  // namespace tleaf
