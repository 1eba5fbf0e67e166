#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// Base of every error raised by the engine. `kind()` is a stable short name
/// used in reports ("pole", "zero-theta", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class InvalidConstruction : public Error {
 public:
  explicit InvalidConstruction(const std::string& what) : Error("invalid-construction", what) {}
};

class NoInverse : public Error {
 public:
  explicit NoInverse(const std::string& what) : Error("no-inverse", what) {}
};

class ModularReductionError : public Error {
 public:
  explicit ModularReductionError(const std::string& what) : Error("modular-reduction", what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error("pole", what) {}
};

class ZeroThetaError : public Error {
 public:
  explicit ZeroThetaError(const std::string& what) : Error("zero-theta", what) {}
};

class DivergenceError : public Error {
 public:
  explicit DivergenceError(const std::string& what) : Error("divergence", what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("usage", what) {}
};

}  // namespace qseries
