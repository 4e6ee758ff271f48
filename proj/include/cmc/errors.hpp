#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cmc {

enum class ErrorKind {
  Domain,
  EmptyDomain,
  Accuracy,
  Range,
  InsufficientData,
  Pole,
  Branch,
  Singular,
  Unsupported,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` drives CLI exit codes and
/// the machine-readable error report.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<double> estimate = std::nullopt)
      : std::runtime_error(what), kind_(kind), estimate_(estimate) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Achieved error estimate, set for accuracy failures.
  std::optional<double> estimate() const noexcept { return estimate_; }

 private:
  ErrorKind kind_;
  std::optional<double> estimate_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace cmc
