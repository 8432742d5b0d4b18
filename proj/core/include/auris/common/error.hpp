#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace auris {

/// Error carrying the module/operation that raised it, so the CLI can emit
/// structured diagnostics.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string module, std::string operation, const std::string& message)
      : std::runtime_error(message),
        module_(std::move(module)),
        operation_(std::move(operation)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& operation() const noexcept { return operation_; }

 private:
  std::string module_;
  std::string operation_;
};

}  // namespace auris
