#pragma once

#include <stdexcept>
#include <string>

namespace topopush {

// Precondition violated by the caller (bad input values, infeasible configuration).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No tangent line with the required properties exists for the target.
class GeometricInfeasibility : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sweep would drive the arm through the target disc.
class BlockedApproach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scene or workspace document could not be parsed or validated.
class LoadError : public std::runtime_error {
 public:
  LoadError(std::string field_path, const std::string& what)
      : std::runtime_error(field_path.empty() ? what : field_path + ": " + what),
        path_(std::move(field_path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Rejection sampling gave up.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace topopush
