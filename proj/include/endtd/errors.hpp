#pragma once

#include <stdexcept>
#include <string>

namespace endtd {

/// Malformed input: asymmetric generator, bad JSON, unknown vertex label.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator reported a vertex with infinitely many neighbours.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The truncation is too shallow for the requested query to be certified.
class HorizonError : public std::runtime_error {
 public:
  HorizonError(const std::string& what, int required)
      : std::runtime_error(what), required_(required) {}
  int required() const { return required_; }

 private:
  int required_;
};

/// A precondition of an operation does not hold for the given arguments.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace endtd
