#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semicat {

/// Caller violated a precondition: mismatched semirings, incompatible
/// dimensions, out-of-range arguments.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed literal or type expression. `position` is a 0-based offset into
/// the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Invalid configuration or input file (missing dimension, schema violation).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace semicat
