#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace semicat {

/// One verified property over one dimension tuple. Repeated samples of the
/// same (name, dims) are folded into a single entry; the first failure is
/// kept as the witness.
struct Check {
  std::string name;
  std::vector<std::size_t> dims;
  bool passed = true;
  std::size_t samples = 0;
  std::optional<std::string> witness;
};

/// Ordered collection of checks. Violations are data, not errors.
class Report {
 public:
  /// Records one sample outcome under (name, dims).
  void record(const std::string& name, std::vector<std::size_t> dims, bool ok,
              const std::string& witness = {});
  void record(const std::string& name, bool ok, const std::string& witness = {}) {
    record(name, {}, ok, witness);
  }
  void merge(const Report& other);

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t violations() const;
  bool ok() const { return violations() == 0; }

  /// [{name, dims, status, samples, witness?}, ...] in insertion order.
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace semicat
