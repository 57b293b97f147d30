#include "semicat/report.hpp"

#include <algorithm>

namespace semicat {

void Report::record(const std::string& name, std::vector<std::size_t> dims, bool ok,
                    const std::string& witness) {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) {
    return c.name == name && c.dims == dims;
  });
  if (it == checks_.end()) {
    checks_.push_back(Check{name, std::move(dims), true, 0, std::nullopt});
    it = std::prev(checks_.end());
  }
  ++it->samples;
  if (!ok && it->passed) {
    it->passed = false;
    it->witness = witness.empty() ? std::string("violated") : witness;
  }
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& mine) {
      return mine.name == c.name && mine.dims == c.dims;
    });
    if (it == checks_.end()) {
      checks_.push_back(c);
      continue;
    }
    it->samples += c.samples;
    if (!c.passed && it->passed) {
      it->passed = false;
      it->witness = c.witness;
    }
  }
}

std::size_t Report::violations() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

nlohmann::ordered_json Report::to_json() const {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["dims"] = c.dims;
    entry["status"] = c.passed ? "pass" : "fail";
    entry["samples"] = c.samples;
    if (c.witness) entry["witness"] = *c.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace semicat
