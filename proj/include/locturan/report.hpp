#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace locturan {

// Outcome of one named condition, with the first counterexample found.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.pass; });
  }
  CheckResult& operator[](std::string_view name) {
    for (auto& r : checks)
      if (r.name == name) return r;
    checks.push_back({std::string(name), true, 0, {}});
    return checks.back();
  }
  void record(std::string_view name, bool pass, const std::function<std::string()>& witness) {
    CheckResult& r = (*this)[name];
    ++r.checked;
    if (!pass && r.pass) {
      r.pass = false;
      r.witness = witness();
    }
  }
  void merge(const CheckReport& other) {
    for (const auto& o : other.checks) {
      CheckResult& r = (*this)[o.name];
      r.checked += o.checked;
      if (!o.pass && r.pass) {
        r.pass = false;
        r.witness = o.witness;
      }
    }
  }
  std::string failures() const {
    std::string out;
    for (const auto& r : checks)
      if (!r.pass) out += r.name + ": " + r.witness + "\n";
    return out;
  }
};

}  // namespace locturan
