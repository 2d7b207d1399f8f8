#pragma once

#include <string>
#include <vector>

namespace gg {

enum class Verdict { pass, fail, warning };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::warning: return "warning";
  }
  return "fail";
}

/// One verified statement. `witness` is a canonical expression (the nonzero
/// residual, entry or component) and empty when there is nothing to show.
struct Check {
  std::string id;
  std::string description;
  Verdict verdict = Verdict::pass;
  std::string witness;
};

/// Ordered list of checks produced by a verification routine.
struct CheckReport {
  std::vector<Check> checks;
  /// Set when a theorem-level biconditional is contradicted by computation.
  bool theorem_violation = false;

  void add(std::string id, std::string description, bool ok, std::string witness = {}) {
    checks.push_back({std::move(id), std::move(description), ok ? Verdict::pass : Verdict::fail, std::move(witness)});
  }
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (auto c : other.checks) {
      c.id = prefix + c.id;
      checks.push_back(std::move(c));
    }
    theorem_violation = theorem_violation || other.theorem_violation;
  }

  bool ok() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::fail) return false;
    return true;
  }
  const Check* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

}  // namespace gg
