#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qp/rings.hpp"

namespace qp {

struct Check {
  std::string name;
  std::string relation;  // "==", ">=", "<", "odd", "premise", ...
  std::string expected;
  std::string actual;
  bool pass = false;

  // An inequality check whose bound is attained.
  bool tight() const { return expected == actual; }
};

/// Result of a mechanical verifier. Verifiers recompute both sides of every
/// claim, so a bug or a counterexample shows up as a failing check.
struct VerifierReport {
  std::optional<QuadInt> subject;
  std::string theorem;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool overall() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

}  // namespace qp
