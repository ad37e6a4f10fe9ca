#pragma once

#include <string>
#include <vector>

namespace fermatk3 {

// One replayed step of an audit. Computed steps carry a verified fact;
// cited steps record an assumption quoted from the source argument
// (group-theoretic or geometric prose) that the audit does not re-derive.
struct AuditStep {
  std::string label;      // stable id, e.g. "case-IV-generic"
  std::string statement;  // human-readable, with the numbers inline
  bool pass = false;
  bool cited = false;

  static AuditStep computed(std::string label, std::string statement,
                            bool pass) {
    return {std::move(label), std::move(statement), pass, false};
  }
  static AuditStep assumption(std::string label, std::string statement) {
    return {std::move(label), std::move(statement), true, true};
  }
};

inline bool all_steps_pass(const std::vector<AuditStep>& steps) {
  for (const auto& s : steps)
    if (!s.pass) return false;
  return !steps.empty();
}

}  // namespace fermatk3
