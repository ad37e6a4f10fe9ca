#pragma once

#include <map>
#include <string>
#include <vector>

#include "fermatk3/audit.hpp"
#include "fermatk3/fixed_point.hpp"

namespace fermatk3 {

// One entry of the classification of solvable symplectic groups: a group
// name, its order, its case label I..V, and (where the source supplies or
// implies it) its order structure. Families are kept as individual rows up
// to the stated order cap.
struct SolvableGroupEntry {
  std::string name;
  long long order;
  std::string case_label;                 // "I".."V"
  std::map<long, std::size_t> structure;  // empty when not tabulated
};

// The embedded classification table (static data, never derived here).
const std::vector<SolvableGroupEntry>& mukai_solvable_table();

struct BoundAuditReport {
  long long bound = 0;       // the final order bound
  std::string attained_by;   // symplectic part realizing the bound
  long attained_I = 0;       // multiplier order realizing the bound
  std::vector<AuditStep> steps;

  bool passed() const;
};

// Replays the case analysis bounding a solvable group of symplectic-times-
// multiplier type: every case's rank bound, admissible multiplier cap, and
// order product, concluding |G| <= 1536 attained by F384 with I = 4.
BoundAuditReport solvable_bound_audit();

// Same for nilpotent groups, concluding |G| <= 512 attained by F128 with
// I = 4.
BoundAuditReport nilpotent_bound_audit();

}  // namespace fermatk3
