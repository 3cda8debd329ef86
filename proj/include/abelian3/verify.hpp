#pragma once

// Cross-checks the constructive enumeration against the brute-force oracle
// on every group Z_m x Z_n x Z_r with m n r <= max_order.

#include <string>
#include <vector>

#include "abelian3/group.hpp"
#include "abelian3/rank3.hpp"

namespace abelian3 {

struct GroupCheck {
  Group3 group;
  bool passed = true;
  u128 formula_count = 0;     // count_total
  u64 enumerated = 0;         // sextuple stream length
  u64 oracle_count = 0;
  u128 formula_cyclic = 0;    // count_cyclic
  u64 oracle_cyclic = 0;
  std::vector<ElementSet> missing;     // found by the oracle only
  std::vector<ElementSet> unexpected;  // produced by the enumeration only
  std::vector<std::string> problems;
};

struct VerifyReport {
  u64 max_order = 0;
  u64 groups_checked = 0;
  u64 subgroups_compared = 0;
  std::vector<GroupCheck> failures;

  bool passed() const { return failures.empty(); }
};

// Element sets of all subgroups produced by the sextuple enumeration.
std::vector<ElementSet> enumerated_subgroups(const Group3& group,
                                             const ParamsFn& params = &derived_params);

GroupCheck verify_group(const Group3& group,
                        const ParamsFn& params = &derived_params);

// Checks all ordered triples (m, n, r) with m n r <= max_order.
VerifyReport verify_up_to(u64 max_order,
                          const ParamsFn& params = &derived_params);

std::string describe(const ElementSet& set);

}  // namespace abelian3
