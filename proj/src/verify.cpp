#include "abelian3/verify.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "abelian3/oracle.hpp"
#include "abelian3/rank2.hpp"

namespace abelian3 {

std::vector<ElementSet> enumerated_subgroups(const Group3& group,
                                             const ParamsFn& params) {
  std::vector<ElementSet> out;
  for_each_sextuple(
      group,
      [&](const Sextuple& sx) {
        const DerivedParams d = params(sx.a, sx.b, sx.c, group);
        out.push_back(subgroup_elements(materialize(sx, group, d), group.order()));
      },
      params);
  return out;
}

std::string describe(const ElementSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    const auto& e = set.elements[i];
    if (i) out += ",";
    out += "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
           std::to_string(e[2]) + ")";
  }
  return out + "}";
}

GroupCheck verify_group(const Group3& group, const ParamsFn& params) {
  GroupCheck check;
  check.group = group;
  const u64 bound = static_cast<u64>(group.order());
  auto fail = [&](std::string what) {
    check.passed = false;
    check.problems.push_back(std::move(what));
  };

  const auto oracle_sets = oracle::all_subgroups(group, bound);
  check.oracle_count = oracle_sets.size();
  check.formula_count = count_total(group);
  check.oracle_cyclic = oracle::cyclic_subgroups(group, bound).size();
  check.formula_cyclic = count_cyclic(group);

  std::vector<ElementSet> enumerated;
  try {
    enumerated = enumerated_subgroups(group, params);
  } catch (const std::exception& e) {
    fail(std::string("enumeration failed: ") + e.what());
  }
  check.enumerated = enumerated.size();

  if (check.formula_count != check.oracle_count) {
    fail("count_total = " + to_string(check.formula_count) + " but oracle finds " +
         std::to_string(check.oracle_count));
  }
  if (check.passed && check.enumerated != check.formula_count) {
    fail("enumeration yields " + std::to_string(check.enumerated) +
         " subgroups, formula gives " + to_string(check.formula_count));
  }
  if (check.formula_cyclic != check.oracle_cyclic) {
    fail("count_cyclic = " + to_string(check.formula_cyclic) +
         " but oracle finds " + std::to_string(check.oracle_cyclic));
  }

  auto sorted = enumerated;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail("enumeration produced the same subgroup twice");
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::set_difference(oracle_sets.begin(), oracle_sets.end(), sorted.begin(),
                      sorted.end(), std::back_inserter(check.missing));
  std::set_difference(sorted.begin(), sorted.end(), oracle_sets.begin(),
                      oracle_sets.end(), std::back_inserter(check.unexpected));
  if (!check.missing.empty() || !check.unexpected.empty()) {
    fail(std::to_string(check.missing.size()) + " subgroups missing, " +
         std::to_string(check.unexpected.size()) + " unexpected");
  }

  if (group.r == 1) {
    std::vector<std::vector<Element2>> rank2_sets, projected;
    for_each_rank2(group.m, group.n, [&](const SubgroupBasis2& b) {
      rank2_sets.push_back(rank2_elements(b, bound));
    });
    for (const auto& s : oracle_sets) projected.push_back(oracle::project_first_two(s));
    std::sort(rank2_sets.begin(), rank2_sets.end());
    std::sort(projected.begin(), projected.end());
    if (rank2_sets != projected) fail("rank-2 enumeration differs from the oracle");
    if (count_rank2(group.m, group.n) != oracle_sets.size()) {
      fail("count_rank2 differs from the oracle");
    }
  }
  return check;
}

VerifyReport verify_up_to(u64 max_order, const ParamsFn& params) {
  VerifyReport report;
  report.max_order = max_order;
  for (u64 m = 1; m <= max_order; ++m) {
    for (u64 n = 1; m * n <= max_order; ++n) {
      for (u64 r = 1; m * n * r <= max_order; ++r) {
        GroupCheck check = verify_group({m, n, r}, params);
        ++report.groups_checked;
        report.subgroups_compared += check.oracle_count;
        if (!check.passed) report.failures.push_back(std::move(check));
      }
    }
  }
  return report;
}

}  // namespace abelian3
