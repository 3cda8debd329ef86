#pragma once

// Brute-force subgroup lattice of Z_m x Z_n x Z_r by closure. Shares nothing
// with the constructive enumeration beyond the Group3/ElementSet data types.

#include <array>
#include <vector>

#include "abelian3/group.hpp"

namespace abelian3::oracle {

// Smallest subgroup containing `generators`. Throws std::length_error above
// `bound` group elements and std::invalid_argument for a generator outside
// the group.
ElementSet closure(const std::vector<Element>& generators, const Group3& group,
                   u64 bound = kDefaultElementBound);

// Every subgroup, sorted.
std::vector<ElementSet> all_subgroups(const Group3& group,
                                      u64 bound = kDefaultElementBound);

// Every cyclic subgroup <g>, sorted.
std::vector<ElementSet> cyclic_subgroups(const Group3& group,
                                         u64 bound = kDefaultElementBound);

// True if the set holds the identity, is closed under addition and its size
// divides the group order.
bool is_subgroup(const ElementSet& set, const Group3& group);

// Drops the third coordinate, for comparing subgroups of (m, n, 1) with
// subgroups of Z_m x Z_n.
std::vector<std::array<u64, 2>> project_first_two(const ElementSet& set);

}  // namespace abelian3::oracle
