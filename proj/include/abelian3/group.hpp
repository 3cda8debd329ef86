#pragma once

// Plain data describing Z_m x Z_n x Z_r and explicit subsets of it. Both the
// constructive enumeration (rank2/rank3) and the brute-force oracle produce
// ElementSet values so their results can be compared directly.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "abelian3/arith.hpp"

namespace abelian3 {

inline constexpr u64 kDefaultElementBound = 4096;

struct Group3 {
  u64 m = 1;
  u64 n = 1;
  u64 r = 1;

  u128 order() const { return static_cast<u128>(m) * n * r; }
  friend auto operator<=>(const Group3&, const Group3&) = default;
};

std::string to_string(const Group3& g);

// Throws std::invalid_argument unless m, n, r >= 1.
void require_valid(const Group3& g);

// Throws std::length_error when the group has more than `bound` elements.
void require_materializable(const Group3& g, u64 bound);

using Element = std::array<u64, 3>;

// A subgroup given by its elements: sorted ascending, no duplicates.
struct ElementSet {
  std::vector<Element> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Element& e) const;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;
};

}  // namespace abelian3
