#pragma once

// Subgroups of Z_m x Z_n. Each subgroup is generated by (a, 0) and (s, b)
// with a | m, b | n, 0 <= s < a and a | (n/b) s.

#include <array>
#include <functional>
#include <vector>

#include "abelian3/arith.hpp"
#include "abelian3/group.hpp"

namespace abelian3 {

struct SubgroupBasis2 {
  u64 m = 1;
  u64 n = 1;
  u64 a = 1;
  u64 b = 1;
  u64 s = 0;
  u64 t = 0;  // s = a t / gcd(a, n/b)

  u128 order() const { return static_cast<u128>(m / a) * (n / b); }
  friend bool operator==(const SubgroupBasis2&, const SubgroupBasis2&) = default;
};

// Visits every subgroup exactly once, ordered by (a, b, t).
void for_each_rank2(u64 m, u64 n,
                    const std::function<void(const SubgroupBasis2&)>& visit);
std::vector<SubgroupBasis2> enumerate_rank2(u64 m, u64 n);

// sum_{a | m, b | n} gcd(a, b)
u128 count_rank2(u64 m, u64 n);

using Element2 = std::array<u64, 2>;

// {(i a + j s mod m, j b mod n)}, sorted. Throws std::length_error when
// m n exceeds `bound`.
std::vector<Element2> rank2_elements(const SubgroupBasis2& basis,
                                     u64 bound = kDefaultElementBound);

}  // namespace abelian3
