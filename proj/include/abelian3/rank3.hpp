#pragma once

// Subgroups of Z_m x Z_n x Z_r.
//
// Every subgroup is indexed by a sextuple (a, b, c, t, w, z) with a | m,
// b | n, c | r and
//
//   A = gcd(a, n/b)   B = gcd(b, r/c)   C = gcd(a, r/c)
//   X = ABC / gcd(a (r/c), ABC)
//
//   0 <= t < A,   0 <= w < B gcd(t, X) / X,   0 <= z < C
//
// and is generated by the triangular basis (a,0,0), (s,b,0), (u,v,c) where
//
//   s = a t / A,   v = b X w / (B gcd(t, X)),   u = u0 + (a/C) z
//
// and u0 is the least non-negative solution of (r/c) u == r v s / (b c)
// (mod a). The subgroup has order m n r / (a b c). Summing over t, w, z gives
//
//   s(m, n, r) = sum_{a|m, b|n, c|r} (ABC / X^2) P(X).
//
// gcd(0, X) is taken to be X.

#include <compare>
#include <functional>
#include <vector>

#include "abelian3/arith.hpp"
#include "abelian3/group.hpp"

namespace abelian3 {

struct DerivedParams {
  u64 A = 1;
  u64 B = 1;
  u64 C = 1;
  u64 X = 1;
  friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

// Requires a | m, b | n, c | r (std::invalid_argument otherwise). Throws
// std::logic_error if X | A, X | B or X^2 | ABC fails.
DerivedParams derived_params(u64 a, u64 b, u64 c, const Group3& group);

// X computed as B / gcd((a/A)(r/c)/C, B); must agree with derived_params().X.
u64 derived_x_alternative(u64 a, u64 b, u64 c, const Group3& group);

using ParamsFn = std::function<DerivedParams(u64, u64, u64, const Group3&)>;

struct Sextuple {
  u64 a = 1, b = 1, c = 1;
  u64 t = 0, w = 0, z = 0;
  friend auto operator<=>(const Sextuple&, const Sextuple&) = default;
};

struct SubgroupBasis3 {
  Group3 group;
  u64 a = 1, s = 0, u = 0;
  u64 b = 1, v = 0;
  u64 c = 1;

  u128 order() const {
    return static_cast<u128>(group.m / a) * (group.n / b) * (group.r / c);
  }
  friend bool operator==(const SubgroupBasis3&, const SubgroupBasis3&) = default;
};

// Range bound for w given t.
u64 w_range(u64 t, const DerivedParams& params);

// Visits every sextuple of the group exactly once in lexicographic order of
// (a, b, c, t, w, z). The ParamsFn overload exists for fault injection.
void for_each_sextuple(const Group3& group,
                       const std::function<void(const Sextuple&)>& visit);
void for_each_sextuple(const Group3& group,
                       const std::function<void(const Sextuple&)>& visit,
                       const ParamsFn& params);
std::vector<Sextuple> enumerate_sextuples(const Group3& group);

// Builds the triangular basis of a sextuple. Throws std::invalid_argument
// for a sextuple outside its ranges and std::logic_error if an integrality
// or solvability invariant fails.
SubgroupBasis3 materialize(const Sextuple& sx, const Group3& group);
SubgroupBasis3 materialize(const Sextuple& sx, const Group3& group,
                           const DerivedParams& params);

// {(i a + j s + k u, j b + k v, k c)} over 0 <= i < m/a, 0 <= j < n/b,
// 0 <= k < r/c. Throws std::length_error above `bound` group elements.
ElementSet subgroup_elements(const SubgroupBasis3& basis,
                             u64 bound = kDefaultElementBound);

// Total number of subgroups. Evaluated prime by prime; count_total_direct
// sums over all divisor triples of (m, n, r).
u128 count_total(const Group3& group);
u128 count_total_direct(const Group3& group);

// Number of subgroups of order delta. Throws std::invalid_argument unless
// delta | mnr.
u128 count_by_order(const Group3& group, u128 delta);
u128 count_by_order_direct(const Group3& group, u128 delta);

// sum_{a|m, b|n, c|r} phi(a) phi(b) phi(c) / phi(lcm(a, b, c))
u128 count_cyclic(const Group3& group);
u128 count_cyclic_direct(const Group3& group);

// Local factors at a prime p for the group (p^e1, p^e2, p^e3).
u128 count_total_prime_power(u64 p, unsigned e1, unsigned e2, unsigned e3);
u128 count_by_order_prime_power(u64 p, unsigned e1, unsigned e2, unsigned e3,
                                unsigned order_exponent);
u128 count_cyclic_prime_power(u64 p, unsigned e1, unsigned e2, unsigned e3);

// n -> s(n, n, n) and n -> c(n, n, n) as multiplicative functions.
MultiplicativeFunction subgroup_count_function();
MultiplicativeFunction cyclic_count_function();

}  // namespace abelian3
