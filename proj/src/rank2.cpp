#include "abelian3/rank2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace abelian3 {

void for_each_rank2(u64 m, u64 n,
                    const std::function<void(const SubgroupBasis2&)>& visit) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  const auto divs_m = divisors(m);
  const auto divs_n = divisors(n);
  for (u64 a : divs_m) {
    for (u64 b : divs_n) {
      const u64 A = std::gcd(a, n / b);
      for (u64 t = 0; t < A; ++t) {
        visit(SubgroupBasis2{m, n, a, b, a / A * t, t});
      }
    }
  }
}

std::vector<SubgroupBasis2> enumerate_rank2(u64 m, u64 n) {
  std::vector<SubgroupBasis2> out;
  for_each_rank2(m, n, [&](const SubgroupBasis2& b) { out.push_back(b); });
  return out;
}

u128 count_rank2(u64 m, u64 n) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  u128 total = 0;
  const auto divs_n = divisors(n);
  for (u64 a : divisors(m)) {
    for (u64 b : divs_n) total = checked_add(total, std::gcd(a, b));
  }
  return total;
}

std::vector<Element2> rank2_elements(const SubgroupBasis2& basis, u64 bound) {
  const u128 group_order = static_cast<u128>(basis.m) * basis.n;
  if (group_order > bound) {
    throw std::length_error("group order above the element bound");
  }
  std::vector<Element2> out;
  out.reserve(static_cast<std::size_t>(basis.order()));
  for (u64 i = 0; i < basis.m / basis.a; ++i) {
    for (u64 j = 0; j < basis.n / basis.b; ++j) {
      out.push_back({(i * basis.a + j * basis.s) % basis.m,
                     (j * basis.b) % basis.n});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace abelian3
