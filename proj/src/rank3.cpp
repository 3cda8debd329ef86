#include "abelian3/rank3.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace abelian3 {

namespace {

void ensure(bool condition, const char* what) {
  if (!condition) throw std::logic_error(what);
}

void require_divisor_triple(u64 a, u64 b, u64 c, const Group3& g) {
  if (a == 0 || b == 0 || c == 0 || g.m % a || g.n % b || g.r % c) {
    throw std::invalid_argument("(a,b,c) must divide " + to_string(g));
  }
}

// Primes of m n r with their exponents in m, n and r.
std::map<u64, std::array<unsigned, 3>> local_exponents(const Group3& g) {
  std::map<u64, std::array<unsigned, 3>> out;
  const std::array<u64, 3> parts{g.m, g.n, g.r};
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& [p, e] : factorize(parts[i]).pairs) out[p][i] = e;
  }
  return out;
}

// (ABC / X^2) P(X) for one divisor triple.
u128 subgroups_for_triple(u64 a, u64 b, u64 c, const Group3& g) {
  const DerivedParams d = derived_params(a, b, c, g);
  const u128 abc = static_cast<u128>(d.A) * d.B * d.C;
  const u128 x2 = static_cast<u128>(d.X) * d.X;
  return checked_mul(abc / x2, gcd_sum(d.X));
}

u128 cyclic_for_triple(u64 a, u64 b, u64 c) {
  const u128 ab = static_cast<u128>(a) / std::gcd(a, b) * b;
  const u128 l = ab / gcd128(ab, c) * c;
  ensure(l <= static_cast<u128>(~u64{0}), "lcm exceeds 64 bits");
  const u128 num = checked_mul(checked_mul(u128{euler_phi(a)}, euler_phi(b)),
                               euler_phi(c));
  const u64 den = euler_phi(static_cast<u64>(l));
  ensure(num % den == 0, "cyclic summand is not integral");
  return num / den;
}

template <typename Fn>
void for_each_divisor_triple(const Group3& g, Fn&& fn) {
  const auto dm = divisors(g.m);
  const auto dn = divisors(g.n);
  const auto dr = divisors(g.r);
  for (u64 a : dm)
    for (u64 b : dn)
      for (u64 c : dr) fn(a, b, c);
}

u64 prime_power(u64 p, unsigned e) {
  const u128 v = checked_pow(p, e);
  if (v > static_cast<u128>(~u64{0})) {
    throw std::overflow_error("prime power exceeds 64 bits");
  }
  return static_cast<u64>(v);
}

}  // namespace

DerivedParams derived_params(u64 a, u64 b, u64 c, const Group3& group) {
  require_divisor_triple(a, b, c, group);
  const u64 rc = group.r / c;
  DerivedParams d;
  d.A = std::gcd(a, group.n / b);
  d.B = std::gcd(b, rc);
  d.C = std::gcd(a, rc);
  const u128 abc = static_cast<u128>(d.A) * d.B * d.C;
  d.X = static_cast<u64>(abc / gcd128(static_cast<u128>(a) * rc, abc));
  ensure(d.A % d.X == 0, "X does not divide A");
  ensure(d.B % d.X == 0, "X does not divide B");
  ensure(abc % (static_cast<u128>(d.X) * d.X) == 0, "X^2 does not divide ABC");
  return d;
}

u64 derived_x_alternative(u64 a, u64 b, u64 c, const Group3& group) {
  require_divisor_triple(a, b, c, group);
  const u64 rc = group.r / c;
  const u64 A = std::gcd(a, group.n / b);
  const u64 B = std::gcd(b, rc);
  const u64 C = std::gcd(a, rc);
  const u128 q = static_cast<u128>(a / A) * (rc / C);
  return B / static_cast<u64>(gcd128(q, B));
}

u64 w_range(u64 t, const DerivedParams& params) {
  const u64 g = t == 0 ? params.X : std::gcd(t, params.X);
  return params.B / params.X * g;
}

void for_each_sextuple(const Group3& group,
                       const std::function<void(const Sextuple&)>& visit,
                       const ParamsFn& params) {
  require_valid(group);
  for_each_divisor_triple(group, [&](u64 a, u64 b, u64 c) {
    const DerivedParams d = params(a, b, c, group);
    for (u64 t = 0; t < d.A; ++t) {
      const u64 w_end = w_range(t, d);
      for (u64 w = 0; w < w_end; ++w) {
        for (u64 z = 0; z < d.C; ++z) visit(Sextuple{a, b, c, t, w, z});
      }
    }
  });
}

void for_each_sextuple(const Group3& group,
                       const std::function<void(const Sextuple&)>& visit) {
  for_each_sextuple(group, visit, &derived_params);
}

std::vector<Sextuple> enumerate_sextuples(const Group3& group) {
  std::vector<Sextuple> out;
  for_each_sextuple(group, [&](const Sextuple& sx) { out.push_back(sx); });
  return out;
}

SubgroupBasis3 materialize(const Sextuple& sx, const Group3& group) {
  return materialize(sx, group, derived_params(sx.a, sx.b, sx.c, group));
}

SubgroupBasis3 materialize(const Sextuple& sx, const Group3& group,
                           const DerivedParams& d) {
  require_divisor_triple(sx.a, sx.b, sx.c, group);
  if (sx.t >= d.A || sx.w >= w_range(sx.t, d) || sx.z >= d.C) {
    throw std::invalid_argument("sextuple outside its parameter ranges");
  }
  const u64 a = sx.a, b = sx.b, c = sx.c;
  const u64 rc = group.r / c;

  ensure((static_cast<u128>(a) * sx.t) % d.A == 0, "s is not integral");
  const u64 s = static_cast<u64>(static_cast<u128>(a) * sx.t / d.A);

  const u64 g = sx.t == 0 ? d.X : std::gcd(sx.t, d.X);
  const u128 v_num = static_cast<u128>(b) * d.X * sx.w;
  const u128 v_den = static_cast<u128>(d.B) * g;
  ensure(v_num % v_den == 0, "v is not integral");
  const u64 v = static_cast<u64>(v_num / v_den);

  // r v s / (b c) = ((r/c) v / b) s
  const u128 rcv = static_cast<u128>(rc) * v;
  ensure(rcv % b == 0, "(r/c) v / b is not integral");
  const u128 rhs = (rcv / b % a) * (s % a) % a;

  const auto sol = solve_linear_congruence(static_cast<i64>(rc % a),
                                           static_cast<i64>(rhs), a);
  ensure(sol.has_value(), "congruence for u has no solution");
  ensure(sol->count == d.C, "congruence solution count differs from C");
  const u64 u = sol->base_solution + a / d.C * sx.z;

  return SubgroupBasis3{group, a, s, u, b, v, c};
}

ElementSet subgroup_elements(const SubgroupBasis3& basis, u64 bound) {
  const Group3& g = basis.group;
  require_materializable(g, bound);
  ElementSet out;
  out.elements.reserve(static_cast<std::size_t>(basis.order()));
  for (u64 i = 0; i < g.m / basis.a; ++i) {
    for (u64 j = 0; j < g.n / basis.b; ++j) {
      for (u64 k = 0; k < g.r / basis.c; ++k) {
        out.elements.push_back(
            {(i * basis.a + j * basis.s + k * basis.u) % g.m,
             (j * basis.b + k * basis.v) % g.n, (k * basis.c) % g.r});
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                     out.elements.end());
  return out;
}

u128 count_total_prime_power(u64 p, unsigned e1, unsigned e2, unsigned e3) {
  const Group3 g{prime_power(p, e1), prime_power(p, e2), prime_power(p, e3)};
  return count_total_direct(g);
}

u128 count_by_order_prime_power(u64 p, unsigned e1, unsigned e2, unsigned e3,
                                unsigned order_exponent) {
  const unsigned total = e1 + e2 + e3;
  if (order_exponent > total) return 0;
  const unsigned k = total - order_exponent;  // exponent of p in abc
  u128 sum = 0;
  for (unsigned x = 0; x <= e1; ++x) {
    for (unsigned y = 0; y <= e2; ++y) {
      if (x + y > k || k - x - y > e3) continue;
      const unsigned z = k - x - y;
      const Group3 g{prime_power(p, e1), prime_power(p, e2),
                     prime_power(p, e3)};
      sum = checked_add(sum, subgroups_for_triple(prime_power(p, x),
                                                  prime_power(p, y),
                                                  prime_power(p, z), g));
    }
  }
  return sum;
}

u128 count_cyclic_prime_power(u64 p, unsigned e1, unsigned e2, unsigned e3) {
  const Group3 g{prime_power(p, e1), prime_power(p, e2), prime_power(p, e3)};
  return count_cyclic_direct(g);
}

u128 count_total(const Group3& group) {
  require_valid(group);
  u128 result = 1;
  for (const auto& [p, e] : local_exponents(group)) {
    result = checked_mul(result, count_total_prime_power(p, e[0], e[1], e[2]));
  }
  return result;
}

u128 count_total_direct(const Group3& group) {
  require_valid(group);
  u128 total = 0;
  for_each_divisor_triple(group, [&](u64 a, u64 b, u64 c) {
    total = checked_add(total, subgroups_for_triple(a, b, c, group));
  });
  return total;
}

namespace {

void require_order_divides(const Group3& group, u128 delta) {
  require_valid(group);
  if (delta == 0 || group.order() % delta != 0) {
    throw std::invalid_argument("order " + to_string(delta) +
                                " does not divide |G| = " +
                                to_string(group.order()));
  }
}

}  // namespace

u128 count_by_order(const Group3& group, u128 delta) {
  require_order_divides(group, delta);
  u128 result = 1;
  for (const auto& [p, e] : local_exponents(group)) {
    unsigned k = 0;
    while (delta % p == 0) {
      delta /= p;
      ++k;
    }
    result = checked_mul(result,
                         count_by_order_prime_power(p, e[0], e[1], e[2], k));
  }
  return result;
}

u128 count_by_order_direct(const Group3& group, u128 delta) {
  require_order_divides(group, delta);
  const u128 target = group.order() / delta;
  u128 total = 0;
  for_each_divisor_triple(group, [&](u64 a, u64 b, u64 c) {
    if (static_cast<u128>(a) * b * c == target) {
      total = checked_add(total, subgroups_for_triple(a, b, c, group));
    }
  });
  return total;
}

u128 count_cyclic(const Group3& group) {
  require_valid(group);
  u128 result = 1;
  for (const auto& [p, e] : local_exponents(group)) {
    result = checked_mul(result, count_cyclic_prime_power(p, e[0], e[1], e[2]));
  }
  return result;
}

u128 count_cyclic_direct(const Group3& group) {
  require_valid(group);
  u128 total = 0;
  for_each_divisor_triple(group, [&](u64 a, u64 b, u64 c) {
    total = checked_add(total, cyclic_for_triple(a, b, c));
  });
  return total;
}

MultiplicativeFunction subgroup_count_function() {
  return {"s", [](u64 p, unsigned e) -> i128 {
            return static_cast<i128>(count_total_prime_power(p, e, e, e));
          }};
}

MultiplicativeFunction cyclic_count_function() {
  return {"c", [](u64 p, unsigned e) -> i128 {
            return static_cast<i128>(count_cyclic_prime_power(p, e, e, e));
          }};
}

}  // namespace abelian3
