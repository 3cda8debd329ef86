#pragma once

// Number-theoretic kernel shared by every counting routine: gcd machinery,
// linear congruences, factorization, least-prime-factor sieves and a small
// engine for multiplicative functions.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace abelian3 {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 value);
std::string to_string(i128 value);

// Parses a non-negative decimal integer; throws std::invalid_argument on
// malformed input and std::overflow_error past 2^128 - 1.
u128 parse_u128(const std::string& text);

// Overflow-checked arithmetic. All of them throw std::overflow_error.
u128 checked_add(u128 x, u128 y);
u128 checked_mul(u128 x, u128 y);
i128 checked_add(i128 x, i128 y);
i128 checked_mul(i128 x, i128 y);
u128 checked_pow(u128 base, unsigned exponent);

u128 gcd128(u128 x, u128 y);

struct ExtGcdResult {
  i64 g = 0;  // always >= 0
  i64 u = 0;
  i64 v = 0;
};

// Returns g = gcd(x, y) together with Bezout coefficients u*x + v*y = g.
// ext_gcd(0, 0) is (0, 0, 0).
ExtGcdResult ext_gcd(i64 x, i64 y);

struct CongruenceSolution {
  u64 base_solution = 0;  // least non-negative solution, < period
  u64 period = 1;         // modulus / count
  u64 count = 1;          // number of solutions modulo the original modulus
};

// Solves coeff * u == rhs (mod modulus). Returns std::nullopt when
// gcd(coeff, modulus) does not divide rhs. Throws std::invalid_argument for
// modulus == 0.
std::optional<CongruenceSolution> solve_linear_congruence(i64 coeff, i64 rhs,
                                                          u64 modulus);

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime factorization: primes strictly increasing, exponents >= 1.
// An empty list encodes 1.
struct Factorization {
  std::vector<PrimePower> pairs;

  u64 value() const;
  unsigned exponent_of(u64 prime) const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// Throws std::invalid_argument for n == 0.
Factorization factorize(u64 n);

// All positive divisors of n in increasing order.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

// table[k] is the least prime factor of k for 2 <= k <= limit; table[0] and
// table[1] are 0. Throws std::invalid_argument for limit < 2 and
// std::length_error when the limit does not fit 32-bit entries.
std::vector<std::uint32_t> smallest_prime_factor_sieve(u64 limit);

u64 euler_phi(u64 n);
u64 divisor_count(u64 n);
int mobius(u64 n);

// P(n) = sum_{k=1}^{n} gcd(k, n), by direct summation. O(n).
u64 gcd_sum_direct(u64 n);
// P(p^nu) = (nu+1) p^nu - nu p^(nu-1).
u128 gcd_sum_prime_power(u64 prime, unsigned exponent);
// P(n) evaluated multiplicatively.
u128 gcd_sum(u64 n);

// A multiplicative function given by its values on prime powers. The rule is
// only consulted for exponent >= 1; the value at 1 is always 1.
struct MultiplicativeFunction {
  std::string name;
  std::function<i128(u64 prime, unsigned exponent)> prime_power_rule;
};

i128 evaluate(const MultiplicativeFunction& f, u64 n);
i128 evaluate(const MultiplicativeFunction& f, const Factorization& n);

// Returns values[0..limit] with values[n] = f(n) for n >= 1 and values[0] = 0.
// Each prime power is passed to the rule exactly once. Products are
// overflow-checked.
std::vector<i128> sieve_multiplicative(const MultiplicativeFunction& f,
                                       u64 limit);

MultiplicativeFunction tau_function();
MultiplicativeFunction phi_function();
MultiplicativeFunction mobius_function();
MultiplicativeFunction gcd_sum_function();

}  // namespace abelian3
