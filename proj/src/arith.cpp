#include "abelian3/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace abelian3 {

namespace {

u64 mul_mod(u64 x, u64 y, u64 mod) {
  return static_cast<u64>(static_cast<u128>(x) * y % mod);
}

u64 pow_mod(u64 base, u64 exponent, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exponent) {
    if (exponent & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exponent >>= 1;
  }
  return result;
}

// Inverse of x modulo mod, assuming gcd(x, mod) == 1.
u64 inverse_mod(u64 x, u64 mod) {
  i128 old_r = x % mod, r = mod;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  i128 inv = old_s % static_cast<i128>(mod);
  if (inv < 0) inv += mod;
  return static_cast<u64>(inv);
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  split_into(d, primes);
  split_into(n / d, primes);
}

}  // namespace

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

std::string to_string(i128 value) {
  if (value < 0) {
    return "-" + to_string(static_cast<u128>(-(value + 1)) + 1);
  }
  return to_string(static_cast<u128>(value));
}

u128 parse_u128(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  u128 value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not a non-negative integer: " + text);
    }
    value = checked_add(checked_mul(value, 10), static_cast<u128>(ch - '0'));
  }
  return value;
}

u128 checked_add(u128 x, u128 y) {
  u128 out;
  if (__builtin_add_overflow(x, y, &out)) {
    throw std::overflow_error("128-bit addition overflow");
  }
  return out;
}

u128 checked_mul(u128 x, u128 y) {
  u128 out;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw std::overflow_error("128-bit multiplication overflow");
  }
  return out;
}

i128 checked_add(i128 x, i128 y) {
  i128 out;
  if (__builtin_add_overflow(x, y, &out)) {
    throw std::overflow_error("128-bit addition overflow");
  }
  return out;
}

i128 checked_mul(i128 x, i128 y) {
  i128 out;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw std::overflow_error("128-bit multiplication overflow");
  }
  return out;
}

u128 checked_pow(u128 base, unsigned exponent) {
  u128 result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

u128 gcd128(u128 x, u128 y) {
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

ExtGcdResult ext_gcd(i64 x, i64 y) {
  i128 old_r = x, r = y;
  i128 old_s = 1, s = 0;
  i128 old_t = 0, t = 1;
  while (r != 0) {
    i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
    std::swap(old_t, t);
    t -= q * old_t;
  }
  if (old_r == 0) return {0, 0, 0};
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {static_cast<i64>(old_r), static_cast<i64>(old_s),
          static_cast<i64>(old_t)};
}

std::optional<CongruenceSolution> solve_linear_congruence(i64 coeff, i64 rhs,
                                                          u64 modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  auto reduce = [modulus](i64 v) {
    i128 m = static_cast<i128>(modulus);
    i128 r = static_cast<i128>(v) % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
  };
  const u64 c = reduce(coeff);
  const u64 b = reduce(rhs);
  const u64 g = std::gcd(c, modulus);  // gcd(0, M) = M
  if (b % g != 0) return std::nullopt;
  const u64 period = modulus / g;
  u64 base = 0;
  if (period > 1) {
    base = mul_mod((b / g) % period, inverse_mod((c / g) % period, period),
                   period);
  }
  return CongruenceSolution{base, period, g};
}

u64 Factorization::value() const {
  u128 v = 1;
  for (const auto& pp : pairs) v = checked_mul(v, checked_pow(pp.prime, pp.exponent));
  if (v > std::numeric_limits<u64>::max()) {
    throw std::overflow_error("factorization value exceeds 64 bits");
  }
  return static_cast<u64>(v);
}

unsigned Factorization::exponent_of(u64 prime) const {
  for (const auto& pp : pairs) {
    if (pp.prime == prime) return pp.exponent;
  }
  return 0;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases known to be deterministic for n < 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                1795265022ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  std::vector<u64> primes;
  for (u64 p = 2; p < 1024 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  split_into(n, primes);
  std::sort(primes.begin(), primes.end());

  Factorization f;
  for (u64 p : primes) {
    if (!f.pairs.empty() && f.pairs.back().prime == p) {
      ++f.pairs.back().exponent;
    } else {
      f.pairs.push_back({p, 1});
    }
  }
  return f;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.pairs) {
    const std::size_t base_count = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

std::vector<std::uint32_t> smallest_prime_factor_sieve(u64 limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("sieve limit exceeds 32-bit table entries");
  }
  std::vector<std::uint32_t> table(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (table[i] != 0) continue;
    table[i] = static_cast<std::uint32_t>(i);
    for (u64 j = i * i; j <= limit; j += i) {
      if (table[j] == 0) table[j] = static_cast<std::uint32_t>(i);
    }
  }
  return table;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (const auto& [p, e] : factorize(n).pairs) result = result / p * (p - 1);
  return result;
}

u64 divisor_count(u64 n) {
  u64 result = 1;
  for (const auto& pp : factorize(n).pairs) result *= pp.exponent + 1;
  return result;
}

int mobius(u64 n) {
  int result = 1;
  for (const auto& pp : factorize(n).pairs) {
    if (pp.exponent > 1) return 0;
    result = -result;
  }
  return result;
}

u64 gcd_sum_direct(u64 n) {
  u64 total = 0;
  for (u64 k = 1; k <= n; ++k) total += std::gcd(k, n);
  return total;
}

u128 gcd_sum_prime_power(u64 prime, unsigned exponent) {
  if (exponent == 0) return 1;
  const u128 lower = checked_pow(prime, exponent - 1);
  const u128 upper = checked_mul(lower, prime);
  return checked_mul(upper, exponent + 1) - checked_mul(lower, exponent);
}

u128 gcd_sum(u64 n) {
  u128 result = 1;
  for (const auto& [p, e] : factorize(n).pairs) {
    result = checked_mul(result, gcd_sum_prime_power(p, e));
  }
  return result;
}

i128 evaluate(const MultiplicativeFunction& f, const Factorization& n) {
  i128 result = 1;
  for (const auto& [p, e] : n.pairs) {
    result = checked_mul(result, f.prime_power_rule(p, e));
  }
  return result;
}

i128 evaluate(const MultiplicativeFunction& f, u64 n) {
  return evaluate(f, factorize(n));
}

std::vector<i128> sieve_multiplicative(const MultiplicativeFunction& f,
                                       u64 limit) {
  if (limit == 0) throw std::invalid_argument("sieve limit must be >= 1");
  std::vector<i128> values(limit + 1, 0);
  values[1] = 1;
  if (limit == 1) return values;

  const auto spf = smallest_prime_factor_sieve(limit);
  // prime_part[n] = p^e where p = spf[n] and p^e || n.
  std::vector<std::uint32_t> prime_part(limit + 1, 1);
  std::vector<std::uint8_t> exponent(limit + 1, 0);
  for (u64 n = 2; n <= limit; ++n) {
    const std::uint32_t p = spf[n];
    const u64 q = n / p;
    if (q % p == 0) {
      prime_part[n] = prime_part[q] * p;
      exponent[n] = static_cast<std::uint8_t>(exponent[q] + 1);
    } else {
      prime_part[n] = p;
      exponent[n] = 1;
    }
    if (prime_part[n] == n) {
      values[n] = f.prime_power_rule(p, exponent[n]);
    } else {
      values[n] = checked_mul(values[n / prime_part[n]], values[prime_part[n]]);
    }
  }
  return values;
}

MultiplicativeFunction tau_function() {
  return {"tau", [](u64, unsigned e) -> i128 { return e + 1; }};
}

MultiplicativeFunction phi_function() {
  return {"phi", [](u64 p, unsigned e) -> i128 {
            return static_cast<i128>(checked_mul(checked_pow(p, e - 1), p - 1));
          }};
}

MultiplicativeFunction mobius_function() {
  return {"mu", [](u64, unsigned e) -> i128 { return e == 1 ? -1 : 0; }};
}

MultiplicativeFunction gcd_sum_function() {
  return {"P", [](u64 p, unsigned e) -> i128 {
            return static_cast<i128>(gcd_sum_prime_power(p, e));
          }};
}

}  // namespace abelian3
