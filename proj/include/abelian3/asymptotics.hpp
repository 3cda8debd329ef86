#pragma once

// Average order of s(n) = s(n, n, n).
//
// With s = (n^2 tau(n)) * h under Dirichlet convolution and H(z) the
// Dirichlet series of h,
//
//   sum_{n <= x} s(n) = x^3/3 (H(3) (log x + 2 gamma - 1/3) + H'(3)) + error.
//
// The constant 2 gamma - 1/3 is the one carried over from
// sum_{n<=x} n^2 tau(n) = x^3 log x / 3 + (2 gamma - 1/3) x^3 / 3; the
// variant with 2 gamma - 1 is off by 2 H(3) x^3 / 9.
//
// Everything here is desk-scale: exact integer partial sums from a sieve,
// compared against the main term evaluated in double precision.

#include <span>
#include <vector>

#include "abelian3/arith.hpp"

namespace abelian3 {

struct Constants {
  static constexpr double euler_gamma = 0.57721566490153286061;
  // Best known exponent bound in the divisor problem, 131/416. Reported only.
  static constexpr int theta_numerator = 131;
  static constexpr int theta_denominator = 416;
};

// s(1..limit); element 0 is unused and zero.
std::vector<i128> sieve_s(u64 limit);

// h(p^nu) from s(p^nu) - 2 p^2 s(p^(nu-1)) + p^4 s(p^(nu-2)).
i128 h_prime_power(u64 p, unsigned nu);
MultiplicativeFunction h_function();
// h(1..limit); element 0 is unused and zero.
std::vector<i128> h_values(u64 limit);

// Riemann zeta and its derivative for real s > 1 (Euler-Maclaurin).
double zeta(double s);
double zeta_minus_one(double s);
double zeta_derivative(double s);
// Prime zeta function sum_p p^-s and its derivative, for s >= 2.
double prime_zeta(double s);
double prime_zeta_derivative(double s);

struct DirichletValues {
  double H3 = 0;
  double H3prime = 0;
  double H3_error = 0;       // |true - reported| <= H3_error
  double H3prime_error = 0;
};

// Euler product over p <= prime_limit, with the remaining primes handled by
// expanding the logarithm of the local factor into tail_terms powers of 1/p
// and summing each power over p > prime_limit through the prime zeta
// function. Requires prime_limit >= 100 and tail_terms >= 4.
DirichletValues H3_and_H3prime(u64 prime_limit, unsigned tail_terms);

// Truncated Dirichlet sums sum_{n<=N} h(n)/n^3 and -sum h(n) log n / n^3
// from h[1..N], with tail bounds from Rankin's trick (the Euler product of
// H(3 - delta) up to prime_limit bounds the tail).
DirichletValues H3_direct_sum(std::span<const i128> h, u64 prime_limit);

// (x^3/3) (H3 (log x + 2 gamma - 1/3) + H3prime)
double main_term(double x, double H3, double H3prime);

struct DivisorSumCheck {
  u64 x = 0;
  u128 tau_sum = 0;            // sum_{n<=x} tau(n)
  double tau_main = 0;         // x log x + (2 gamma - 1) x
  double tau_relative_error = 0;
  u128 n2tau_sum = 0;          // sum_{n<=x} n^2 tau(n)
  double n2tau_main = 0;       // x^3 log x / 3 + (2 gamma - 1/3) x^3 / 3
  double n2tau_relative_error = 0;
};

DivisorSumCheck divisor_sum_check(u64 x);

struct AsymptoticReport {
  u64 x = 0;
  u128 exact_sum = 0;
  double main_term = 0;
  double relative_error = 0;
  double error_exponent_estimate = 0;  // log|exact - main| / log x
};

// One report per x (each x >= 2), sharing a single sieve up to max(xs).
std::vector<AsymptoticReport> asymptotic_reports(std::span<const u64> xs,
                                                 const DirichletValues& h3);

}  // namespace abelian3
