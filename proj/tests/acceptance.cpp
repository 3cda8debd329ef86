// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails. Tolerances and runtime limits are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "abelian3/asymptotics.hpp"
#include "abelian3/polynomial.hpp"
#include "abelian3/rank3.hpp"
#include "abelian3/typecounts.hpp"
#include "abelian3/verify.hpp"
#include "support.hpp"

using namespace abelian3;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

u64 power(u64 p, unsigned e) {
  u64 out = 1;
  while (e--) out *= p;
  return out;
}

// 1. s(n) for n <= 50.
Outcome table1() {
  Outcome o;
  const auto expected = support::table1();
  o.require(expected.size() == 50, "table1.csv must hold 50 rows");
  const auto sieved = sieve_s(50);
  for (const auto& [n, value] : expected) {
    o.require(count_total({n, n, n}) == value, "count_total differs at n = " + std::to_string(n));
    o.require(sieved[n] == static_cast<i128>(value), "sieve_s differs at n = " + std::to_string(n));
  }
  o.require(expected.at(12) == 3612 && expected.at(36) == 57405 && expected.at(48) == 122836,
            "spot values");
  return o;
}

// 2. s(p^nu) for nu <= 10 as polynomials.
Outcome table2() {
  Outcome o;
  const auto expected = support::table2();
  o.require(expected.size() == 10, "table2.csv must hold 10 rows");
  for (const auto& [nu, text] : expected) {
    o.require(symbolic_count(nu, nu, nu) == parse_polynomial(text),
              "polynomial differs at nu = " + std::to_string(nu));
  }
  const IntPolynomial top = symbolic_count(10, 10, 10);
  o.require(top.degree() == 20 && top.leading_coefficient() == 11, "degree/leading coefficient");
  return o;
}

// 3. s(p^nu1, p^nu2, p^nu3) for 1 <= nu1 <= nu2 <= nu3 <= 4.
Outcome table3() {
  Outcome o;
  const auto expected = support::table3();
  o.require(expected.size() == 20, "table3.csv must hold 20 rows");
  for (const auto& [key, text] : expected) {
    const auto [a, b, c] = key;
    o.require(symbolic_count(a, b, c) == parse_polynomial(text),
              "polynomial differs at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + ")");
  }
  return o;
}

// 4. Enumeration equals the brute-force lattice for mnr <= 120.
Outcome oracle_equivalence() {
  Outcome o;
  const VerifyReport report = verify_up_to(120);
  u64 expected_groups = 0;
  for (u64 k = 1; k <= 120; ++k) {
    for (u64 m : support::naive_divisors(k)) expected_groups += support::naive_tau(k / m);
  }
  o.require(report.groups_checked == expected_groups, "not every group was checked");
  if (!report.passed()) {
    const auto& f = report.failures.front();
    o.require(false, "mismatch at " + to_string(f.group) + ": " + f.problems.front());
  }
  o.detail = o.ok ? std::to_string(report.groups_checked) + " groups, " +
                        std::to_string(report.subgroups_compared) + " subgroups"
                  : o.detail;
  return o;
}

// 5. Closed form equals the symbolic count for nu <= 12.
Outcome general_form_identity() {
  Outcome o;
  for (unsigned nu = 1; nu <= 12; ++nu) {
    o.require(general_form(nu) == symbolic_count(nu, nu, nu),
              "differs at nu = " + std::to_string(nu));
  }
  return o;
}

// 6. Subgroups of (Z_p)^3 by order are Gaussian coefficients.
Outcome gaussian_consistency() {
  Outcome o;
  for (u64 p : {2, 3, 5, 7}) {
    const Group3 g{p, p, p};
    u128 total = 0;
    for (unsigned k = 0; k <= 3; ++k) {
      const u128 count = count_by_order(g, power(p, k));
      o.require(static_cast<i128>(count) == gaussian_binomial(3, k).evaluate(p),
                "p = " + std::to_string(p) + ", k = " + std::to_string(k));
      total += count;
    }
    o.require(total == 2 * (p * p + p + 2), "total at p = " + std::to_string(p));
    o.require(total == count_total(g), "count_total at p = " + std::to_string(p));
  }
  return o;
}

// 7. Type counts summed over |mu| = k give the counts by order.
Outcome birkhoff_cross_check() {
  Outcome o;
  for (unsigned l1 = 0; l1 <= 3; ++l1) {
    for (unsigned l2 = 0; l2 <= l1; ++l2) {
      for (unsigned l3 = 0; l3 <= l2; ++l3) {
        std::vector<unsigned> parts;
        for (unsigned x : {l1, l2, l3}) {
          if (x) parts.push_back(x);
        }
        const Partition lambda(parts);
        for (u64 p : {2, 3}) {
          const Group3 g{power(p, l1), power(p, l2), power(p, l3)};
          for (unsigned k = 0; k <= lambda.size(); ++k) {
            i128 sum = 0;
            for (const auto& mu : sub_partitions(lambda)) {
              if (mu.size() == k) sum += type_count(lambda, mu).evaluate(p);
            }
            o.require(sum == static_cast<i128>(count_by_order(g, power(p, k))),
                      "lambda = (" + std::to_string(l1) + "," + std::to_string(l2) + "," +
                          std::to_string(l3) + "), p = " + std::to_string(p) +
                          ", k = " + std::to_string(k));
          }
        }
      }
    }
  }
  return o;
}

// 8. Multiplicativity. The single-variable values are computed here without
// using multiplicativity: divisor-triple sums for s and c, direct gcd sums
// for P, and h by recursive Dirichlet deconvolution.
Outcome multiplicativity() {
  Outcome o;
  const u64 primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  support::Rng rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    Group3 g1, g2;
    for (u64 p : primes) {
      if (rng.uniform(0, 2) == 0) continue;
      Group3& g = rng.uniform(0, 1) ? g1 : g2;
      for (u64* coord : {&g.m, &g.n, &g.r}) {
        for (u64 e = rng.uniform(0, 2); e > 0; --e) *coord *= p;
      }
    }
    const Group3 prod{g1.m * g2.m, g1.n * g2.n, g1.r * g2.r};
    o.require(count_total(prod) == count_total(g1) * count_total(g2),
              "count_total at " + to_string(g1) + " x " + to_string(g2));
  }

  const u64 N = 10000;
  std::vector<std::vector<u64>> divs(N + 1);
  for (u64 d = 1; d <= N; ++d) {
    for (u64 k = d; k <= N; k += d) divs[k].push_back(d);
  }
  std::vector<u64> P(N + 1), phi(N + 1), tau(N + 1);
  for (u64 n = 1; n <= N; ++n) {
    u64 sum = 0, coprime = 0;
    for (u64 k = 1; k <= n; ++k) {
      const u64 g = std::gcd(k, n);
      sum += g;
      coprime += g == 1;
    }
    P[n] = sum;
    phi[n] = coprime;
    tau[n] = divs[n].size();
  }
  std::vector<i128> s(N + 1), c(N + 1), h(N + 1);
  for (u64 n = 1; n <= N; ++n) {
    i128 total = 0, cyclic = 0;
    for (u64 a : divs[n]) {
      for (u64 b : divs[n]) {
        const u64 A = std::gcd(a, n / b);
        const u64 ab = a / std::gcd(a, b) * b;
        for (u64 cc : divs[n]) {
          const u64 B = std::gcd(b, n / cc), C = std::gcd(a, n / cc);
          const u64 abc = A * B * C;
          const u64 X = abc / std::gcd(a * (n / cc), abc);
          total += static_cast<i128>(abc / (X * X) * P[X]);
          const u64 l = ab / std::gcd(ab, cc) * cc;
          cyclic += static_cast<i128>(phi[a] * phi[b] * phi[cc] / phi[l]);
        }
      }
    }
    s[n] = total;
    c[n] = cyclic;
    i128 rest = 0;
    for (u64 d : divs[n]) {
      if (d > 1) rest += static_cast<i128>(d) * d * tau[d] * h[n / d];
    }
    h[n] = s[n] - rest;
  }
  u64 pairs = 0;
  for (u64 m = 2; m <= N; ++m) {
    for (u64 n = 2; m * n <= N; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      const u64 k = m * n;
      o.require(s[k] == s[m] * s[n], "s at " + std::to_string(m) + " * " + std::to_string(n));
      o.require(c[k] == c[m] * c[n], "c at " + std::to_string(m) + " * " + std::to_string(n));
      o.require(P[k] == P[m] * P[n], "P at " + std::to_string(m) + " * " + std::to_string(n));
      o.require(h[k] == h[m] * h[n], "h at " + std::to_string(m) + " * " + std::to_string(n));
    }
  }
  // The library's multiplicative evaluations agree with the direct values.
  const auto s_lib = sieve_s(N);
  const auto h_lib = h_values(N);
  for (u64 n = 1; n <= N; ++n) {
    o.require(s_lib[n] == s[n] && h_lib[n] == h[n], "library differs at n = " + std::to_string(n));
    o.require(static_cast<i128>(count_cyclic({n, n, n})) == c[n], "c differs at " + std::to_string(n));
    o.require(gcd_sum(n) == P[n], "P differs at " + std::to_string(n));
  }
  if (o.ok) o.detail = "150 coprime group pairs, " + std::to_string(pairs) + " coprime (m, n)";
  return o;
}

// 9. s = (n^2 tau(n)) * h, and the closed form of h(p^nu).
Outcome convolution_identity() {
  Outcome o;
  const u64 N = 10000;
  std::vector<u64> tau(N + 1, 0);
  for (u64 d = 1; d <= N; ++d) {
    for (u64 k = d; k <= N; k += d) ++tau[k];
  }
  const auto h = h_values(N);
  const auto s = sieve_s(N);
  std::vector<i128> conv(N + 1, 0);
  for (u64 d = 1; d <= N; ++d) {
    const i128 w = static_cast<i128>(d) * d * tau[d];
    for (u64 k = 1; d * k <= N; ++k) conv[d * k] += w * h[k];
  }
  for (u64 n = 1; n <= N; ++n) o.require(conv[n] == s[n], "convolution at n = " + std::to_string(n));
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned nu = 1; nu <= 10; ++nu) {
      o.require(h_prime_power(p, nu) == h_closed_form(nu).evaluate(p),
                "h(" + std::to_string(p) + "^" + std::to_string(nu) + ")");
    }
  }
  for (unsigned nu = 1; nu <= 10; ++nu) {
    o.require(h_recurrence(nu) == h_closed_form(nu), "h polynomial at nu = " + std::to_string(nu));
  }
  return o;
}

// 10. Average order of s(n).
Outcome asymptotic_behavior() {
  Outcome o;
  const DirichletValues euler = H3_and_H3prime(100000, 16);
  const DirichletValues coarse = H3_and_H3prime(10000, 16);
  o.require(std::abs(euler.H3 - coarse.H3) < 1e-9 * euler.H3,
            "H(3) moves in the first 9 digits between prime limits 1e4 and 1e5");

  const std::vector<u64> xs{1000, 10000, 100000, 1000000};
  const auto reports = asymptotic_reports(xs, euler);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    o.require(reports[i].relative_error < reports[i - 1].relative_error,
              "relative error not decreasing at x = " + std::to_string(reports[i].x));
  }
  o.require(reports.back().relative_error < 0.01, "relative error at 1e6 is not below 1%");

  const auto h = h_values(1000000);
  const DirichletValues direct = H3_direct_sum(h, 100000);
  o.require(std::abs(direct.H3 - euler.H3) <= direct.H3_error + euler.H3_error,
            "H(3): Euler product and direct sum disagree beyond the tail bounds");
  o.require(std::abs(direct.H3prime - euler.H3prime) <= direct.H3prime_error + euler.H3prime_error,
            "H'(3): Euler product and direct sum disagree beyond the tail bounds");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "H(3)=%.12f H'(3)=%.12f rel.err. %.2e .. %.2e", euler.H3,
                  euler.H3prime, reports.front().relative_error, reports.back().relative_error);
    o.detail = buf;
  }
  return o;
}

// 11. Throughput.
Outcome performance() {
  Outcome o;
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  const auto s = sieve_s(1000000);
  const double sieve_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  o.require(s[1000000] > 0, "sieve value");
  o.require(sieve_seconds < 10, "sieve_s(1e6) took " + std::to_string(sieve_seconds) + " s");

  t0 = clock::now();
  const u128 cyclic = count_total({1ULL << 20, 1594323, 1953125});
  const u128 cyclic_direct = count_total_direct({1ULL << 20, 1594323, 1953125});
  const u64 big = (1ULL << 20) * 1594323ULL;  // 2^20 3^13
  const u128 rich = count_total({big, big, big});
  const u128 mixed = count_total({big, 1953125ULL * 16, 1594323ULL * 1953125ULL});
  const double count_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  o.require(cyclic == 21 * 14 * 10 && cyclic_direct == cyclic, "cyclic case");
  o.require(static_cast<i128>(rich) ==
                symbolic_count(20, 20, 20).evaluate(2) * symbolic_count(13, 13, 13).evaluate(3),
            "count_total(N, N, N) disagrees with the symbolic count");
  o.require(static_cast<i128>(mixed) == symbolic_count(20, 4, 0).evaluate(2) *
                                            symbolic_count(13, 0, 13).evaluate(3) *
                                            symbolic_count(0, 9, 9).evaluate(5),
            "mixed count disagrees with the symbolic count");
  o.require(count_seconds < 1, "large counts took " + std::to_string(count_seconds) + " s");
  if (o.ok) {
    char buf[120];
    std::snprintf(buf, sizeof buf, "sieve_s(1e6) %.2f s, large counts %.4f s", sieve_seconds,
                  count_seconds);
    o.detail = buf;
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "s(n) for n <= 50 matches table1.csv", 1, table1},
      {2, "s(p^nu) for nu <= 10 matches table2.csv", 5, table2},
      {3, "s(p^nu1,p^nu2,p^nu3) rows match table3.csv", 1, table3},
      {4, "enumeration equals brute-force lattice for mnr <= 120", 120, oracle_equivalence},
      {5, "general_form(nu) = symbolic_count(nu,nu,nu), nu <= 12", 10, general_form_identity},
      {6, "counts by order in (Z_p)^3 are Gaussian coefficients", 60, gaussian_consistency},
      {7, "type counts sum to counts by order", 60, birkhoff_cross_check},
      {8, "multiplicativity of count_total, s, c, P, h", 120, multiplicativity},
      {9, "s = n^2 tau(n) * h and closed form of h(p^nu)", 60, convolution_identity},
      {10, "asymptotic main term, H(3) stability, Euler vs direct", 120, asymptotic_behavior},
      {11, "performance floor", 60, performance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && seconds >= c.limit_seconds) {
      o.ok = false;
      o.detail = "exceeded the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    failures += !o.ok;
    std::printf("%s %2d  %s  [%.2f s]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
