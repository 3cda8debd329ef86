#include "abelian3/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "abelian3/rank3.hpp"

namespace abelian3 {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

// B_{2k} / (2k)! for k = 1..10.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 6 / 2,
    -1.0 / 30 / 24,
    1.0 / 42 / 720,
    -1.0 / 30 / 40320,
    5.0 / 66 / 3628800,
    -691.0 / 2730 / 479001600,
    7.0 / 6 / 87178291200.0,
    -3617.0 / 510 / 20922789888000.0,
    43867.0 / 798 / 6402373705728000.0,
    -174611.0 / 330 / 2432902008176640000.0,
};

constexpr int kEulerMaclaurinCutoff = 16;

// Slack for floating-point rounding in the reported error bounds.
constexpr double kRoundingSlack = 1e-12;

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  const auto spf = smallest_prime_factor_sieve(limit);
  for (u64 k = 2; k <= limit; ++k) {
    if (spf[k] == k) out.push_back(k);
  }
  return out;
}

// Local Euler factor 1 + 2 p^(1-z) + 2 p^(-z) + p^(1-2z) of H at p.
double local_factor(double p, double z) {
  return 1 + 2 * std::pow(p, 1 - z) + 2 * std::pow(p, -z) +
         std::pow(p, 1 - 2 * z);
}

// Power series quotient num / den truncated after `terms` coefficients.
std::vector<double> series_divide(const std::vector<double>& num,
                                  const std::vector<double>& den,
                                  std::size_t terms) {
  std::vector<double> q(terms, 0.0);
  for (std::size_t k = 0; k < terms; ++k) {
    double acc = k < num.size() ? num[k] : 0.0;
    for (std::size_t i = 1; i <= k && i < den.size(); ++i) acc -= den[i] * q[k - i];
    q[k] = acc / den[0];
  }
  return q;
}

// Upper bound for H(z), 2 < z < 3, from the Euler product over p <= P and
// log(1 + u) <= u for the remaining primes.
double H_upper_bound(double z, const std::vector<u64>& primes) {
  double log_product = 0;
  for (u64 p : primes) log_product += std::log(local_factor(static_cast<double>(p), z));
  const double P = static_cast<double>(primes.back());
  const double tail = 2 * std::pow(P, 2 - z) / (z - 2) +
                      2 * std::pow(P, 1 - z) / (z - 1) +
                      std::pow(P, 2 - 2 * z) / (2 * z - 2);
  const double zz = zeta(z);
  return zz * zz * std::exp(log_product + tail) * (1 + kRoundingSlack);
}

}  // namespace

std::vector<i128> sieve_s(u64 limit) {
  return sieve_multiplicative(subgroup_count_function(), limit);
}

i128 h_prime_power(u64 p, unsigned nu) {
  auto s = [p](unsigned e) -> i128 {
    return static_cast<i128>(count_total_prime_power(p, e, e, e));
  };
  const i128 p2 = checked_mul(static_cast<i128>(p), static_cast<i128>(p));
  i128 h = s(nu);
  if (nu >= 1) h -= checked_mul(2 * p2, s(nu - 1));
  if (nu >= 2) h += checked_mul(checked_mul(p2, p2), s(nu - 2));
  return h;
}

MultiplicativeFunction h_function() { return {"h", &h_prime_power}; }

std::vector<i128> h_values(u64 limit) {
  return sieve_multiplicative(h_function(), limit);
}

double zeta_minus_one(double s) {
  if (!(s > 1)) throw std::domain_error("zeta requires s > 1");
  const double N = kEulerMaclaurinCutoff;
  CompensatedSum sum;
  for (int n = kEulerMaclaurinCutoff - 1; n >= 2; --n) sum.add(std::pow(n, -s));
  const double Ns = std::pow(N, -s);
  sum.add(N * Ns / (s - 1));
  sum.add(Ns / 2);
  double rising = s;  // s (s+1) ... (s+2k-2)
  double power = Ns / N;  // N^(-s-2k+1)
  for (std::size_t k = 1; k <= kBernoulliOverFactorial.size(); ++k) {
    sum.add(kBernoulliOverFactorial[k - 1] * rising * power);
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    power /= N * N;
  }
  return sum.value();
}

double zeta(double s) { return 1 + zeta_minus_one(s); }

double zeta_derivative(double s) {
  if (!(s > 1)) throw std::domain_error("zeta requires s > 1");
  const double N = kEulerMaclaurinCutoff;
  const double logN = std::log(N);
  CompensatedSum sum;
  for (int n = kEulerMaclaurinCutoff - 1; n >= 2; --n) {
    sum.add(-std::log(n) * std::pow(n, -s));
  }
  const double Ns = std::pow(N, -s);
  // d/ds N^(1-s)/(s-1)
  sum.add(-N * Ns * (logN / (s - 1) + 1 / ((s - 1) * (s - 1))));
  // d/ds N^(-s)/2
  sum.add(-logN * Ns / 2);
  double rising = s;
  double rising_log_derivative = 1 / s;
  double power = Ns / N;
  for (std::size_t k = 1; k <= kBernoulliOverFactorial.size(); ++k) {
    sum.add(kBernoulliOverFactorial[k - 1] * rising * power *
            (rising_log_derivative - logN));
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    rising_log_derivative += 1 / (s + 2 * k - 1) + 1 / (s + 2 * k);
    power /= N * N;
  }
  return sum.value();
}

double prime_zeta(double s) {
  if (s < 2) throw std::domain_error("prime_zeta requires s >= 2");
  CompensatedSum sum;
  for (u64 m = 1; m * s < 1100; ++m) {
    const int mu = mobius(m);
    if (mu != 0) sum.add(mu * std::log1p(zeta_minus_one(m * s)) / m);
    if (std::pow(2.0, -(m * s)) < 1e-40) break;
  }
  return sum.value();
}

double prime_zeta_derivative(double s) {
  if (s < 2) throw std::domain_error("prime_zeta requires s >= 2");
  CompensatedSum sum;
  for (u64 m = 1; m * s < 1100; ++m) {
    const int mu = mobius(m);
    if (mu != 0) sum.add(mu * zeta_derivative(m * s) / zeta(m * s));
    if (std::pow(2.0, -(m * s)) < 1e-40) break;
  }
  return sum.value();
}

DirichletValues H3_and_H3prime(u64 prime_limit, unsigned tail_terms) {
  if (prime_limit < 100) throw std::invalid_argument("prime_limit must be >= 100");
  if (tail_terms < 4) throw std::invalid_argument("tail_terms must be >= 4");
  const auto primes = primes_up_to(prime_limit);
  const double P = static_cast<double>(prime_limit);
  const std::size_t K = tail_terms;

  // At z = 3, in x = 1/p: f = 1 + 2x^2 + 2x^3 + x^5 is the local factor and
  // -log(p) g/f with g = 2x^2 + 2x^3 + 2x^5 its logarithmic derivative.
  const std::vector<double> f{1, 0, 2, 2, 0, 1};
  const std::vector<double> f_minus_one{0, 0, 2, 2, 0, 1};
  const std::vector<double> f_prime{0, 4, 6, 0, 5};
  const std::vector<double> g{0, 0, 2, 2, 0, 2};
  auto eval = [](const std::vector<double>& c, double x) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  CompensatedSum log_product, log_derivative;
  for (u64 p : primes) {
    const double x = 1.0 / static_cast<double>(p);
    log_product.add(std::log1p(eval(f_minus_one, x)));
    log_derivative.add(-std::log(static_cast<double>(p)) * eval(g, x) / eval(f, x));
  }

  // log f = sum c_e x^e with c_e = [x^(e-1)](f'/f) / e; g/f = sum d_e x^e.
  const auto fp_over_f = series_divide(f_prime, f, K + 1);
  const auto g_over_f = series_divide(g, f, K + 1);
  for (std::size_t e = 2; e <= K; ++e) {
    CompensatedSum head0, head1;
    for (u64 p : primes) {
      const double pe = std::pow(static_cast<double>(p), -static_cast<double>(e));
      head0.add(pe);
      head1.add(std::log(static_cast<double>(p)) * pe);
    }
    const double ed = static_cast<double>(e);
    const double tail0 = prime_zeta(ed) - head0.value();
    const double tail1 = -prime_zeta_derivative(ed) - head1.value();
    log_product.add(fp_over_f[e - 1] / ed * tail0);
    log_derivative.add(-g_over_f[e] * tail1);
  }

  // Cauchy estimates on |x| = 1/2, where |f - 1| <= 25/32.
  const double u_R = 0.78125;
  const double S0 = -std::log1p(-u_R);
  const double M1 = (0.5 + 0.25 + 0.0625) / (1 - u_R);
  const double geometric = std::pow(2.0 / P, static_cast<double>(K)) * 2.0 /
                           (1 - 2 / (P + 1));
  const double Kd = static_cast<double>(K);
  const double residual0 = S0 * geometric / Kd;
  const double residual1 = M1 * geometric * (std::log(P) / Kd + 1 / (Kd * Kd));

  const double z3 = zeta(3.0);
  DirichletValues out;
  out.H3 = z3 * z3 * std::exp(log_product.value());
  const double L = 2 * zeta_derivative(3.0) / z3 + log_derivative.value();
  out.H3prime = out.H3 * L;

  const double log_error = residual0 + kRoundingSlack;
  const double L_error = residual1 + kRoundingSlack * (1 + std::abs(L));
  out.H3_error = out.H3 * std::expm1(log_error);
  out.H3prime_error = out.H3_error * (std::abs(L) + L_error) + out.H3 * L_error;
  return out;
}

DirichletValues H3_direct_sum(std::span<const i128> h, u64 prime_limit) {
  if (h.size() < 2) throw std::invalid_argument("need h(1..N) with N >= 1");
  if (prime_limit < 100) throw std::invalid_argument("prime_limit must be >= 100");
  const u64 N = h.size() - 1;
  CompensatedSum sum0, sum1;
  for (u64 n = 1; n <= N; ++n) {
    const double nd = static_cast<double>(n);
    const double term = static_cast<double>(h[n]) / (nd * nd * nd);
    sum0.add(term);
    sum1.add(-term * std::log(nd));
  }

  const auto primes = primes_up_to(prime_limit);
  const double Nd = static_cast<double>(N);
  double tail0 = std::numeric_limits<double>::infinity();
  double tail1 = std::numeric_limits<double>::infinity();
  for (int step = 4; step <= 19; ++step) {
    const double delta = 0.05 * step;
    const double bound = std::pow(Nd, -delta) * H_upper_bound(3 - delta, primes);
    tail0 = std::min(tail0, bound);
    // log(n) n^-delta decreases for n > e^(1/delta).
    if (std::log(Nd) > 1 / delta) tail1 = std::min(tail1, std::log(Nd) * bound);
  }

  DirichletValues out;
  out.H3 = sum0.value();
  out.H3prime = sum1.value();
  out.H3_error = tail0 + kRoundingSlack * out.H3;
  out.H3prime_error = tail1 + kRoundingSlack * std::abs(out.H3prime);
  return out;
}

double main_term(double x, double H3, double H3prime) {
  return x * x * x / 3 *
         (H3 * (std::log(x) + 2 * Constants::euler_gamma - 1.0 / 3) + H3prime);
}

DivisorSumCheck divisor_sum_check(u64 x) {
  if (x < 2) throw std::invalid_argument("x must be >= 2");
  DivisorSumCheck out;
  out.x = x;
  for (u64 d = 1; d <= x; ++d) {
    const u128 k = x / d;
    out.tau_sum += k;
    const u128 squares = k * (k + 1) * (2 * k + 1) / 6;
    out.n2tau_sum = checked_add(out.n2tau_sum,
                                checked_mul(static_cast<u128>(d) * d, squares));
  }
  const double xd = static_cast<double>(x);
  const double lx = std::log(xd);
  const double g = Constants::euler_gamma;
  out.tau_main = xd * lx + (2 * g - 1) * xd;
  out.tau_relative_error =
      std::abs(static_cast<double>(out.tau_sum) - out.tau_main) / out.tau_main;
  out.n2tau_main = xd * xd * xd * lx / 3 + (2 * g - 1.0 / 3) * xd * xd * xd / 3;
  out.n2tau_relative_error =
      std::abs(static_cast<double>(out.n2tau_sum) - out.n2tau_main) / out.n2tau_main;
  return out;
}

std::vector<AsymptoticReport> asymptotic_reports(std::span<const u64> xs,
                                                 const DirichletValues& h3) {
  if (xs.empty()) return {};
  for (u64 x : xs) {
    if (x < 2) throw std::invalid_argument("x values must be >= 2");
  }
  const u64 limit = *std::max_element(xs.begin(), xs.end());
  const auto s = sieve_s(limit);
  std::vector<u128> prefix(limit + 1, 0);
  for (u64 n = 1; n <= limit; ++n) {
    prefix[n] = checked_add(prefix[n - 1], static_cast<u128>(s[n]));
  }

  std::vector<AsymptoticReport> out;
  out.reserve(xs.size());
  for (u64 x : xs) {
    AsymptoticReport r;
    r.x = x;
    r.exact_sum = prefix[x];
    const double xd = static_cast<double>(x);
    r.main_term = main_term(xd, h3.H3, h3.H3prime);
    const long double diff =
        static_cast<long double>(r.exact_sum) - static_cast<long double>(r.main_term);
    r.relative_error = static_cast<double>(std::fabs(diff)) / r.main_term;
    r.error_exponent_estimate =
        diff == 0 ? -std::numeric_limits<double>::infinity()
                  : static_cast<double>(std::log(std::fabs(diff))) / std::log(xd);
    out.push_back(r);
  }
  return out;
}

}  // namespace abelian3
