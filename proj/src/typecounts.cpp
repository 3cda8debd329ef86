#include "abelian3/typecounts.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace abelian3 {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

unsigned Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
  std::vector<unsigned> out(largest(), 0);
  for (unsigned part : parts_) {
    for (unsigned j = 0; j < part; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::vector<Partition> sub_partitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(std::size_t, unsigned)> extend = [&](std::size_t i,
                                                          unsigned cap) {
    out.emplace_back(current);
    if (i >= lambda.length()) return;
    const unsigned limit = std::min(cap, lambda.parts()[i]);
    for (unsigned part = 1; part <= limit; ++part) {
      current.push_back(part);
      extend(i + 1, part);
      current.pop_back();
    }
  };
  extend(0, lambda.largest());
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial gcd_sum_polynomial(unsigned k) {
  if (k == 0) return IntPolynomial::constant(1);
  return IntPolynomial::monomial(k + 1, k) - IntPolynomial::monomial(k, k - 1);
}

namespace {

// (ABC / X^2) P(X) summand for a = p^x, b = p^y, c = p^z in (p^nu1, p^nu2, p^nu3).
IntPolynomial symbolic_term(unsigned x, unsigned y, unsigned z, unsigned nu2,
                            unsigned nu3) {
  const unsigned eA = std::min(x, nu2 - y);
  const unsigned eB = std::min(y, nu3 - z);
  const unsigned eC = std::min(x, nu3 - z);
  const unsigned sum = eA + eB + eC;
  const unsigned eX = sum - std::min(x + (nu3 - z), sum);
  if (eX > eA || eX > eB) throw std::logic_error("X does not divide A and B");
  return gcd_sum_polynomial(eX).shifted(sum - 2 * eX);
}

}  // namespace

IntPolynomial symbolic_count(unsigned nu1, unsigned nu2, unsigned nu3) {
  IntPolynomial total;
  for (unsigned x = 0; x <= nu1; ++x)
    for (unsigned y = 0; y <= nu2; ++y)
      for (unsigned z = 0; z <= nu3; ++z) total += symbolic_term(x, y, z, nu2, nu3);
  return total;
}

IntPolynomial symbolic_count_by_order(unsigned nu1, unsigned nu2, unsigned nu3,
                                      unsigned k) {
  const unsigned total_exp = nu1 + nu2 + nu3;
  if (k > total_exp) return {};
  const unsigned abc = total_exp - k;
  IntPolynomial total;
  for (unsigned x = 0; x <= nu1; ++x) {
    for (unsigned y = 0; y <= nu2; ++y) {
      if (x + y > abc || abc - x - y > nu3) continue;
      total += symbolic_term(x, y, abc - x - y, nu2, nu3);
    }
  }
  return total;
}

IntPolynomial general_form(unsigned nu) {
  IntPolynomial total;
  const i64 n = nu;
  for (i64 j = 0; j <= 2 * n; ++j) {
    const i64 fl = j == 0 ? -1 : (j - 1) / 2;
    total += IntPolynomial::monomial((n - fl) * (2 * j - fl),
                                     static_cast<unsigned>(2 * n - j));
  }
  return total;
}

IntPolynomial gaussian_binomial(unsigned r, unsigned k) {
  if (k > r) return {};
  const IntPolynomial one = IntPolynomial::constant(1);
  IntPolynomial result = one;
  for (unsigned i = 1; i <= k; ++i) {
    result *= IntPolynomial::monomial(1, r - k + i) - one;
    result = result.divide_exact(IntPolynomial::monomial(1, i) - one);
  }
  return result;
}

IntPolynomial type_count(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) {
    throw std::invalid_argument("mu is not contained in lambda");
  }
  const unsigned width = lambda.largest();
  const std::vector<unsigned> lc = lambda.conjugate().parts();
  std::vector<unsigned> mc = mu.conjugate().parts();
  mc.resize(width + 1, 0);

  IntPolynomial result = IntPolynomial::constant(1);
  for (unsigned j = 0; j < width; ++j) {
    const unsigned power = mc[j + 1] * (lc[j] - mc[j]);
    result *= gaussian_binomial(lc[j] - mc[j + 1], mc[j] - mc[j + 1]).shifted(power);
  }
  return result;
}

IntPolynomial h_closed_form(unsigned nu) {
  const i64 n = nu;
  return IntPolynomial{3 * n + 1, 3 * n - 1};
}

IntPolynomial h_recurrence(unsigned nu) {
  IntPolynomial h = symbolic_count(nu, nu, nu);
  if (nu >= 1) {
    const IntPolynomial prev =
        nu == 1 ? IntPolynomial::constant(1) : symbolic_count(nu - 1, nu - 1, nu - 1);
    h -= (prev * 2).shifted(2);
  }
  if (nu >= 2) {
    const IntPolynomial prev2 =
        nu == 2 ? IntPolynomial::constant(1) : symbolic_count(nu - 2, nu - 2, nu - 2);
    h += prev2.shifted(4);
  }
  return h;
}

}  // namespace abelian3
