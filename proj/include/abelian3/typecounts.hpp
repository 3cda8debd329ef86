#pragma once

// Exact polynomial-in-p forms of the subgroup counts of p-groups.

#include <vector>

#include "abelian3/polynomial.hpp"

namespace abelian3 {

// A partition λ1 >= λ2 >= ... >= 1. Empty is allowed (the trivial group).
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument if parts are not weakly decreasing or
  // contain a zero.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;  // |λ|
  std::size_t length() const { return parts_.size(); }
  unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }

  // Transpose of the Ferrers diagram.
  Partition conjugate() const;
  // True when μ ⊆ λ componentwise.
  bool contains(const Partition& mu) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

// All μ ⊆ λ, in lexicographic order of their parts.
std::vector<Partition> sub_partitions(const Partition& lambda);

// P(p^k) = (k+1) p^k - k p^(k-1); P(p^0) = 1.
IntPolynomial gcd_sum_polynomial(unsigned k);

// s(p^nu1, p^nu2, p^nu3) as a polynomial in p.
IntPolynomial symbolic_count(unsigned nu1, unsigned nu2, unsigned nu3);
// Number of subgroups of order p^k of the same group.
IntPolynomial symbolic_count_by_order(unsigned nu1, unsigned nu2, unsigned nu3,
                                      unsigned k);

// sum_{j=0}^{2nu} (nu - floor((j-1)/2)) (2j - floor((j-1)/2)) p^(2nu-j)
IntPolynomial general_form(unsigned nu);

// [r k]_p; the zero polynomial when k > r.
IntPolynomial gaussian_binomial(unsigned r, unsigned k);

// Number of subgroups of type μ in a p-group of type λ. Throws
// std::invalid_argument unless μ ⊆ λ.
IntPolynomial type_count(const Partition& lambda, const Partition& mu);

// h(p^nu) = (3nu - 1) p + 3nu + 1.
IntPolynomial h_closed_form(unsigned nu);
// h(p^nu) = s(p^nu) - 2 p^2 s(p^(nu-1)) + p^4 s(p^(nu-2)), s(p^-1) = 0.
IntPolynomial h_recurrence(unsigned nu);

}  // namespace abelian3
