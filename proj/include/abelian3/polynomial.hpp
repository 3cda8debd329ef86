#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "abelian3/arith.hpp"

namespace abelian3 {

// Dense polynomial in p with 64-bit integer coefficients. coefficients()[i]
// is the coefficient of p^i; trailing zeros are never stored, so the zero
// polynomial has no coefficients. Coefficient arithmetic is overflow-checked.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<i64> coefficients);
  explicit IntPolynomial(std::vector<i64> coefficients);

  static IntPolynomial constant(i64 value);
  static IntPolynomial monomial(i64 coefficient, unsigned degree);

  const std::vector<i64>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  i64 coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : 0;
  }
  i64 leading_coefficient() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(i64 scalar);

  friend IntPolynomial operator+(IntPolynomial x, const IntPolynomial& y) { return x += y; }
  friend IntPolynomial operator-(IntPolynomial x, const IntPolynomial& y) { return x -= y; }
  friend IntPolynomial operator*(IntPolynomial x, const IntPolynomial& y) { return x *= y; }
  friend IntPolynomial operator*(IntPolynomial x, i64 k) { return x *= k; }
  friend IntPolynomial operator*(i64 k, IntPolynomial x) { return x *= k; }
  IntPolynomial operator-() const;

  // Multiplication by p^k.
  IntPolynomial shifted(unsigned k) const;

  // Exact quotient; throws std::domain_error if `divisor` is zero or does not
  // divide this polynomial over the integers.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  // Horner evaluation in 128 bits; throws std::overflow_error.
  i128 evaluate(i128 p) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<i64> coeffs_;
};

// Ascending-power text form: "4+2 p+2 p^2", "1-p", "0".
std::string to_string(const IntPolynomial& poly);

// Inverse of to_string. Also accepts "p^{10}", "*" between coefficient and
// p, and arbitrary whitespace. Throws std::invalid_argument.
IntPolynomial parse_polynomial(const std::string& text);

}  // namespace abelian3
