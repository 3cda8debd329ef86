#include "abelian3/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace abelian3 {

namespace {

i64 add64(i64 x, i64 y) {
  i64 out;
  if (__builtin_add_overflow(x, y, &out)) {
    throw std::overflow_error("polynomial coefficient overflow");
  }
  return out;
}

i64 mul64(i64 x, i64 y) {
  i64 out;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw std::overflow_error("polynomial coefficient overflow");
  }
  return out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<i64> coefficients)
    : coeffs_(coefficients) {
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<i64> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(i64 value) { return IntPolynomial{value}; }

IntPolynomial IntPolynomial::monomial(i64 coefficient, unsigned degree) {
  std::vector<i64> c(degree + 1, 0);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = add64(coeffs_[i], other.coeffs_[i]);
  }
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  return *this += -other;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<i64> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = add64(out[i + j], mul64(coeffs_[i], other.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(i64 scalar) {
  for (auto& c : coeffs_) c = mul64(c, scalar);
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = mul64(c, -1);
  return out;
}

IntPolynomial IntPolynomial::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<i64> c(k, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw std::domain_error("polynomial division is not exact");
  }
  std::vector<i64> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const i64 lead = divisor.coeffs_.back();
  std::vector<i64> quot(rem.size() - dd, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const i64 top = rem[k + dd];
    if (top % lead != 0) throw std::domain_error("polynomial division is not exact");
    const i64 q = top / lead;
    quot[k] = q;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[k + j] = add64(rem[k + j], mul64(-q, divisor.coeffs_[j]));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](i64 c) { return c != 0; })) {
    throw std::domain_error("polynomial division is not exact");
  }
  return IntPolynomial(std::move(quot));
}

i128 IntPolynomial::evaluate(i128 p) const {
  i128 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, p), static_cast<i128>(*it));
  }
  return acc;
}

std::string to_string(const IntPolynomial& poly) {
  const auto& c = poly.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool first = out.empty();
    i64 magnitude = c[i];
    if (c[i] < 0) {
      out += '-';
      magnitude = -c[i];
    } else if (!first) {
      out += '+';
    }
    if (i == 0) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += std::to_string(magnitude) + " ";
    out += 'p';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*' &&
        ch != '{' && ch != '}') {
      s += ch;
    }
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  IntPolynomial result;
  std::size_t pos = 0;
  auto read_digits = [&](std::size_t& at) -> std::optional<i64> {
    std::size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    if (at == start) return std::nullopt;
    return std::stoll(s.substr(start, at - start));
  };
  while (pos < s.size()) {
    i64 sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("malformed polynomial: " + text);
    }
    auto coefficient = read_digits(pos);
    unsigned power = 0;
    if (pos < s.size() && s[pos] == 'p') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        auto e = read_digits(pos);
        if (!e) throw std::invalid_argument("malformed exponent: " + text);
        power = static_cast<unsigned>(*e);
      }
    } else if (!coefficient) {
      throw std::invalid_argument("malformed polynomial: " + text);
    }
    result += IntPolynomial::monomial(sign * coefficient.value_or(1), power);
  }
  return result;
}

}  // namespace abelian3
