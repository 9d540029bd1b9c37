#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tcore/bigint.hpp"

namespace tcore {

/// Dense univariate polynomial; coefficient i multiplies x^i.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }
  Polynomial(std::initializer_list<Coeff> coefficients)
      : coeffs_(coefficients) {
    trim();
  }

  static Polynomial monomial(std::size_t exponent, Coeff c = Coeff(1)) {
    std::vector<Coeff> v(exponent + 1, Coeff(0));
    v[exponent] = std::move(c);
    return Polynomial(std::move(v));
  }

  std::span<const Coeff> coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }

  // [x^n] p; zero past the degree.
  Coeff coefficient(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Coeff(0);
  }

  // Lowest exponent with a nonzero coefficient, -1 for the zero polynomial.
  std::ptrdiff_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<std::ptrdiff_t>(i);
    return -1;
  }

  Coeff evaluate(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  Coeff value_at_one() const {
    Coeff acc(0);
    for (const auto& c : coeffs_) acc += c;
    return acc;
  }

  // p'(1) = sum_i i * c_i
  Coeff derivative_at_one() const {
    Coeff acc(0);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      acc += Coeff(static_cast<long>(i)) * coeffs_[i];
    return acc;
  }

  // p(x) -> p(x^step)
  Polynomial substitute_power(std::size_t step) const {
    if (step == 0) throw std::invalid_argument("substitute_power: step must be positive");
    if (is_zero()) return {};
    std::vector<Coeff> v(static_cast<std::size_t>(degree()) * step + 1, Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
    return Polynomial(std::move(v));
  }

  // x^k p(x)
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> v(k, Coeff(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.begin() + coeffs_.size() / 2,
                      coeffs_.rbegin());
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using CountPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

/// 1 + x + ... + x^n
CountPolynomial geometric_polynomial(std::size_t n);

/// Product of the given polynomials with every coefficient above x^max_degree dropped.
CountPolynomial truncated_product(std::span<const CountPolynomial> factors,
                                  std::size_t max_degree);

}  // namespace tcore
