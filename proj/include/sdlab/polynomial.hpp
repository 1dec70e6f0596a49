// Dense univariate polynomials with exact coefficients.
#pragma once

#include "sdlab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace sdlab {

/// Coefficient of T^k is stored at index k. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients and degree -1.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& a) { return Polynomial({a}); }
  static Polynomial monomial(const Coeff& a, std::size_t k) {
    std::vector<Coeff> c(k + 1, Coeff(0));
    c[k] = a;
    return Polynomial(std::move(c));
  }
  /// a + b T
  static Polynomial linear(const Coeff& a, const Coeff& b) { return Polynomial({a, b}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  template <typename X>
  X evaluate(const X& x) const {
    X acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Coeff(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  /// P(a + b T), expanded by Horner in the substituted variable.
  Polynomial compose_affine(const Coeff& a, const Coeff& b) const {
    Polynomial acc;
    const Polynomial x = linear(a, b);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + constant(*it);
    return acc;
  }

  /// Multiplication by T^k.
  Polynomial shift(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> c(k, Coeff(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> c(a.c_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& a) { return constant(s) * a; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

/// Euclidean division over the rationals; throws on a zero divisor.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / b.leading();
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b[i];
  }
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

/// Positive rational multiple of p with coprime integer coefficients.
inline RationalPolynomial primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& c : p.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  for (const auto& c : p.coeffs()) {
    BigInt v = boost::multiprecision::numerator(c) * (den_lcm / boost::multiprecision::denominator(c));
    num_gcd = boost::multiprecision::gcd(num_gcd, v);
  }
  Rational scale(den_lcm, num_gcd);
  if (scale < 0) scale = -scale;
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x * scale);
  return RationalPolynomial(std::move(c));
}

/// Monic greatest common divisor.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  return Rational(1) / a.leading() * a;
}

template <typename Coeff>
std::vector<std::string> coefficient_strings(const Polynomial<Coeff>& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace sdlab
