#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "persist/rational.hpp"

namespace persist {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[k] multiplies x^k; the zero polynomial has no coefficients and
/// otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial x.
  static Polynomial x();
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^k, zero past the degree.
  Rational coeff(std::size_t k) const;
  Rational leading() const;
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::size_t monomial_count() const;

  Rational operator()(const Rational& at) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial& operator/=(const Rational& s);

  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator*(Polynomial l, const Polynomial& r) { return l *= r; }
  friend Polynomial operator*(Polynomial l, const Rational& s) { return l *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial r) { return r *= s; }
  friend Polynomial operator/(Polynomial l, const Rational& s) { return l /= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial derivative() const;
  /// p(s*x).
  Polynomial rescale(const Rational& s) const;

  /// Euclidean division; returns {quotient, remainder}. Divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Quotient when the division leaves no remainder; throws Error(InexactDivision).
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Ascending-degree string such as "-1 + theta - 1/6*theta^3".
  std::string to_string(std::string_view var = "theta") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& base, unsigned exp);
/// Monic greatest common divisor.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace persist
