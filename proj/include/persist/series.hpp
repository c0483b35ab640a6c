#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "persist/errors.hpp"
#include "persist/polynomial.hpp"
#include "persist/rational.hpp"

namespace persist {

// Exact coefficient rings a Series may carry: Rational, or Polynomial in
// theta over the rationals.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static bool is_zero(const Rational& c) { return c == 0; }
  static bool is_one(const Rational& c) { return c == 1; }
  static Rational inverse(const Rational& c) {
    if (c == 0) throw Error(Errc::NonInvertibleConstantTerm, "constant term is zero");
    return 1 / c;
  }
  static std::string str(const Rational& c) { return to_string(c); }
};

template <>
struct RingTraits<Polynomial> {
  static bool is_zero(const Polynomial& c) { return c.is_zero(); }
  static bool is_one(const Polynomial& c) { return c == Polynomial(1); }
  static Polynomial inverse(const Polynomial& c) {
    if (!c.is_constant() || c.is_zero())
      throw Error(Errc::NonInvertibleConstantTerm, "constant term is not a nonzero constant");
    return Polynomial(1 / c.leading());
  }
  static std::string str(const Polynomial& c) { return c.to_string(); }
};

template <class R>
concept CoefficientRing = requires { RingTraits<R>::is_zero; };

/// Formal power series in z truncated after z^order. Arithmetic between
/// series of different orders yields the smaller order.
template <CoefficientRing R>
class Series {
 public:
  using Traits = RingTraits<R>;

  explicit Series(std::size_t order) : c_(order + 1, R(0)) {}
  explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(Errc::Length, "series needs at least one coefficient");
  }

  static Series constant(const R& value, std::size_t order) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }
  /// The series z (zero when order is 0).
  static Series variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const R& operator[](std::size_t k) const { return c_.at(k); }
  const std::vector<R>& coeffs() const noexcept { return c_; }

  Series truncate(std::size_t order) const {
    std::vector<R> v(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return Series(std::move(v));
  }

  friend Series operator+(const Series& l, const Series& r) {
    const std::size_t n = std::min(l.order(), r.order());
    std::vector<R> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = l.c_[k] + r.c_[k];
    return Series(std::move(v));
  }
  friend Series operator-(const Series& l, const Series& r) {
    const std::size_t n = std::min(l.order(), r.order());
    std::vector<R> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = l.c_[k] - r.c_[k];
    return Series(std::move(v));
  }
  Series operator-() const {
    std::vector<R> v = c_;
    for (auto& c : v) c = -c;
    return Series(std::move(v));
  }

  /// Cauchy product.
  friend Series operator*(const Series& l, const Series& r) {
    const std::size_t n = std::min(l.order(), r.order());
    std::vector<R> v(n + 1, R(0));
    for (std::size_t i = 0; i <= n; ++i) {
      if (Traits::is_zero(l.c_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (Traits::is_zero(r.c_[j])) continue;
        v[i + j] += l.c_[i] * r.c_[j];
      }
    }
    return Series(std::move(v));
  }

  Series scaled(const R& s) const {
    std::vector<R> v = c_;
    for (auto& c : v) c = c * s;
    return Series(std::move(v));
  }

  /// s(-z).
  Series negate_variable() const {
    std::vector<R> v = c_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return Series(std::move(v));
  }

  /// z*s(z), keeping the order.
  Series shift_up() const {
    std::vector<R> v(c_.size(), R(0));
    for (std::size_t k = 1; k < v.size(); ++k) v[k] = c_[k - 1];
    return Series(std::move(v));
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(c_[0]))>;
    std::vector<Out> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Series<Out>(std::move(v));
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<R> c_;
};

/// Multiplicative inverse by the recursive convolution
/// t_0 = 1/s_0, t_k = -t_0 * sum_{j=1..k} s_j t_{k-j}.
template <CoefficientRing R>
Series<R> reciprocal(const Series<R>& s) {
  const R inv0 = RingTraits<R>::inverse(s[0]);
  const std::size_t n = s.order();
  std::vector<R> t(n + 1, R(0));
  t[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    R acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (RingTraits<R>::is_zero(s[j])) continue;
      acc += s[j] * t[k - j];
    }
    t[k] = -(acc * inv0);
  }
  return Series<R>(std::move(t));
}

/// s(z)/z for s with zero constant term; the order drops by one.
template <CoefficientRing R>
Series<R> shift_down(const Series<R>& s) {
  if (!RingTraits<R>::is_zero(s[0]))
    throw Error(Errc::NonzeroConstantTerm, "shift_down of a series with nonzero constant term");
  if (s.order() == 0) throw Error(Errc::Length, "shift_down of an order-0 series");
  return Series<R>(std::vector<R>(s.coeffs().begin() + 1, s.coeffs().end()));
}

/// log s with zero constant term, via (log s)' = s'/s integrated termwise.
template <CoefficientRing R>
Series<R> log_series(const Series<R>& s) {
  if (!RingTraits<R>::is_one(s[0]))
    throw Error(Errc::ConstantTermNotOne, "log_series needs constant term 1");
  const std::size_t n = s.order();
  if (n == 0) return Series<R>(0);
  std::vector<R> deriv(n);
  for (std::size_t k = 1; k <= n; ++k) deriv[k - 1] = s[k] * R(Rational(static_cast<unsigned long>(k)));
  const Series<R> q = Series<R>(std::move(deriv)) * reciprocal(s.truncate(n - 1));
  std::vector<R> out(n + 1, R(0));
  for (std::size_t k = 1; k <= n; ++k) out[k] = q[k - 1] * R(Rational(1, static_cast<unsigned long>(k)));
  return Series<R>(std::move(out));
}

/// Truncation of E(theta, scale*z): coefficient k is
/// theta^{k(k-1)/2} scale^k / k!.
template <CoefficientRing R>
Series<R> deformed_exp_series(const R& theta, const R& scale, std::size_t order) {
  std::vector<R> v(order + 1, R(0));
  v[0] = R(1);
  R theta_pow(1);  // theta^{k-1}
  for (std::size_t k = 1; k <= order; ++k) {
    if (k >= 2) theta_pow = theta_pow * theta;
    v[k] = v[k - 1] * theta_pow * scale * R(Rational(1, static_cast<unsigned long>(k)));
  }
  return Series<R>(std::move(v));
}

/// Substitutes a rational theta into every polynomial coefficient.
inline Series<Rational> evaluate_at(const Series<Polynomial>& s, const Rational& theta) {
  return s.map([&](const Polynomial& p) { return p(theta); });
}

}  // namespace persist
