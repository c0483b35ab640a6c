#include "persist/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "persist/errors.hpp"

namespace persist {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

std::size_t Polynomial::monomial_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Rational& q) { return q != 0; }));
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
  if (s == 0) throw Error(Errc::Domain, "polynomial divided by zero");
  for (auto& q : c_) q /= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::rescale(const Rational& s) const {
  Polynomial r = *this;
  Rational p(1);
  for (auto& q : r.c_) {
    q *= p;
    p *= s;
  }
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::Domain, "polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial{}, *this};
  std::vector<Rational> rem = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  std::vector<Rational> quot(c_.size() - dd);
  const Rational& lead = divisor.c_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational f = rem[k + dd] / lead;
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= f * divisor.c_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw Error(Errc::InexactDivision, "polynomial division leaves a remainder");
  return q;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0) os << '-';
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << persist::to_string(mag);
      continue;
    }
    if (mag != 1) os << persist::to_string(mag) << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

Polynomial pow(const Polynomial& base, unsigned exp) {
  Polynomial result(1);
  Polynomial b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

}  // namespace persist
