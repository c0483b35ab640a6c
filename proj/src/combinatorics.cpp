#include "persist/combinatorics.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "persist/errors.hpp"
#include "persist/series.hpp"

namespace persist {

namespace {

void enumerate_from(std::size_t i, std::size_t remaining, Profile& cur, std::vector<Profile>& out) {
  const std::size_t ell = cur.ell;
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (i > ell) return;
  // Parts >= i+1 can absorb any remainder >= i+1 in one piece.
  for (std::size_t count = remaining / i + 1; count-- > 0;) {
    const std::size_t rest = remaining - count * i;
    if (rest != 0 && rest < i + 1) continue;
    cur.r[i - 1] = static_cast<unsigned>(count);
    enumerate_from(i + 1, rest, cur, out);
    cur.r[i - 1] = 0;
  }
}

void partitions(std::size_t remaining, std::size_t max_part, std::size_t squares,
                std::set<std::size_t>& seen) {
  if (remaining == 0) {
    seen.insert(squares);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part)
    partitions(remaining - part, part, squares + part * part, seen);
}

Rational theta_power(const Rational& theta, std::int64_t e) { return pow(theta, e); }

// k(k-1)/2
std::int64_t pairs(std::size_t k) { return k == 0 ? 0 : static_cast<std::int64_t>(k * (k - 1) / 2); }

}  // namespace

unsigned Profile::parts() const { return std::accumulate(r.begin(), r.end(), 0u); }

std::vector<Profile> enumerate_profiles(std::size_t ell) {
  if (ell == 0) throw Error(Errc::Domain, "profiles need ell >= 1");
  std::vector<Profile> out;
  Profile cur{ell, std::vector<unsigned>(ell, 0)};
  enumerate_from(1, ell, cur, out);
  return out;
}

Integer profile_count(std::size_t k, const Profile& p) {
  const unsigned used = p.parts();
  if (k < used) return 0;
  Integer den = factorial(static_cast<unsigned>(k - used));
  for (unsigned rj : p.r) den *= factorial(rj);
  return factorial(static_cast<unsigned>(k)) / den;
}

Polynomial phi(std::size_t ell) {
  static std::mutex mutex;
  static std::map<std::size_t, Polynomial> cache;
  if (ell == 0) return Polynomial(1);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(ell); it != cache.end()) return it->second;
  }
  // Each profile contributes multinomial(sum r; r) * prod (-theta^{i(i-1)/2}/i!)^{r_i},
  // a single monomial of degree sum r_i * i(i-1)/2.
  std::vector<Rational> coeffs(ell * (ell - 1) / 2 + 1);
  for (const Profile& p : enumerate_profiles(ell)) {
    const unsigned parts = p.parts();
    Integer num = factorial(parts);
    Integer den = 1;
    std::size_t degree = 0;
    for (std::size_t i = 1; i <= ell; ++i) {
      const unsigned ri = p.r[i - 1];
      if (ri == 0) continue;
      den *= factorial(ri);
      Integer fi = factorial(static_cast<unsigned>(i));
      Integer fpow;
      mpz_pow_ui(fpow.get_mpz_t(), fi.get_mpz_t(), ri);
      den *= fpow;
      degree += ri * (i * (i - 1) / 2);
    }
    Rational term = ratio(num, den);
    coeffs[degree] += (parts % 2 == 0) ? term : Rational(-term);
  }
  Polynomial result(std::move(coeffs));
  std::lock_guard lock(mutex);
  return cache.emplace(ell, std::move(result)).first->second;
}

std::size_t monomial_count(std::size_t ell) { return phi(ell).monomial_count(); }

std::size_t distinct_square_sums(std::size_t ell) {
  std::set<std::size_t> seen;
  partitions(ell, ell, 0, seen);
  return seen.size();
}

Polynomial mallows_J(std::size_t n) {
  if (n == 0) throw Error(Errc::Domain, "Mallows-Riordan polynomials start at n = 1");
  static std::mutex mutex;
  static std::map<std::size_t, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const auto E = deformed_exp_series(Polynomial::x(), Polynomial(1), n);
  const auto L = log_series(E);
  const Polynomial scaled = L[n] * Rational(factorial(static_cast<unsigned>(n)));
  const Polynomial divisor = pow(Polynomial::x() - Polynomial(1), static_cast<unsigned>(n - 1));
  Polynomial J = scaled.divide_exact(divisor);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(J)).first->second;
}

Rational comb_pn_blue(const Params& params, std::size_t n) {
  if (!classify(params).has(Region::Blue))
    throw Error(Errc::Domain, "comb_pn_blue outside the blue region");
  const Rational& t = params.theta;
  const Rational minus_a = -params.a;
  Rational sum(0);
  for (std::size_t k = 0; k <= n + 1; ++k) {
    sum += phi(n + 1 - k)(t) * theta_power(t, pairs(k)) /
           Rational(factorial(static_cast<unsigned>(k))) * pow(minus_a, static_cast<std::int64_t>(k));
  }
  return pow(Rational(-1 / (1 + params.a)), static_cast<std::int64_t>(n + 1)) * sum;
}

Rational comb_pn_dual(const Params& params, std::size_t n) {
  const Rational& t = params.theta;
  const Rational& a = params.a;
  const auto e = static_cast<std::int64_t>(n + 1);
  if (t >= 1 && a >= 0) {
    const Rational bar = 1 / t;
    Rational sum(0);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      sum += phi(n + 1 - k)(bar) * pow(Rational(-a), static_cast<std::int64_t>(n + 1 - k)) *
             theta_power(bar, pairs(k)) /
             Rational(factorial(static_cast<unsigned>(k)));
    }
    return sum / pow(Rational(1 + a), e);
  }
  if (t < -1 && a >= Rational(-1 / t) && a <= -t) {
    const Rational bar = 1 / t;
    Rational sum(0);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      sum += phi(n + 1 - k)(bar) * theta_power(bar, pairs(k)) /
             Rational(factorial(static_cast<unsigned>(k))) * pow(Rational(-a), static_cast<std::int64_t>(k));
    }
    return pow(Rational(-1 / (1 + a)), e) * sum;
  }
  throw Error(Errc::Domain, "comb_pn_dual needs theta >= 1, a >= 0 or theta < -1, -1/theta <= a <= -theta");
}

Rational comb_pn_green(const Params& params, std::size_t n) {
  const Rational& t = params.theta;
  if (t == 0) throw Error(Errc::Domain, "comb_pn_green needs theta != 0");
  if (!classify(params).has(Region::Green))
    throw Error(Errc::Domain, "comb_pn_green outside the green region");
  if (n == 0) return Rational(1);
  Rational sum(0);
  for (std::size_t k = 0; k <= n + 1; ++k) {
    // k(k-3)/2 is -1 for k = 1, 2.
    const auto kk = static_cast<std::int64_t>(k);
    sum += theta_power(t, kk * (kk - 3) / 2) / Rational(factorial(static_cast<unsigned>(k))) *
           phi(n + 1 - k)(t);
  }
  const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
  return sign * sum / pow(Rational(1 + params.a), static_cast<std::int64_t>(n + 1));
}

}  // namespace persist
