#include "persist/dualities.hpp"

#include <string>

#include "persist/errors.hpp"

namespace persist {

Params dual_pos(const Params& params) {
  if (!(params.a > 0 && params.theta > 0))
    throw Error(Errc::Domain, "dual_pos needs a > 0 and theta > 0");
  return Params{Rational(1 / params.a), Rational(1 / params.theta)};
}

Params dual_neg(const Params& params) {
  if (!(params.a > 0 && params.theta < 0))
    throw Error(Errc::Domain, "dual_neg needs a > 0 and theta < 0");
  return Params{params.a, Rational(1 / params.theta)};
}

Series<Rational> moebius_flip(const Series<Rational>& q) {
  if (q[0] != 1) throw Error(Errc::NonInvertibleConstantTerm, "moebius_flip needs constant term 1");
  const Series<Rational> r = q.negate_variable();
  return r * reciprocal(Series<Rational>::constant(Rational(1), q.order()) - r.shift_up());
}

Rational hidden_duality_residual(const PersistenceTable& p_theta, const PersistenceTable& p_inv,
                                 std::size_t n) {
  if (p_theta.entries.size() <= n || p_inv.entries.size() <= n)
    throw Error(Errc::Length, "tables shorter than n = " + std::to_string(n));
  Rational rhs(0);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational term = p_theta.at(n - k) * p_inv.at(k - 1);
    rhs += (k % 2 == 1) ? term : Rational(-term);
  }
  rhs += (n % 2 == 0) ? p_inv.at(n) : Rational(-p_inv.at(n));
  return p_theta.at(n) - rhs;
}

}  // namespace persist
