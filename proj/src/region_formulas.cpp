#include "persist/region_formulas.hpp"

#include <string>

#include "persist/errors.hpp"

namespace persist {

namespace {

using RSeries = Series<Rational>;

[[noreturn]] void outside(std::string_view what, const Params& p) {
  throw Error(Errc::Domain, std::string(what) + " does not apply at a=" + to_string(p.a) +
                                ", theta=" + to_string(p.theta));
}

void require(Region r, const Params& p) {
  if (!classify(p).has(r)) outside(region_name(r), p);
}

RSeries E(const Rational& theta, const Rational& scale, std::size_t order) {
  return deformed_exp_series(theta, scale, order);
}

Rational positive_part(const Rational& x) { return x > 0 ? x : Rational(0); }

unsigned long tri(std::size_t k) { return static_cast<unsigned long>(k * (k + 1) / 2); }

}  // namespace

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::BlueGf: return "blue_gf";
    case Method::GreenGf: return "green_gf";
    case Method::YellowGf: return "yellow_gf";
    case Method::OrangeGf: return "orange_gf";
    case Method::GreyClosed: return "grey_closed";
    case Method::Recurrence: return "recurrence";
    case Method::Combinatorial: return "combinatorial";
    case Method::Duality: return "duality";
    case Method::Trivial: return "trivial";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

PersistenceTable PersistenceTable::from_values(const Params& params,
                                               const std::vector<Rational>& values, Method method) {
  PersistenceTable t{params, {}, method};
  t.entries.reserve(values.size());
  for (std::size_t n = 0; n < values.size(); ++n)
    t.entries.push_back({n, values[n], to_double(values[n])});
  return t;
}

std::vector<Rational> PersistenceTable::values() const {
  std::vector<Rational> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(e.value);
  return v;
}

std::optional<std::string> table_invariant_violation(const PersistenceTable& table) {
  const auto& e = table.entries;
  if (e.empty()) return "empty table";
  if (e[0].value != 1) return "p_0 = " + to_string(e[0].value);
  for (std::size_t n = 0; n < e.size(); ++n) {
    if (e[n].value < 0 || e[n].value > 1)
      return "p_" + std::to_string(n) + " = " + to_string(e[n].value) + " outside [0,1]";
    if (n > 0 && e[n].value > e[n - 1].value)
      return "p_" + std::to_string(n) + " exceeds p_" + std::to_string(n - 1);
  }
  return std::nullopt;
}

DerivedScalars derived_scalars(const Params& params) {
  const Rational& a = params.a;
  const Rational& t = params.theta;
  DerivedScalars d{Rational(-a), std::nullopt, std::nullopt, std::nullopt};
  if (t != 0) d.mu = Rational((1 + a / t) / (1 + a));
  if (t < 0) d.nu = Rational((1 - 1 / t) / (1 + a));
  if (t > 0 && t <= 1 && d.b > 0) {
    Cutoff c;
    if (t < 1) {
      // smallest p with theta^{p+1} < b; b <= theta^p then holds by minimality
      // as long as b <= theta^0 = 1.
      std::size_t p = 0;
      Rational next = t;  // theta^{p+1}
      while (!(next < d.b)) {
        ++p;
        next *= t;
      }
      c.index = p;
    }
    d.p_cutoff = c;
  }
  return d;
}

RSeries blue_gf(const Params& params, std::size_t order) {
  require(Region::Blue, params);
  const Rational& t = params.theta;
  const Rational inv = 1 / (1 + params.a);
  const RSeries numerator = E(t, params.a * inv, order + 1) - E(t, Rational(-inv), order + 1);
  return shift_down(numerator) * reciprocal(E(t, Rational(-inv), order));
}

RSeries green_gf(const Params& params, std::size_t order) {
  const Rational& t = params.theta;
  const Rational& a = params.a;
  if (t == 0) throw Error(Errc::DivisionByZeroTheta, "green_gf needs theta != 0");
  require(Region::Green, params);
  const Rational inv = 1 / (1 + a);
  const RSeries numerator = E(t, Rational(-inv / t), order + 1) - E(t, Rational(-inv), order + 1);
  const RSeries tail = shift_down(numerator) * reciprocal(E(t, Rational(-inv), order));
  const Rational c = (t * a + 1) / (t * (1 + a));
  return RSeries::constant(c, order) + tail;
}

RSeries yellow_gf(const Params& params, std::size_t order) {
  require(Region::Yellow, params);
  const Rational& t = params.theta;
  const Rational& a = params.a;
  const Rational mu = *derived_scalars(params).mu;
  const Rational inv = 1 / (1 + a);
  const std::size_t m = order + 1;
  const RSeries bracket = E(t, Rational(a * inv / t), m) * reciprocal(E(t, Rational(a * inv), m)) -
                          RSeries::variable(m).scaled(mu);
  return shift_down(reciprocal(bracket) - RSeries::constant(Rational(1), m));
}

RSeries orange_F(const Params& params, std::size_t order) {
  const Rational& t = params.theta;
  const Rational b = -params.a;
  if (!(t > 0 && t <= 1 && b >= 0 && b <= t)) outside("orange F", params);
  std::vector<Rational> v(order + 1);
  Rational theta_i(1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) theta_i *= t;
    const Rational base = positive_part(theta_i - b);
    if (base == 0) continue;
    const auto e = static_cast<std::int64_t>(i + 1);
    Rational term = pow(base, e) / (Rational(factorial(static_cast<unsigned>(i + 1))) *
                                    pow(t, static_cast<std::int64_t>(tri(i))) * pow(Rational(1 - b), e));
    v[i] = (i % 2 == 0) ? term : Rational(-term);
  }
  return RSeries(std::move(v));
}

RSeries orange_gf(const Params& params, std::size_t order) {
  require(Region::Orange, params);
  const RSeries F = orange_F(params, order);
  return F * reciprocal(RSeries::constant(Rational(1), order) - F.shift_up());
}

Rational grey_pn(const Params& params, std::size_t n) {
  require(Region::GreyPiecewise, params);
  const Rational& t = params.theta;
  const Rational b = -params.a;
  const auto e = static_cast<std::int64_t>(n + 1);
  const Rational base = positive_part(pow(t, -static_cast<std::int64_t>(n)) - b);
  if (base == 0) return Rational(0);
  return pow(t, static_cast<std::int64_t>(tri(n))) * pow(base, e) /
         (Rational(factorial(static_cast<unsigned>(n + 1))) * pow(Rational(1 - b), e));
}

std::vector<Rational> blue_recurrence_table(const Params& params, std::size_t n) {
  require(Region::Blue, params);
  const Rational& t = params.theta;
  const Rational& a = params.a;
  const Rational inv = 1 / (1 + a);
  // w_k = (-1)^{k-1} theta^{k(k-1)/2} (1+a)^{-k} / k!
  std::vector<Rational> w(n + 2);
  w[0] = 0;
  Rational theta_pow(1), mag(1);
  for (std::size_t k = 1; k <= n + 1; ++k) {
    if (k >= 2) theta_pow *= t;
    mag *= theta_pow * inv / static_cast<unsigned long>(k);
    w[k] = (k % 2 == 1) ? mag : Rational(-mag);
  }
  std::vector<Rational> p(n + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (std::size_t k = 1; k <= m; ++k) acc += w[k] * p[m - k];
    // (1+a)^{-(m+1)} (-1)^m theta^{m(m+1)/2} (1 - (-a)^{m+1}) / (m+1)!  =  w_{m+1} (1 - (-a)^{m+1})
    acc += w[m + 1] * (1 - pow(Rational(-a), static_cast<std::int64_t>(m + 1)));
    p[m] = acc;
  }
  return p;
}

Rational blue_recurrence_pn(const Params& params, std::size_t n) {
  return blue_recurrence_table(params, n).back();
}

RSeries region_series(Region region, const Params& params, std::size_t order) {
  switch (region) {
    case Region::WhiteOne: {
      require(region, params);
      return RSeries(std::vector<Rational>(order + 1, Rational(1)));
    }
    case Region::ZeroTail: {
      require(region, params);
      return RSeries::constant(Rational(1), order);
    }
    case Region::ThetaOne: {
      require(region, params);
      std::vector<Rational> v(order + 1);
      for (std::size_t n = 0; n <= order; ++n) v[n] = ratio(1, factorial(static_cast<unsigned>(n + 1)));
      return RSeries(std::move(v));
    }
    case Region::Blue: return blue_gf(params, order);
    case Region::Green: return green_gf(params, order);
    case Region::Yellow: return yellow_gf(params, order);
    case Region::Orange: return orange_gf(params, order);
    case Region::GreyPiecewise: {
      std::vector<Rational> v(order + 1);
      for (std::size_t n = 0; n <= order; ++n) v[n] = grey_pn(params, n);
      return RSeries(std::move(v));
    }
    case Region::DualPositive:
    case Region::DualNegative:
    case Region::DualFlip: break;
  }
  throw Error(Errc::Domain, "region_series takes a non-duality region");
}

PersistenceTable persistence_series(const Params& params, std::size_t order) {
  const RegionAssignment ra = classify(params);
  if (trivial_value(params, 0)) {
    std::vector<Rational> v(order + 1);
    for (std::size_t n = 0; n <= order; ++n) v[n] = *trivial_value(params, n);
    return PersistenceTable::from_values(params, v, Method::Trivial);
  }
  auto from = [&](const RSeries& s, Method m) {
    return PersistenceTable::from_values(params, s.coeffs(), m);
  };
  switch (ra.canonical) {
    case Region::Blue: return from(blue_gf(params, order), Method::BlueGf);
    case Region::Green: return from(green_gf(params, order), Method::GreenGf);
    case Region::Yellow: return from(yellow_gf(params, order), Method::YellowGf);
    case Region::Orange: return from(orange_gf(params, order), Method::OrangeGf);
    case Region::GreyPiecewise:
      return from(region_series(Region::GreyPiecewise, params, order), Method::GreyClosed);
    case Region::DualPositive:
    case Region::DualNegative: {
      PersistenceTable inner = persistence_series(*ra.dual_target, order);
      inner.params = params;
      inner.method = Method::Duality;
      return inner;
    }
    default: break;
  }
  throw Error(Errc::Unreachable, "no formula for canonical region " +
                                     std::string(region_name(ra.canonical)));
}

}  // namespace persist
