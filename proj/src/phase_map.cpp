#include "persist/phase_map.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "persist/errors.hpp"

namespace persist {

Params Params::make(Rational a, Rational theta) {
  a.canonicalize();
  theta.canonicalize();
  if (a <= -1)
    throw Error(Errc::Domain, "a must exceed -1 (got " + to_string(a) + ")");
  return Params{std::move(a), std::move(theta)};
}

namespace {

constexpr std::array<std::pair<Region, std::string_view>, 11> kNames{{
    {Region::WhiteOne, "WhiteOne"},
    {Region::ZeroTail, "ZeroTail"},
    {Region::ThetaOne, "ThetaOne"},
    {Region::Blue, "Blue"},
    {Region::Green, "Green"},
    {Region::Yellow, "Yellow"},
    {Region::Orange, "Orange"},
    {Region::GreyPiecewise, "GreyPiecewise"},
    {Region::DualPositive, "DualPositive"},
    {Region::DualNegative, "DualNegative"},
    {Region::DualFlip, "DualFlip"},
}};

void check(const Params& p) {
  if (p.a <= -1) throw Error(Errc::Domain, "a must exceed -1 (got " + to_string(p.a) + ")");
}

}  // namespace

std::string_view region_name(Region r) noexcept {
  for (const auto& [tag, name] : kNames)
    if (tag == r) return name;
  return "?";
}

std::optional<Region> region_from_name(std::string_view name) noexcept {
  for (const auto& [tag, n] : kNames)
    if (n == name) return tag;
  return std::nullopt;
}

bool is_duality(Region r) noexcept {
  return r == Region::DualPositive || r == Region::DualNegative || r == Region::DualFlip;
}

bool RegionAssignment::has(Region r) const noexcept {
  return std::find(applicable.begin(), applicable.end(), r) != applicable.end();
}

RegionAssignment classify(const Params& params) {
  check(params);
  const Rational& a = params.a;
  const Rational& t = params.theta;
  // -1/theta on theta in [-1, 0); +infinity at theta = 0 is never needed
  // because both sides of every test below then reduce to the theta >= 0 branch.
  auto neg_inv_theta = [&] { return Rational(-1 / t); };

  std::vector<Region> out;
  if (a <= 0 && t <= -a) out.push_back(Region::WhiteOne);
  if (a < 0 && t >= Rational(-1 / a)) out.push_back(Region::ZeroTail);
  if (t == 1) out.push_back(Region::ThetaOne);
  if ((t >= 0 && t <= 1 && a >= 0) || (t >= -1 && t < 0 && a >= -t && a <= neg_inv_theta()))
    out.push_back(Region::Blue);
  if (t >= -1 && t < 0 && a >= neg_inv_theta()) out.push_back(Region::Green);
  if (t >= -1 && t < 0 && a >= 0 && a <= -t) out.push_back(Region::Yellow);
  if (t > 0 && t <= 1 && a >= -t && a <= 0) out.push_back(Region::Orange);
  if (a <= 0 && t >= 1 && (a == 0 || t <= Rational(-1 / a))) out.push_back(Region::GreyPiecewise);
  if (t > 1 && a > 0) out.push_back(Region::DualPositive);
  if (t < -1 && a > 0) out.push_back(Region::DualNegative);
  if (t > 0 || (t < 0 && a > 0)) out.push_back(Region::DualFlip);

  if (out.empty() || out.front() == Region::DualFlip)
    throw Error(Errc::Unreachable, "no region covers a=" + to_string(a) + ", theta=" + to_string(t));

  RegionAssignment ra{out, out.front(), std::nullopt};
  if (ra.canonical == Region::DualPositive)
    ra.dual_target = Params{Rational(1 / a), Rational(1 / t)};
  else if (ra.canonical == Region::DualNegative)
    ra.dual_target = Params{a, Rational(1 / t)};
  return ra;
}

std::optional<Params> flip_partner(const Params& params) {
  check(params);
  if (params.theta > 0) return Params{params.a, Rational(1 / params.theta)};
  if (params.theta < 0 && params.a > 0) return Params{Rational(1 / params.a), params.theta};
  return std::nullopt;
}

std::optional<Rational> trivial_value(const Params& params, std::size_t n) {
  const RegionAssignment ra = classify(params);
  std::optional<Rational> value;
  auto offer = [&](Rational v) {
    if (value && *value != v)
      throw Error(Errc::Unreachable, "trivial rules disagree at a=" + to_string(params.a) +
                                         ", theta=" + to_string(params.theta));
    value = std::move(v);
  };
  if (ra.has(Region::WhiteOne)) offer(Rational(1));
  if (ra.has(Region::ZeroTail)) offer(Rational(n == 0 ? 1 : 0));
  if (ra.has(Region::ThetaOne)) offer(ratio(1, factorial(static_cast<unsigned>(n + 1))));
  return value;
}

}  // namespace persist
