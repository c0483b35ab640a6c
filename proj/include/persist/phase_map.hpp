#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "persist/rational.hpp"

namespace persist {

/// Innovations are uniform on [-a, 1]; theta couples consecutive terms.
struct Params {
  Rational a;
  Rational theta;

  /// Throws Error(Domain) unless a > -1.
  static Params make(Rational a, Rational theta);

  friend bool operator==(const Params&, const Params&) = default;
};

enum class Region {
  WhiteOne,
  ZeroTail,
  ThetaOne,
  Blue,
  Green,
  Yellow,
  Orange,
  GreyPiecewise,
  DualPositive,
  DualNegative,
  DualFlip,
};

std::string_view region_name(Region r) noexcept;
std::optional<Region> region_from_name(std::string_view name) noexcept;
bool is_duality(Region r) noexcept;

struct RegionAssignment {
  std::vector<Region> applicable;  // in priority order
  Region canonical;
  /// Present iff canonical is DualPositive or DualNegative.
  std::optional<Params> dual_target;

  bool has(Region r) const noexcept;
};

/// Every region whose defining inequalities hold at params, plus the
/// highest-priority one. DualFlip is listed wherever the generating-function
/// flip applies (theta > 0, or theta < 0 with a > 0) but is never canonical.
RegionAssignment classify(const Params& params);

/// Partner whose generating function flips into this one's:
/// (a, 1/theta) for theta > 0 and (1/a, theta) for theta < 0, a > 0.
std::optional<Params> flip_partner(const Params& params);

/// Closed-form p_n for the white, zero-tail and theta = 1 cases.
std::optional<Rational> trivial_value(const Params& params, std::size_t n);

}  // namespace persist
