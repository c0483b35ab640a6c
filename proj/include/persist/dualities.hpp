#pragma once

#include <cstddef>

#include "persist/phase_map.hpp"
#include "persist/region_formulas.hpp"
#include "persist/series.hpp"

namespace persist {

enum class DualityKind { PositiveSwap, NegativeInvert, MoebiusFlip };

/// (a, theta) -> (1/a, 1/theta) for a > 0, theta > 0; p_n is unchanged.
Params dual_pos(const Params& params);

/// (a, theta) -> (a, 1/theta) for a > 0, theta < 0; p_n is unchanged.
Params dual_neg(const Params& params);

/// q(-z) / (1 - z q(-z)) at q's order. Maps the generating function at
/// flip_partner(params) to the one at params, and is its own inverse.
Series<Rational> moebius_flip(const Series<Rational>& q);

/// LHS - RHS of
///   p_n(theta) = sum_{k=1..n} p_{n-k}(theta) p_{k-1}(1/theta) (-1)^{k-1} + (-1)^n p_n(1/theta),
/// with p_theta at (a, theta) and p_inv at (a, 1/theta). Zero for valid input.
Rational hidden_duality_residual(const PersistenceTable& p_theta, const PersistenceTable& p_inv,
                                 std::size_t n);

}  // namespace persist
