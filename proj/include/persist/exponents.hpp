#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "persist/phase_map.hpp"
#include "persist/polynomial.hpp"
#include "persist/rational.hpp"

namespace persist {

/// Closed interval [mid - rad, mid + rad].
struct Enclosure {
  double mid = 0;
  double rad = 0;

  double lo() const noexcept { return mid - rad; }
  double hi() const noexcept { return mid + rad; }
  bool contains(double x) const noexcept { return lo() <= x && x <= hi(); }

  /// Smallest double enclosure of the rational interval [lo, hi].
  static Enclosure from_bounds(const Rational& lo, const Rational& hi);
};

/// E(theta, x) for |theta| <= 1: exact partial sum plus the tail bound
/// sum_{k>N} |x|^k/k! <= |x|^{N+1}/(N+1)! e^{|x|}; radius <= tol.
Enclosure eval_E_rigorous(const Rational& theta, const Rational& x, double tol);

enum class ExponentKind {
  RootOfE,
  YellowEquation,
  OrangePolynomial,
  Superexponential,
  TrivialOne,
  TrivialZero,
  NotFound,
};

std::string_view exponent_kind_name(ExponentKind k) noexcept;

struct ExponentOptions {
  double tol = 1e-12;
  /// Scan window is (0, z_max_factor * (1 + a)].
  double z_max_factor = 64;
  double step_factor = 1.5;
};

struct ExponentResult {
  ExponentKind kind = ExponentKind::NotFound;
  Params resolved;                   // parameters after dualities
  std::optional<Enclosure> z0;       // root kinds and TrivialOne
  std::optional<Rational> z0_exact;  // when the root is found exactly
  std::optional<Enclosure> lambda;   // 1/z0; 0 for TrivialZero/Superexponential; absent if NotFound
  std::optional<double> constant;    // leading constant C, blue region only
  double precision = 0;
  double scanned_max = 0;            // upper end of the scan window
};

/// Persistence exponent lambda = 1/z0 with z0 the smallest positive zero of
/// the resolved region's denominator.
ExponentResult find_exponent(const Params& params, const ExponentOptions& options = {});

/// C with p_n ~ C lambda^{n+2}:
/// C = (1+a) E(theta, a/(lambda(1+a))) / E(theta, -theta/(lambda(1+a))). Blue region only.
double asymptotic_constant(const Params& params, const Enclosure& lambda);

// Real-root isolation for polynomials with exact coefficients.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Distinct real roots of the sequence's head in (lo, hi].
std::size_t sturm_count(const std::vector<Polynomial>& seq, const Rational& lo, const Rational& hi);
/// Smallest root in (lo, hi] bracketed to width <= tol, or nothing.
std::optional<std::pair<Rational, Rational>> smallest_root(const Polynomial& p, const Rational& lo,
                                                           const Rational& hi, const Rational& tol);

}  // namespace persist
