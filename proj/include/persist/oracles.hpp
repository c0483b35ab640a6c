#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "persist/phase_map.hpp"
#include "persist/polynomial.hpp"
#include "persist/rational.hpp"

namespace persist {

/// Piecewise polynomial on [breakpoints.front(), breakpoints.back()];
/// pieces[j] holds on [breakpoints[j], breakpoints[j+1]] in the global variable.
struct PiecewisePoly {
  std::vector<Rational> breakpoints;
  std::vector<Polynomial> pieces;

  /// Index of the piece containing x (the left one at a shared breakpoint).
  std::size_t locate(const Rational& x) const;
  Rational operator()(const Rational& x) const;
  Rational integral() const;
  /// x -> integral from breakpoints.front() to x, continuous across pieces.
  PiecewisePoly cumulative() const;
  /// Fuses neighbouring pieces carrying the same polynomial.
  void merge_equal_pieces();
};

/// Reads PERSIST_MA1_CAP when set to a positive integer, else 10.
std::size_t default_dp_cap();

/// One step f_k -> f_{k+1}, f_{k+1}(y) = (1/(1+a)) * integral of f_k over
/// {x in [-a,1] : theta*x <= y}.
PiecewisePoly dp_step(const Params& params, const PiecewisePoly& f);

/// p_0..p_n by exact integration of the joint density; throws
/// Error(CapExceeded) when n > cap.
std::vector<Rational> dp_exact_table(const Params& params, std::size_t n,
                                     std::size_t cap = default_dp_cap());
Rational dp_exact_pn(const Params& params, std::size_t n, std::size_t cap = default_dp_cap());

/// Uniform double in [0,1) keyed by (seed, sample, coordinate); the same key
/// always yields the same value, whatever thread asks.
double counter_uniform(std::uint64_t seed, std::uint64_t sample, std::uint64_t coordinate) noexcept;

struct McEstimate {
  double mean = 0;
  double std_error = 0;  // sqrt(mean (1 - mean) / samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Frequency of {X_{i+1} >= theta X_i, i = 1..n} over `samples` draws.
/// Bit-identical for a fixed (seed, samples) regardless of `workers`
/// (0 picks the hardware concurrency).
McEstimate mc_estimate(const Params& params, std::size_t n, std::uint64_t samples,
                       std::uint64_t seed, unsigned workers = 0);

}  // namespace persist
