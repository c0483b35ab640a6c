#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "persist/polynomial.hpp"
#include "persist/rational.hpp"
#include "persist/series.hpp"

namespace gen {

// Small-height random values for property tests; fixed seeds keep runs reproducible.
class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  persist::Rational rational(long height = 9) {
    persist::Rational q(integer(-height, height), integer(1, height));
    q.canonicalize();
    return q;
  }

  persist::Rational nonzero_rational(long height = 9) {
    for (;;) {
      auto q = rational(height);
      if (q != 0) return q;
    }
  }

  persist::Polynomial polynomial(long max_degree = 3) {
    std::vector<persist::Rational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
    for (auto& x : c) x = rational();
    return persist::Polynomial(std::move(c));
  }

  persist::Series<persist::Rational> series(std::size_t order, bool unit_constant = false) {
    std::vector<persist::Rational> c(order + 1);
    for (auto& x : c) x = rational();
    if (unit_constant) c[0] = 1;
    return persist::Series<persist::Rational>(std::move(c));
  }

  persist::Series<persist::Polynomial> poly_series(std::size_t order, bool unit_constant = false) {
    std::vector<persist::Polynomial> c(order + 1);
    for (auto& x : c) x = polynomial(2);
    if (unit_constant) c[0] = persist::Polynomial(1);
    return persist::Series<persist::Polynomial>(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
