#pragma once

#include <cstddef>
#include <vector>

#include "persist/phase_map.hpp"
#include "persist/polynomial.hpp"
#include "persist/rational.hpp"

namespace persist {

/// Multiplicity vector of an integer partition of ell: r[i-1] counts parts
/// equal to i, so sum_i i*r_i = ell.
struct Profile {
  std::size_t ell = 0;
  std::vector<unsigned> r;

  unsigned parts() const;  // sum_i r_i
  friend bool operator==(const Profile&, const Profile&) = default;
};

/// All ell-profiles in descending lexicographic order of r, e.g. for ell = 3:
/// (3,0,0), (1,1,0), (0,0,1).
std::vector<Profile> enumerate_profiles(std::size_t ell);

/// Number of length-k nonnegative integer vectors with profile p:
/// k! / (prod r_j! * (k - sum r_j)!), zero when k < sum r_j.
Integer profile_count(std::size_t k, const Profile& p);

/// phi_ell(theta), the z^ell coefficient of 1/E(theta, z), assembled from the
/// profile sum. Memoized; safe to call from several threads.
Polynomial phi(std::size_t ell);

/// Nonzero monomials of phi(ell).
std::size_t monomial_count(std::size_t ell);

/// Distinct values of n_1^2 + ... + n_k^2 over the partitions of ell.
std::size_t distinct_square_sums(std::size_t ell);

/// Mallows-Riordan polynomial J_n, read off log E(theta, z). Memoized.
Polynomial mallows_J(std::size_t n);

/// Blue region: (-1/(1+a))^{n+1} sum_k phi_{n+1-k}(theta) theta^{k(k-1)/2}/k! (-a)^k.
Rational comb_pn_blue(const Params& params, std::size_t n);

/// theta >= 1, a >= 0, or theta < -1 with -1/theta <= a <= -theta: the blue
/// sum written in 1/theta.
Rational comb_pn_dual(const Params& params, std::size_t n);

/// Green region: (-1)^{n+1}/(1+a)^{n+1} sum_k theta^{k(k-3)/2}/k! phi_{n+1-k}(theta),
/// with p_0 = 1.
Rational comb_pn_green(const Params& params, std::size_t n);

}  // namespace persist
