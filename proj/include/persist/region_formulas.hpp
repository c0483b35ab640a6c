#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "persist/phase_map.hpp"
#include "persist/rational.hpp"
#include "persist/series.hpp"

namespace persist {

/// Orange truncation index p with theta^{p+1} < b <= theta^p; empty index
/// means F never terminates (b = 0 or theta = 1).
struct Cutoff {
  std::optional<std::size_t> index;
  bool infinite() const noexcept { return !index.has_value(); }
};

struct DerivedScalars {
  Rational b;                    // -a
  std::optional<Rational> mu;    // (1 + a/theta)/(1 + a), theta != 0
  std::optional<Rational> nu;    // (1 - 1/theta)/(1 + a), theta < 0
  std::optional<Cutoff> p_cutoff;  // 0 < theta <= 1 and b > 0
};

DerivedScalars derived_scalars(const Params& params);

enum class Method {
  BlueGf,
  GreenGf,
  YellowGf,
  OrangeGf,
  GreyClosed,
  Recurrence,
  Combinatorial,
  Duality,
  Trivial,
  Oracle,
};

std::string_view method_name(Method m) noexcept;

struct TableEntry {
  std::size_t n;
  Rational value;
  double shadow;
};

struct PersistenceTable {
  Params params;
  std::vector<TableEntry> entries;
  Method method;

  static PersistenceTable from_values(const Params& params, const std::vector<Rational>& values,
                                      Method method);
  std::vector<Rational> values() const;
  const Rational& at(std::size_t n) const { return entries.at(n).value; }
};

/// Empty when 1 = p_0 >= p_1 >= ... >= 0 holds, else a description of the breach.
std::optional<std::string> table_invariant_violation(const PersistenceTable& table);

// Generating functions, one per region of the phase diagram. Each returns
// sum p_n z^n through z^order and throws Error(Domain) outside its region.
Series<Rational> blue_gf(const Params& params, std::size_t order);
Series<Rational> green_gf(const Params& params, std::size_t order);
Series<Rational> yellow_gf(const Params& params, std::size_t order);
/// F(z) = sum_i (-1)^i (theta^i - b)_+^{i+1} / ((i+1)! theta^{i(i+1)/2} (1-b)^{i+1}) z^i,
/// zero-padded to the full order.
Series<Rational> orange_F(const Params& params, std::size_t order);
Series<Rational> orange_gf(const Params& params, std::size_t order);

/// Closed form (1-b)^{-(n+1)} theta^{n(n+1)/2}/(n+1)! (theta^{-n} - b)_+^{n+1}.
Rational grey_pn(const Params& params, std::size_t n);

/// p_0..p_n from the blue-region integral recursion.
std::vector<Rational> blue_recurrence_table(const Params& params, std::size_t n);
Rational blue_recurrence_pn(const Params& params, std::size_t n);

/// Formula attached to one non-duality region tag (including the trivial
/// ones), regardless of priority. Throws Error(Domain) if the tag does not apply.
Series<Rational> region_series(Region region, const Params& params, std::size_t order);

/// p_0..p_order through the canonical region, following dualities.
PersistenceTable persistence_series(const Params& params, std::size_t order);

}  // namespace persist
