#pragma once

#include <optional>

namespace graphsep {

/// Absolute tolerances. Inputs are expected at unit degree-sum scale, so no
/// relative scaling is applied except for the singular-value cutoff.
struct Tolerances {
  double weight = 1e-10;  // edge weights, entrywise matrix comparisons
  double degree = 1e-9;   // degree-matrix equality
  double psd = 1e-9;      // eigenvalues above -psd count as nonnegative
  double purity = 1e-9;   // Tr(sigma^2) == 1 and the pure-graph weight identity
  double svd = 1e-9;      // second singular value relative to the first

  /// One user-supplied epsilon drives the degree, purity and positivity
  /// thresholds; edge detection stays a decade tighter.
  static Tolerances with_override(double eps);

  /// Defaults, overridden by GRAPHSEP_TOLERANCE when set to a positive number.
  static Tolerances from_env();
};

/// Parses GRAPHSEP_TOLERANCE; empty when unset or not a positive number.
std::optional<double> tolerance_from_env();

}  // namespace graphsep
