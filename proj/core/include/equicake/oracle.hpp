#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equicake/valuation.hpp"

namespace equicake {

struct VerifyResult {
  bool pass = false;
  std::vector<double> values;
  std::optional<std::vector<Rational>> values_exact;
  double gap = 0;
  std::optional<Rational> gap_exact;
};

/// Checks whether the cut-set is eps-equitable. Exact comparison for
/// additive instances (eps = 0 certifies exact equitability).
VerifyResult verify_equitable(const Instance& inst, const CutSet& x, const Rational& eps);

/// Float-mode entry for global instances; coordinates must sum to 1 within
/// 1e-12.
VerifyResult verify_equitable(const Instance& inst, const std::vector<double>& x, double eps);

struct GridSearchResult {
  CutSet best = CutSet::vertex(1, 0);
  std::vector<double> values;
  std::optional<std::vector<Rational>> values_exact;
  double gap = 0;
  std::optional<Rational> gap_exact;
  std::int64_t points_scanned = 0;
};

/// Exhaustive equity-gap minimum over all grid points at resolution m, ties
/// broken toward the lexicographically smallest cut-set. Deliberately
/// independent of the subdivision machinery: it enumerates compositions
/// directly, so it cross-checks the solver rather than sharing its code.
GridSearchResult min_gap_grid(const Instance& inst, std::int64_t m);

}  // namespace equicake
