#pragma once

#include <optional>
#include <vector>

#include "equicake/valuation.hpp"

namespace equicake {

enum class TwoAgentStatus { converged, budget_exhausted };

struct TwoAgentOptions {
  double eps = 1e-6;
  /// Value-change bound per unit cut movement in global-float mode; additive
  /// instances derive it from the densities.
  double lipschitz_hint = 1.0;
  int max_iterations = 200;
};

struct TwoAgentReport {
  TwoAgentStatus status = TwoAgentStatus::budget_exhausted;
  /// Position of the single cut; dyadic, since bisection only ever halves.
  Rational cut;
  std::vector<double> values;
  std::optional<std::vector<Rational>> values_exact;
  double gap = 0;
  std::optional<Rational> gap_exact;
  int iterations = 0;
};

/// Bisection on h(t) = v_0([0,t]) - v_1([t,1]), which brackets a sign change
/// whenever both agents value the whole cake nonnegatively. Exact rational
/// evaluation in additive mode. Throws on n != 2 and on instances with
/// h(0) > 0 or h(1) < 0 (no crossing bracketed: inconsistent instance).
TwoAgentReport solve_two(const Instance& inst, const TwoAgentOptions& opt = {});

}  // namespace equicake
