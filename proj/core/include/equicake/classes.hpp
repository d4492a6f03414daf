#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "equicake/valuation.hpp"

namespace equicake {

/// Witness that F_{agent} < F_{agent+1} somewhere: cdf order breaks at t.
struct ValueOrderWitness {
  int agent = 0;
  Rational t;
};

struct ValueOrderedResult {
  bool ordered = false;
  std::optional<ValueOrderWitness> witness;
};

/// Whether the cdfs are pointwise nonincreasing in agent index. The cdfs are
/// piecewise linear, so checking every breakpoint of each adjacent pair's
/// union is exact. Additive-exact only.
ValueOrderedResult is_value_ordered(const Instance& inst);

/// Prefix bound for value-ordered instances: for every i, the first i+1
/// agents' combined value at x is at least F_i evaluated at the prefix length.
bool prefix_bound_check(const Instance& inst, const CutSet& x);

/// Split-cake shape of one density: nonpositive, then nonnegative on [l, r],
/// then nonpositive again, with [l, r] maximal; theta is the smallest cdf
/// zero inside [l, r].
struct SplitProfile {
  Rational l, r, theta;
};

/// nullopt when the density is not split-cake. Requires F(1) >= 0.
std::optional<SplitProfile> split_profile(const PiecewiseConstantDensity& d);

/// Agents sorted by split threshold theta, ties by index: the ordering whose
/// permuted instance is guaranteed free of acceptability violations.
/// Throws if some agent is not split-cake.
std::vector<int> sann_permutation_split_cake(const Instance& inst);

bool is_single_peaked(const PiecewiseConstantDensity& d);

/// All densities equal after merging equal-valued adjacent segments.
bool is_identical(const Instance& inst);

/// Grid point where every agent holding a positive-length piece has strictly
/// negative value, i.e. a counterexample to the some-agent-nonnegative
/// property at resolution m.
struct SannViolation {
  CutSet x = CutSet::vertex(1, 0);
  std::vector<Rational> values;
};

/// First violation in lexicographic grid order, if any. Additive-exact only.
std::optional<SannViolation> sann_falsify(const Instance& inst, std::int64_t m);

struct PermutationSearch {
  /// Lexicographically first agent ordering whose permuted instance has no
  /// violation at the falsifier resolution.
  std::optional<std::vector<int>> permutation;
  /// One witness per failing ordering, in lexicographic ordering order.
  std::vector<std::pair<std::vector<int>, SannViolation>> violations;
};

/// Tries all n! orderings (n <= 8) against the falsifier grid.
PermutationSearch find_sann_permutation(const Instance& inst, std::int64_t m);

struct ClassReport {
  bool identical = false;
  bool value_ordered = false;
  std::optional<ValueOrderWitness> value_order_witness;
  bool split_cake = false;
  std::vector<SplitProfile> split_profiles;  // one per agent when split_cake
  std::optional<int> non_split_agent;
  bool single_peaked = false;
  std::optional<SannViolation> falsifier;
};

/// Runs every class test plus the falsifier on the instance as ordered.
ClassReport classify(const Instance& inst, std::int64_t falsify_m = 32);

}  // namespace equicake
