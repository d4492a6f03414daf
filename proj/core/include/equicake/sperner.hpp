#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "equicake/simplex.hpp"
#include "equicake/valuation.hpp"

namespace equicake {

/// happy:    agents with maximal value at x, ascending.
/// happier:  happy agents whose piece is longest among the happy, ascending.
/// happiest: the least-indexed happier agent; it is the vertex label.
struct HappySets {
  std::vector<int> happy;
  std::vector<int> happier;
  int happiest = 0;
};

HappySets happy_sets(const Instance& inst, const CutSet& x);
int label_vertex(const Instance& inst, const CutSet& x);

/// Thread-safe label memo for one instance. Grid vertices reappear across
/// refinements (the vertex sets nest when m doubles), so labels are keyed by
/// the reduced coordinates, not by (k, m).
class LabelCache {
 public:
  explicit LabelCache(const Instance& inst) : inst_(&inst) {}
  LabelCache(const LabelCache&) = delete;
  LabelCache& operator=(const LabelCache&) = delete;

  int label(const CutSet& x);
  std::size_t size() const;

 private:
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::string, int> map;
  };
  const Instance* inst_;
  static constexpr int kShards = 16;
  std::array<Shard, kShards> shards_;
};

struct LabelingViolation {
  CutSet vertex;
  int label = 0;
  int index = 0;     // corner index, or the facet {x_index = 0}
  bool at_corner = false;
};

/// Checks the boundary conditions the labeling must satisfy for the odd-cell
/// argument: corner i carries label i, and no vertex on facet {x_i = 0}
/// carries label i. Returns the first violation in scan order, if any.
std::optional<LabelingViolation> check_sperner(const Instance& inst, std::int64_t m,
                                               LabelCache* cache = nullptr);

/// Cells whose vertex labels are pairwise distinct, in enumeration order.
std::vector<ElementarySimplex> fully_labeled(const Instance& inst, std::int64_t m,
                                             LabelCache* cache = nullptr);

enum class SolveStatus { converged, budget_exhausted, labeling_violation };

struct SolveOptions {
  double eps = 1e-6;
  std::int64_t m0 = 8;
  std::int64_t mmax = 1024;
  int threads = 0;     // 0 = all hardware threads
  bool polish = true;  // within-cell exact equalization (additive mode)
};

struct ResolutionStats {
  std::int64_t m = 0;
  std::int64_t fully_labeled_cells = 0;
  /// Smallest equity gap over the fully labeled cells' barycenters; infinity
  /// when the resolution produced none.
  double min_barycenter_gap = 0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::budget_exhausted;
  CutSet best = CutSet::vertex(1, 0);
  std::vector<double> values;
  std::optional<std::vector<Rational>> values_exact;
  double gap = 0;
  std::optional<Rational> gap_exact;
  std::int64_t resolution_reached = 0;
  std::vector<ResolutionStats> per_resolution;
  std::optional<LabelingViolation> violation;
};

/// Refines the subdivision (m0, 2*m0, ...) until some candidate cut-set has
/// equity gap <= eps, the budget mmax is exhausted, or the labeling breaks a
/// boundary condition. Candidates are the barycenters of fully labeled cells
/// plus, for additive instances, their exact within-cell equalizations.
SolveReport solve(const Instance& inst, const SolveOptions& opt = {});

/// Equitable division for instances whose values are everywhere nonpositive:
/// negates the instance, solves, and reports values of the original.
SolveReport solve_sanp(const Instance& inst, const SolveOptions& opt = {});

}  // namespace equicake
