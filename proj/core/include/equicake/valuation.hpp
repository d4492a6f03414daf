#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "equicake/rational.hpp"

namespace equicake {

/// Subinterval of the unit cake, possibly empty (left == right).
struct Interval {
  Rational left;
  Rational right;

  Interval(Rational l, Rational r) : left(std::move(l)), right(std::move(r)) {
    if (left < 0 || right > 1 || left > right)
      throw std::invalid_argument("interval must satisfy 0 <= left <= right <= 1");
  }
};

/// Point of the standard simplex: entry i is the length of the i-th piece.
/// Piece i of the cake is [sum_{j<i} x_j, sum_{j<=i} x_j].
class CutSet {
 public:
  explicit CutSet(std::vector<Rational> coords) : x_(std::move(coords)) {
    if (x_.empty()) throw std::invalid_argument("cut-set needs at least one piece");
    Rational sum = 0;
    for (const Rational& c : x_) {
      if (c < 0) throw std::invalid_argument("cut-set coordinates must be nonnegative");
      sum += c;
    }
    if (sum != 1) throw std::invalid_argument("cut-set coordinates must sum to 1");
  }

  static CutSet vertex(int n, int i) {
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    c.at(static_cast<size_t>(i)) = 1;
    return CutSet(std::move(c));
  }

  static CutSet uniform(int n) {
    return CutSet(std::vector<Rational>(static_cast<size_t>(n), Rational(1, n)));
  }

  int size() const { return static_cast<int>(x_.size()); }
  const Rational& operator[](int i) const { return x_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coords() const { return x_; }

  std::vector<double> to_doubles() const {
    std::vector<double> d;
    d.reserve(x_.size());
    for (const Rational& c : x_) d.push_back(to_double(c));
    return d;
  }

  friend bool operator==(const CutSet& a, const CutSet& b) { return a.x_ == b.x_; }
  friend bool operator<(const CutSet& a, const CutSet& b) { return a.x_ < b.x_; }

 private:
  std::vector<Rational> x_;
};

/// Piecewise-constant density over [0,1]: breakpoints 0 = b_0 < ... < b_s = 1,
/// value v_j on segment [b_j, b_{j+1}). Values may be negative.
class PiecewiseConstantDensity {
 public:
  PiecewiseConstantDensity(std::vector<Rational> breakpoints, std::vector<Rational> values)
      : bp_(std::move(breakpoints)), val_(std::move(values)) {
    if (bp_.size() < 2) throw std::invalid_argument("density needs at least two breakpoints");
    if (val_.size() + 1 != bp_.size())
      throw std::invalid_argument("density needs exactly one value per segment");
    if (bp_.front() != 0 || bp_.back() != 1)
      throw std::invalid_argument("breakpoints must start at 0 and end at 1");
    for (size_t j = 0; j + 1 < bp_.size(); ++j)
      if (!(bp_[j] < bp_[j + 1]))
        throw std::invalid_argument("breakpoints must be strictly increasing");
  }

  int segments() const { return static_cast<int>(val_.size()); }
  const std::vector<Rational>& breakpoints() const { return bp_; }
  const std::vector<Rational>& values() const { return val_; }

  /// Index of the segment whose half-open span [b_j, b_{j+1}) contains t;
  /// t == 1 maps to the last segment.
  int segment_at(const Rational& t) const;

  Rational max_abs_value() const {
    Rational m = 0;
    for (const Rational& v : val_)
      if (abs(v) > m) m = abs(v);
    return m;
  }

  PiecewiseConstantDensity negated() const {
    std::vector<Rational> nv;
    nv.reserve(val_.size());
    for (const Rational& v : val_) nv.push_back(-v);
    return PiecewiseConstantDensity(bp_, nv);
  }

  /// Canonical form with equal-valued adjacent segments merged.
  PiecewiseConstantDensity simplified() const;

  friend bool operator==(const PiecewiseConstantDensity& a, const PiecewiseConstantDensity& b) {
    return a.bp_ == b.bp_ && a.val_ == b.val_;
  }

 private:
  std::vector<Rational> bp_;
  std::vector<Rational> val_;
};

/// Exact cdf F(t) = integral of the density over [0, t].
Rational cdf_eval(const PiecewiseConstantDensity& d, const Rational& t);

/// Exact value of an interval piece: F(right) - F(left).
Rational piece_value(const PiecewiseConstantDensity& d, const Interval& iv);

/// The connected pieces of a cut-set, in order; piece i goes to agent i.
std::vector<Interval> cutset_to_allocation(const CutSet& x);

/// Black-box joint valuation for non-additive instances: maps piece lengths
/// to one value per agent. Must return 0 for every agent whose piece is empty.
using GlobalValuation = std::function<std::vector<double>(const std::vector<double>&)>;

/// A cake-division instance in one of two modes. Additive-exact instances
/// carry one density per agent and evaluate in exact rational arithmetic;
/// global-float instances carry a black-box valuation over all pieces.
class Instance {
 public:
  static Instance additive(std::vector<PiecewiseConstantDensity> densities);

  /// Wraps a black box. The zero-on-empty-piece requirement is spot-checked at
  /// construction on pseudorandom boundary points (seeded, so deterministic).
  static Instance global(int n, GlobalValuation v, std::uint64_t boundary_seed = 20240817);

  int agents() const { return n_; }
  bool additive_exact() const { return !densities_.empty(); }

  const PiecewiseConstantDensity& density(int i) const {
    require_additive();
    return densities_[static_cast<size_t>(i)];
  }
  const std::vector<PiecewiseConstantDensity>& densities() const {
    require_additive();
    return densities_;
  }
  const GlobalValuation& valuation() const { return global_; }

  /// Largest |density value| over all agents; Lipschitz data for bounds.
  Rational max_abs_density() const;

  Instance negated() const;

 private:
  Instance() = default;
  void require_additive() const {
    if (!additive_exact())
      throw std::logic_error("operation requires an additive-exact instance");
  }

  int n_ = 0;
  std::vector<PiecewiseConstantDensity> densities_;
  GlobalValuation global_;
};

/// Exact per-agent values at a cut-set. Additive-exact instances only.
std::vector<Rational> evaluate_exact(const Instance& inst, const CutSet& x);

/// Per-agent values at a cut-set in either mode (exact values rounded for
/// additive instances, black-box call for global ones).
std::vector<double> evaluate(const Instance& inst, const CutSet& x);

/// Instance with every density negated (additive-exact only).
Instance negate(const Instance& inst);

/// Instance whose agent i holds the densities of agent perm[i].
/// perm must be a permutation of 0..n-1. Additive-exact only.
Instance permute(const Instance& inst, const std::vector<int>& perm);

/// max - min of a nonempty value vector.
template <typename T>
T equity_gap(const std::vector<T>& v) {
  if (v.empty()) throw std::invalid_argument("equity gap of an empty value vector");
  T lo = v.front(), hi = v.front();
  for (const T& t : v) {
    if (t < lo) lo = t;
    if (hi < t) hi = t;
  }
  return hi - lo;
}

}  // namespace equicake
