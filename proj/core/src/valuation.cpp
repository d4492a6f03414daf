#include "equicake/valuation.hpp"

#include <random>

namespace equicake {

int PiecewiseConstantDensity::segment_at(const Rational& t) const {
  if (t < 0 || t > 1) throw std::domain_error("cdf argument outside [0,1]");
  // Last breakpoint <= t; t == 1 falls into the final segment.
  int lo = 0, hi = static_cast<int>(bp_.size()) - 1;
  while (lo + 1 < hi) {
    int mid = (lo + hi) / 2;
    if (bp_[static_cast<size_t>(mid)] <= t)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

PiecewiseConstantDensity PiecewiseConstantDensity::simplified() const {
  std::vector<Rational> nb{bp_.front()};
  std::vector<Rational> nv;
  for (size_t j = 0; j < val_.size(); ++j) {
    if (nv.empty() || nv.back() != val_[j]) {
      nv.push_back(val_[j]);
      nb.push_back(bp_[j + 1]);
    } else {
      nb.back() = bp_[j + 1];
    }
  }
  return PiecewiseConstantDensity(std::move(nb), std::move(nv));
}

Rational cdf_eval(const PiecewiseConstantDensity& d, const Rational& t) {
  int seg = d.segment_at(t);
  Rational acc = 0;
  const auto& bp = d.breakpoints();
  const auto& val = d.values();
  for (int j = 0; j < seg; ++j)
    acc += val[static_cast<size_t>(j)] *
           (bp[static_cast<size_t>(j) + 1] - bp[static_cast<size_t>(j)]);
  acc += val[static_cast<size_t>(seg)] * (t - bp[static_cast<size_t>(seg)]);
  return acc;
}

Rational piece_value(const PiecewiseConstantDensity& d, const Interval& iv) {
  return cdf_eval(d, iv.right) - cdf_eval(d, iv.left);
}

std::vector<Interval> cutset_to_allocation(const CutSet& x) {
  std::vector<Interval> pieces;
  pieces.reserve(static_cast<size_t>(x.size()));
  Rational left = 0;
  for (int i = 0; i < x.size(); ++i) {
    Rational right = left + x[i];
    pieces.emplace_back(left, right);
    left = std::move(right);
  }
  return pieces;
}

Instance Instance::additive(std::vector<PiecewiseConstantDensity> densities) {
  if (densities.empty()) throw std::invalid_argument("instance needs at least one agent");
  Instance inst;
  inst.n_ = static_cast<int>(densities.size());
  inst.densities_ = std::move(densities);
  return inst;
}

Instance Instance::global(int n, GlobalValuation v, std::uint64_t boundary_seed) {
  if (n < 1) throw std::invalid_argument("instance needs at least one agent");
  if (!v) throw std::invalid_argument("global instance needs a valuation");

  // Spot-check the zero-on-empty-piece contract on random boundary points.
  std::mt19937_64 rng(boundary_seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < 100 * n; ++trial) {
    std::vector<double> x(static_cast<size_t>(n));
    double sum = 0;
    for (double& c : x) sum += (c = unif(rng));
    int zeroed = pick(rng);
    sum -= x[static_cast<size_t>(zeroed)];
    x[static_cast<size_t>(zeroed)] = 0;
    if (sum == 0) continue;
    for (double& c : x) c /= sum;
    std::vector<double> vals = v(x);
    if (vals.size() != static_cast<size_t>(n))
      throw std::invalid_argument("global valuation returned a wrong-sized vector");
    for (int i = 0; i < n; ++i)
      if (x[static_cast<size_t>(i)] == 0 &&
          std::abs(vals[static_cast<size_t>(i)]) > 1e-9)
        throw std::invalid_argument("global valuation is nonzero on an empty piece");
  }

  Instance inst;
  inst.n_ = n;
  inst.global_ = std::move(v);
  return inst;
}

Rational Instance::max_abs_density() const {
  require_additive();
  Rational m = 0;
  for (const auto& d : densities_)
    if (d.max_abs_value() > m) m = d.max_abs_value();
  return m;
}

Instance Instance::negated() const {
  require_additive();
  std::vector<PiecewiseConstantDensity> nd;
  nd.reserve(densities_.size());
  for (const auto& d : densities_) nd.push_back(d.negated());
  return additive(std::move(nd));
}

std::vector<Rational> evaluate_exact(const Instance& inst, const CutSet& x) {
  if (!inst.additive_exact())
    throw std::logic_error("exact evaluation requires an additive-exact instance");
  if (x.size() != inst.agents())
    throw std::invalid_argument("cut-set dimension does not match the instance");
  std::vector<Rational> vals;
  vals.reserve(static_cast<size_t>(inst.agents()));
  auto pieces = cutset_to_allocation(x);
  for (int i = 0; i < inst.agents(); ++i)
    vals.push_back(piece_value(inst.density(i), pieces[static_cast<size_t>(i)]));
  return vals;
}

std::vector<double> evaluate(const Instance& inst, const CutSet& x) {
  if (x.size() != inst.agents())
    throw std::invalid_argument("cut-set dimension does not match the instance");
  if (inst.additive_exact()) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(inst.agents()));
    for (const Rational& v : evaluate_exact(inst, x)) out.push_back(to_double(v));
    return out;
  }
  std::vector<double> vals = inst.valuation()(x.to_doubles());
  if (vals.size() != static_cast<size_t>(inst.agents()))
    throw std::runtime_error("global valuation returned a wrong-sized vector");
  return vals;
}

Instance negate(const Instance& inst) { return inst.negated(); }

Instance permute(const Instance& inst, const std::vector<int>& perm) {
  if (!inst.additive_exact())
    throw std::logic_error("permutation requires an additive-exact instance");
  int n = inst.agents();
  if (perm.size() != static_cast<size_t>(n))
    throw std::invalid_argument("permutation size does not match the instance");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
      throw std::invalid_argument("not a permutation of the agents");
    seen[static_cast<size_t>(p)] = true;
  }
  std::vector<PiecewiseConstantDensity> nd;
  nd.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) nd.push_back(inst.density(perm[static_cast<size_t>(i)]));
  return Instance::additive(std::move(nd));
}

}  // namespace equicake
