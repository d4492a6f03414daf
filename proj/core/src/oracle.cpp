#include "equicake/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace equicake {

VerifyResult verify_equitable(const Instance& inst, const CutSet& x, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  VerifyResult res;
  if (inst.additive_exact()) {
    std::vector<Rational> vals = evaluate_exact(inst, x);
    Rational gap = equity_gap(vals);
    res.pass = gap <= eps;
    res.gap = to_double(gap);
    res.gap_exact = std::move(gap);
    res.values.reserve(vals.size());
    for (const Rational& v : vals) res.values.push_back(to_double(v));
    res.values_exact = std::move(vals);
  } else {
    res.values = evaluate(inst, x);
    res.gap = equity_gap(res.values);
    res.pass = res.gap <= to_double(eps);
  }
  return res;
}

VerifyResult verify_equitable(const Instance& inst, const std::vector<double>& x, double eps) {
  if (inst.additive_exact())
    throw std::logic_error("additive-exact instances verify exact cut-sets");
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  if (x.size() != static_cast<size_t>(inst.agents()))
    throw std::invalid_argument("cut-set dimension does not match the instance");
  double sum = 0;
  for (double c : x) {
    if (c < 0) throw std::invalid_argument("cut-set coordinates must be nonnegative");
    sum += c;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("cut-set coordinates must sum to 1");
  VerifyResult res;
  res.values = inst.valuation()(x);
  if (res.values.size() != static_cast<size_t>(inst.agents()))
    throw std::runtime_error("global valuation returned a wrong-sized vector");
  res.gap = equity_gap(res.values);
  res.pass = res.gap <= eps;
  return res;
}

GridSearchResult min_gap_grid(const Instance& inst, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("resolution must be at least 1");
  int n = inst.agents();
  bool exact = inst.additive_exact();

  GridSearchResult res;
  bool have_best = false;
  Rational best_ex;
  double best_fl = 0;

  std::vector<std::int64_t> k(static_cast<size_t>(n), 0);
  auto visit = [&](const std::vector<std::int64_t>& comp) {
    std::vector<Rational> coords;
    coords.reserve(comp.size());
    for (std::int64_t v : comp) coords.emplace_back(v, m);
    CutSet x(std::move(coords));
    ++res.points_scanned;
    if (exact) {
      std::vector<Rational> vals = evaluate_exact(inst, x);
      Rational gap = equity_gap(vals);
      if (!have_best || gap < best_ex) {
        have_best = true;
        best_ex = std::move(gap);
        res.best = std::move(x);
        res.values_exact = std::move(vals);
      }
    } else {
      std::vector<double> vals = evaluate(inst, x);
      double gap = equity_gap(vals);
      if (!have_best || gap < best_fl) {
        have_best = true;
        best_fl = gap;
        res.best = std::move(x);
        res.values = std::move(vals);
      }
    }
  };
  // Lexicographic scan with strict improvement keeps the lexicographically
  // smallest minimizer.
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos + 1 == n) {
      k[static_cast<size_t>(pos)] = left;
      visit(k);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      k[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, m);

  if (exact) {
    res.gap = to_double(best_ex);
    res.gap_exact = std::move(best_ex);
    res.values.clear();
    for (const Rational& v : *res.values_exact) res.values.push_back(to_double(v));
  } else {
    res.gap = best_fl;
  }
  return res;
}

}  // namespace equicake
