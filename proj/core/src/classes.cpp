#include "equicake/classes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace equicake {

namespace {

std::vector<Rational> breakpoint_union(const PiecewiseConstantDensity& a,
                                       const PiecewiseConstantDensity& b) {
  std::set<Rational> s(a.breakpoints().begin(), a.breakpoints().end());
  s.insert(b.breakpoints().begin(), b.breakpoints().end());
  return {s.begin(), s.end()};
}

void require_additive(const Instance& inst, const char* op) {
  if (!inst.additive_exact())
    throw std::logic_error(std::string(op) + " requires an additive-exact instance");
}

}  // namespace

ValueOrderedResult is_value_ordered(const Instance& inst) {
  require_additive(inst, "value-order check");
  for (int i = 0; i + 1 < inst.agents(); ++i) {
    const auto& hi = inst.density(i);
    const auto& lo = inst.density(i + 1);
    for (const Rational& t : breakpoint_union(hi, lo))
      if (cdf_eval(hi, t) < cdf_eval(lo, t))
        return {false, ValueOrderWitness{i, t}};
  }
  return {true, std::nullopt};
}

bool prefix_bound_check(const Instance& inst, const CutSet& x) {
  require_additive(inst, "prefix bound check");
  if (x.size() != inst.agents())
    throw std::invalid_argument("cut-set dimension does not match the instance");
  std::vector<Rational> vals = evaluate_exact(inst, x);
  Rational value_prefix = 0, length_prefix = 0;
  for (int i = 0; i < inst.agents(); ++i) {
    value_prefix += vals[static_cast<size_t>(i)];
    length_prefix += x[i];
    if (value_prefix < cdf_eval(inst.density(i), length_prefix)) return false;
  }
  return true;
}

std::optional<SplitProfile> split_profile(const PiecewiseConstantDensity& d) {
  if (cdf_eval(d, 1) < 0)
    throw std::domain_error("split profile requires a nonnegative total value");
  const auto& val = d.values();
  const auto& bp = d.breakpoints();
  int s = d.segments();
  int first_pos = -1, last_pos = -1;
  for (int j = 0; j < s; ++j)
    if (val[static_cast<size_t>(j)] > 0) {
      if (first_pos < 0) first_pos = j;
      last_pos = j;
    }
  if (first_pos < 0) {
    // Nonnegative total with no positive segment forces the all-zero density.
    return SplitProfile{Rational(0), Rational(1), Rational(0)};
  }
  for (int j = first_pos; j <= last_pos; ++j)
    if (val[static_cast<size_t>(j)] < 0) return std::nullopt;

  int lo = first_pos, hi = last_pos;
  while (lo > 0 && val[static_cast<size_t>(lo) - 1] == 0) --lo;
  while (hi + 1 < s && val[static_cast<size_t>(hi) + 1] == 0) ++hi;
  SplitProfile p{bp[static_cast<size_t>(lo)], bp[static_cast<size_t>(hi) + 1], Rational(0)};

  // F is nondecreasing on [l, r] from F(l) <= 0 up to F(r) >= 0; the first
  // zero is inside the first segment where F crosses.
  Rational f = cdf_eval(d, p.l);
  if (f >= 0) {
    p.theta = p.l;
    return p;
  }
  for (int j = lo; j <= hi; ++j) {
    const Rational& w = val[static_cast<size_t>(j)];
    Rational len = bp[static_cast<size_t>(j) + 1] - bp[static_cast<size_t>(j)];
    Rational next = f + w * len;
    if (next >= 0) {
      p.theta = bp[static_cast<size_t>(j)] + (-f) / w;
      return p;
    }
    f = next;
  }
  throw std::logic_error("split threshold not found despite nonnegative total");
}

std::vector<int> sann_permutation_split_cake(const Instance& inst) {
  require_additive(inst, "split-cake ordering");
  std::vector<Rational> theta(static_cast<size_t>(inst.agents()));
  for (int i = 0; i < inst.agents(); ++i) {
    auto p = split_profile(inst.density(i));
    if (!p) throw std::domain_error("agent " + std::to_string(i) + " is not split-cake");
    theta[static_cast<size_t>(i)] = p->theta;
  }
  std::vector<int> order(static_cast<size_t>(inst.agents()));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return theta[static_cast<size_t>(a)] < theta[static_cast<size_t>(b)];
  });
  return order;
}

bool is_single_peaked(const PiecewiseConstantDensity& d) {
  const auto& val = d.values();
  size_t j = 1;
  while (j < val.size() && val[j - 1] <= val[j]) ++j;
  while (j < val.size() && val[j - 1] >= val[j]) ++j;
  return j >= val.size();
}

bool is_identical(const Instance& inst) {
  require_additive(inst, "identity check");
  auto first = inst.density(0).simplified();
  for (int i = 1; i < inst.agents(); ++i)
    if (!(inst.density(i).simplified() == first)) return false;
  return true;
}

namespace {

/// Enumerates k >= 0 with sum m in lexicographic order; f returns true to stop.
bool scan_compositions(int parts, std::int64_t total,
                       const std::function<bool(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> k(static_cast<size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> bool {
    if (pos + 1 == parts) {
      k[static_cast<size_t>(pos)] = left;
      return f(k);
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      k[static_cast<size_t>(pos)] = v;
      if (self(self, pos + 1, left - v)) return true;
    }
    return false;
  };
  return rec(rec, 0, total);
}

}  // namespace

std::optional<SannViolation> sann_falsify(const Instance& inst, std::int64_t m) {
  require_additive(inst, "falsifier");
  if (m < 1) throw std::invalid_argument("resolution must be at least 1");
  int n = inst.agents();
  std::optional<SannViolation> found;
  scan_compositions(n, m, [&](const std::vector<std::int64_t>& k) {
    std::vector<Rational> coords;
    coords.reserve(static_cast<size_t>(n));
    for (std::int64_t v : k) coords.emplace_back(v, m);
    CutSet x(std::move(coords));
    std::vector<Rational> vals = evaluate_exact(inst, x);
    for (int i = 0; i < n; ++i)
      if (k[static_cast<size_t>(i)] > 0 && vals[static_cast<size_t>(i)] >= 0) return false;
    found = SannViolation{std::move(x), std::move(vals)};
    return true;
  });
  return found;
}

PermutationSearch find_sann_permutation(const Instance& inst, std::int64_t m) {
  require_additive(inst, "ordering search");
  if (m < 1) throw std::invalid_argument("resolution must be at least 1");
  int n = inst.agents();
  if (n > 8) throw std::invalid_argument("ordering search supports at most 8 agents");

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<size_t>(n));
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  // One pass over the grid; each point rules out every ordering it violates,
  // so each failing ordering keeps its lexicographically first witness.
  std::vector<std::optional<SannViolation>> witness(perms.size());
  size_t alive = perms.size();
  scan_compositions(n, m, [&](const std::vector<std::int64_t>& k) {
    std::vector<Rational> coords;
    coords.reserve(static_cast<size_t>(n));
    for (std::int64_t v : k) coords.emplace_back(v, m);
    CutSet x(std::move(coords));
    auto pieces = cutset_to_allocation(x);
    // value[a][p]: agent a's value of piece p.
    std::vector<std::vector<Rational>> value(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < n; ++p)
        value[static_cast<size_t>(a)].push_back(
            piece_value(inst.density(a), pieces[static_cast<size_t>(p)]));
    for (size_t pi = 0; pi < perms.size(); ++pi) {
      if (witness[pi]) continue;
      bool violated = true;
      std::vector<Rational> vals(static_cast<size_t>(n));
      for (int p = 0; p < n; ++p) {
        const Rational& v = value[static_cast<size_t>(perms[pi][static_cast<size_t>(p)])]
                                 [static_cast<size_t>(p)];
        vals[static_cast<size_t>(p)] = v;
        if (k[static_cast<size_t>(p)] > 0 && v >= 0) {
          violated = false;
          break;
        }
      }
      if (violated) {
        witness[pi] = SannViolation{x, std::move(vals)};
        --alive;
      }
    }
    return alive == 0;
  });

  PermutationSearch out;
  for (size_t pi = 0; pi < perms.size(); ++pi) {
    if (witness[pi])
      out.violations.emplace_back(perms[pi], *witness[pi]);
    else if (!out.permutation)
      out.permutation = perms[pi];
  }
  return out;
}

ClassReport classify(const Instance& inst, std::int64_t falsify_m) {
  require_additive(inst, "classification");
  ClassReport rep;
  rep.identical = is_identical(inst);
  auto vo = is_value_ordered(inst);
  rep.value_ordered = vo.ordered;
  rep.value_order_witness = vo.witness;

  rep.split_cake = true;
  for (int i = 0; i < inst.agents() && rep.split_cake; ++i) {
    std::optional<SplitProfile> p;
    try {
      p = split_profile(inst.density(i));
    } catch (const std::domain_error&) {
      p = std::nullopt;
    }
    if (p) {
      rep.split_profiles.push_back(*p);
    } else {
      rep.split_cake = false;
      rep.split_profiles.clear();
      rep.non_split_agent = i;
    }
  }

  rep.single_peaked = true;
  for (int i = 0; i < inst.agents(); ++i)
    if (!is_single_peaked(inst.density(i))) {
      rep.single_peaked = false;
      break;
    }

  rep.falsifier = sann_falsify(inst, falsify_m);
  return rep;
}

}  // namespace equicake
