#include "equicake/sperner.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace equicake {

namespace {

template <typename T>
std::vector<int> argmax_set(const std::vector<T>& v) {
  const T* best = &v.front();
  for (const T& t : v)
    if (*best < t) best = &t;
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == *best) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

HappySets happy_sets(const Instance& inst, const CutSet& x) {
  if (x.size() != inst.agents())
    throw std::invalid_argument("cut-set dimension does not match the instance");
  HappySets hs;
  if (inst.additive_exact()) {
    hs.happy = argmax_set(evaluate_exact(inst, x));
  } else {
    hs.happy = argmax_set(evaluate(inst, x));
  }
  Rational longest = 0;
  for (int i : hs.happy)
    if (x[i] > longest) longest = x[i];
  for (int i : hs.happy)
    if (x[i] == longest) hs.happier.push_back(i);
  hs.happiest = hs.happier.front();
  return hs;
}

int label_vertex(const Instance& inst, const CutSet& x) {
  return happy_sets(inst, x).happiest;
}

int LabelCache::label(const CutSet& x) {
  std::string key;
  for (const Rational& c : x.coords()) {
    key += format_rational(c);
    key += ',';
  }
  size_t h = std::hash<std::string>{}(key);
  Shard& shard = shards_[h % kShards];
  {
    std::lock_guard lock(shard.mu);
    if (auto it = shard.map.find(key); it != shard.map.end()) return it->second;
  }
  int lab = label_vertex(*inst_, x);
  std::lock_guard lock(shard.mu);
  shard.map.emplace(std::move(key), lab);
  return lab;
}

std::size_t LabelCache::size() const {
  std::size_t total = 0;
  for (const Shard& s : shards_) {
    std::lock_guard lock(s.mu);
    total += s.map.size();
  }
  return total;
}

std::optional<LabelingViolation> check_sperner(const Instance& inst, std::int64_t m,
                                               LabelCache* cache) {
  if (m < 1) throw std::invalid_argument("resolution must be at least 1");
  int n = inst.agents();
  LabelCache local(inst);
  if (!cache) cache = &local;

  for (int i = 0; i < n; ++i) {
    CutSet corner = CutSet::vertex(n, i);
    int lab = cache->label(corner);
    if (lab != i) return LabelingViolation{corner, lab, i, true};
  }
  if (n == 1) return std::nullopt;

  std::optional<LabelingViolation> first;
  for (int f = 0; f < n && !first; ++f) {
    for_each_grid_vertex(n - 1, m, [&](const GridPoint& g) {
      if (first) return;
      std::vector<std::int64_t> k;
      k.reserve(static_cast<size_t>(n));
      k.insert(k.end(), g.k.begin(), g.k.begin() + f);
      k.push_back(0);
      k.insert(k.end(), g.k.begin() + f, g.k.end());
      CutSet x = GridPoint{std::move(k), m}.to_cutset();
      int lab = cache->label(x);
      if (lab == f) first = LabelingViolation{x, lab, f, false};
    });
  }
  return first;
}

namespace {

std::vector<ElementarySimplex> collect_fully_labeled(const Instance& inst, std::int64_t m,
                                                     LabelCache& cache, int threads) {
  int n = inst.agents();
  std::vector<ElementarySimplex> out;
  auto hit = [&](const ElementarySimplex& s, std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const GridPoint& v : s.vertices()) {
      int lab = cache.label(v.to_cutset());
      if (seen[static_cast<size_t>(lab)]) return false;
      seen[static_cast<size_t>(lab)] = 1;
    }
    return true;
  };

  if (n == 1) {
    for_each_elementary_simplex(n, m, [&](const ElementarySimplex& s) { out.push_back(s); });
    return out;
  }

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (threads > m) threads = static_cast<int>(m);

  if (threads == 1) {
    std::vector<char> seen(static_cast<size_t>(n));
    for_each_elementary_simplex(n, m, [&](const ElementarySimplex& s) {
      if (hit(s, seen)) out.push_back(s);
    });
    return out;
  }

  // Workers claim one first-coordinate slice at a time; per-slice buckets keep
  // the concatenation identical to the serial enumeration order.
  std::vector<std::vector<ElementarySimplex>> buckets(static_cast<size_t>(m));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    std::vector<char> seen(static_cast<size_t>(n));
    for (std::int64_t c0 = next++; c0 < m; c0 = next++) {
      auto& bucket = buckets[static_cast<size_t>(c0)];
      for_each_elementary_simplex_at(n, m, c0, [&](const ElementarySimplex& s) {
        if (hit(s, seen)) bucket.push_back(s);
      });
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& bucket : buckets)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

/// Exact solution of A x = b by Gaussian elimination; nullopt on singular A.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  int d = static_cast<int>(b.size());
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
    std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot)]);
    for (int r = col + 1; r < d; ++r) {
      Rational factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                        a[static_cast<size_t>(col)][static_cast<size_t>(col)];
      if (factor == 0) continue;
      for (int c = col; c < d; ++c)
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            factor * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
      b[static_cast<size_t>(r)] -= factor * b[static_cast<size_t>(col)];
    }
  }
  std::vector<Rational> x(static_cast<size_t>(d));
  for (int r = d - 1; r >= 0; --r) {
    Rational acc = b[static_cast<size_t>(r)];
    for (int c = r + 1; c < d; ++c)
      acc -= a[static_cast<size_t>(r)][static_cast<size_t>(c)] * x[static_cast<size_t>(c)];
    x[static_cast<size_t>(r)] = acc / a[static_cast<size_t>(r)][static_cast<size_t>(r)];
  }
  return x;
}

/// Damped Newton descent on the equity gap, exact throughout. The value map
/// is piecewise affine in the cut positions, so inside one density region a
/// full step equalizes exactly; backtracking handles region crossings.
CutSet polish_additive(const Instance& inst, const CutSet& seed) {
  int n = inst.agents();
  int d = n - 1;
  if (d == 0) return seed;

  std::vector<Rational> y(static_cast<size_t>(d));
  Rational acc = 0;
  for (int i = 0; i < d; ++i) {
    acc += seed[i];
    y[static_cast<size_t>(i)] = acc;
  }

  auto density_at = [&](int agent, const Rational& t) {
    const auto& dns = inst.density(agent);
    return dns.values()[static_cast<size_t>(dns.segment_at(t))];
  };
  auto values_at = [&](const std::vector<Rational>& yv) {
    std::vector<Rational> v(static_cast<size_t>(n));
    Rational left = 0;
    for (int a = 0; a < n; ++a) {
      Rational right = a < d ? yv[static_cast<size_t>(a)] : Rational(1);
      v[static_cast<size_t>(a)] = cdf_eval(inst.density(a), right) - cdf_eval(inst.density(a), left);
      left = right;
    }
    return v;
  };

  std::vector<Rational> vals = values_at(y);
  Rational gap = equity_gap(vals);
  std::vector<Rational> best_y = y;
  Rational best_gap = gap;

  for (int iter = 0; iter < 40 && gap != 0; ++iter) {
    std::vector<std::vector<Rational>> jac(
        static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d), Rational(0)));
    std::vector<Rational> rhs(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      const Rational& yi = y[static_cast<size_t>(i)];
      jac[static_cast<size_t>(i)][static_cast<size_t>(i)] =
          -(density_at(i + 1, yi) + density_at(i, yi));
      if (i + 1 < d)
        jac[static_cast<size_t>(i)][static_cast<size_t>(i) + 1] =
            density_at(i + 1, y[static_cast<size_t>(i) + 1]);
      if (i >= 1)
        jac[static_cast<size_t>(i)][static_cast<size_t>(i) - 1] =
            density_at(i, y[static_cast<size_t>(i) - 1]);
      rhs[static_cast<size_t>(i)] =
          vals[static_cast<size_t>(i)] - vals[static_cast<size_t>(i) + 1];
    }
    auto delta = solve_linear(std::move(jac), std::move(rhs));
    if (!delta) break;

    // Largest step that keeps 0 <= y_0 <= ... <= y_{d-1} <= 1.
    Rational tmax = 1;
    auto cap = [&](const Rational& room, const Rational& rate) {
      if (rate < 0 && room < tmax * -rate) tmax = room / -rate;
    };
    cap(y[0], (*delta)[0]);
    for (int j = 1; j < d; ++j)
      cap(y[static_cast<size_t>(j)] - y[static_cast<size_t>(j) - 1],
          (*delta)[static_cast<size_t>(j)] - (*delta)[static_cast<size_t>(j) - 1]);
    cap(Rational(1) - y[static_cast<size_t>(d) - 1], -(*delta)[static_cast<size_t>(d) - 1]);
    if (tmax == 0) break;

    Rational t = tmax;
    bool moved = false;
    for (int back = 0; back < 60; ++back) {
      std::vector<Rational> ytry = y;
      for (int j = 0; j < d; ++j) ytry[static_cast<size_t>(j)] += t * (*delta)[static_cast<size_t>(j)];
      std::vector<Rational> vtry = values_at(ytry);
      Rational gtry = equity_gap(vtry);
      if (gtry < gap) {
        y = std::move(ytry);
        vals = std::move(vtry);
        gap = std::move(gtry);
        moved = true;
        break;
      }
      t /= 2;
    }
    if (!moved) break;
    if (gap < best_gap) {
      best_gap = gap;
      best_y = y;
    }
  }

  std::vector<Rational> coords(static_cast<size_t>(n));
  Rational left = 0;
  for (int a = 0; a < n; ++a) {
    Rational right = a < d ? best_y[static_cast<size_t>(a)] : Rational(1);
    coords[static_cast<size_t>(a)] = right - left;
    left = right;
  }
  return CutSet(std::move(coords));
}

struct Candidate {
  CutSet x;
  std::vector<Rational> vex;
  std::vector<double> vfl;
  Rational gex;
  double gfl = 0;
};

Candidate make_candidate(const Instance& inst, CutSet x) {
  Candidate c{std::move(x), {}, {}, Rational(0)};
  if (inst.additive_exact()) {
    c.vex = evaluate_exact(inst, c.x);
    c.gex = equity_gap(c.vex);
    c.gfl = to_double(c.gex);
    c.vfl.reserve(c.vex.size());
    for (const Rational& v : c.vex) c.vfl.push_back(to_double(v));
  } else {
    c.vfl = evaluate(inst, c.x);
    c.gfl = equity_gap(c.vfl);
  }
  return c;
}

bool better(const Candidate& a, const Candidate& b, bool exact) {
  if (exact) {
    if (a.gex != b.gex) return a.gex < b.gex;
  } else {
    if (a.gfl != b.gfl) return a.gfl < b.gfl;
  }
  return a.x < b.x;
}

void finalize(SolveReport& rep, Candidate best, bool exact) {
  rep.best = std::move(best.x);
  rep.values = std::move(best.vfl);
  rep.gap = best.gfl;
  if (exact) {
    rep.values_exact = std::move(best.vex);
    rep.gap_exact = std::move(best.gex);
  }
}

}  // namespace

std::vector<ElementarySimplex> fully_labeled(const Instance& inst, std::int64_t m,
                                             LabelCache* cache) {
  if (m < 1) throw std::invalid_argument("resolution must be at least 1");
  LabelCache local(inst);
  return collect_fully_labeled(inst, m, cache ? *cache : local, 1);
}

SolveReport solve(const Instance& inst, const SolveOptions& opt) {
  if (!(opt.eps > 0)) throw std::invalid_argument("eps must be positive");
  if (opt.m0 < 1 || opt.mmax < opt.m0)
    throw std::invalid_argument("resolution schedule needs 1 <= m0 <= mmax");
  if (opt.mmax > (std::int64_t{1} << 40))
    throw std::invalid_argument("mmax is unreasonably large");

  bool exact = inst.additive_exact();
  Rational eps_ex = rational_from_double(opt.eps);
  LabelCache cache(inst);

  SolveReport rep;
  Candidate best = make_candidate(inst, CutSet::uniform(inst.agents()));
  auto consider = [&](Candidate c) {
    if (better(c, best, exact)) best = std::move(c);
  };

  for (std::int64_t m = opt.m0; m <= opt.mmax; m *= 2) {
    rep.resolution_reached = m;
    if (auto viol = check_sperner(inst, m, &cache)) {
      rep.status = SolveStatus::labeling_violation;
      rep.violation = std::move(viol);
      finalize(rep, std::move(best), exact);
      return rep;
    }

    auto cells = collect_fully_labeled(inst, m, cache, opt.threads);
    ResolutionStats st{m, static_cast<std::int64_t>(cells.size()),
                       std::numeric_limits<double>::infinity()};
    for (const ElementarySimplex& cell : cells) {
      CutSet bary = cell.barycenter();
      Candidate cb = make_candidate(inst, std::move(bary));
      if (cb.gfl < st.min_barycenter_gap) st.min_barycenter_gap = cb.gfl;
      if (exact && opt.polish)
        consider(make_candidate(inst, polish_additive(inst, cb.x)));
      consider(std::move(cb));
    }
    rep.per_resolution.push_back(st);

    if (exact ? best.gex <= eps_ex : best.gfl <= opt.eps) {
      rep.status = SolveStatus::converged;
      finalize(rep, std::move(best), exact);
      return rep;
    }
  }
  rep.status = SolveStatus::budget_exhausted;
  finalize(rep, std::move(best), exact);
  return rep;
}

SolveReport solve_sanp(const Instance& inst, const SolveOptions& opt) {
  if (!inst.additive_exact())
    throw std::logic_error("nonpositive mode requires an additive-exact instance");
  SolveReport rep = solve(negate(inst), opt);
  std::vector<Rational> vex = evaluate_exact(inst, rep.best);
  rep.gap_exact = equity_gap(vex);
  rep.gap = to_double(*rep.gap_exact);
  rep.values.clear();
  for (const Rational& v : vex) rep.values.push_back(to_double(v));
  rep.values_exact = std::move(vex);
  return rep;
}

}  // namespace equicake
