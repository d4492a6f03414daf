#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "equicake/valuation.hpp"

namespace equicake {

/// Grid vertex k/m of the standard simplex: nonnegative integers summing to m.
struct GridPoint {
  std::vector<std::int64_t> k;
  std::int64_t m = 1;

  CutSet to_cutset() const {
    std::vector<Rational> c;
    c.reserve(k.size());
    for (std::int64_t v : k) c.emplace_back(v, m);
    return CutSet(std::move(c));
  }

  friend bool operator==(const GridPoint& a, const GridPoint& b) {
    return a.m == b.m && a.k == b.k;
  }
  friend bool operator<(const GridPoint& a, const GridPoint& b) { return a.k < b.k; }
};

/// C(m+n-1, n-1); throws if the count does not fit an int64.
std::int64_t grid_vertex_count(int n, std::int64_t m);

/// m^(n-1); throws if the count does not fit an int64.
std::int64_t elementary_simplex_count(int n, std::int64_t m);

/// Cell of the edgewise (Kuhn) subdivision at resolution m. A cell is the
/// base grid vertex plus one unit step per cut, taken in step_order: step on
/// cut c moves k_c up and k_{c+1} down, so the n vertices walk n-1 steps.
class ElementarySimplex {
 public:
  ElementarySimplex(GridPoint base, std::vector<int> step_order)
      : base_(std::move(base)), order_(std::move(step_order)) {}

  const GridPoint& base() const { return base_; }
  const std::vector<int>& step_order() const { return order_; }
  std::int64_t resolution() const { return base_.m; }
  int dim() const { return static_cast<int>(order_.size()); }

  std::vector<GridPoint> vertices() const {
    std::vector<GridPoint> vs{base_};
    GridPoint cur = base_;
    for (int c : order_) {
      ++cur.k[static_cast<size_t>(c)];
      --cur.k[static_cast<size_t>(c) + 1];
      vs.push_back(cur);
    }
    return vs;
  }

  std::vector<CutSet> vertex_cutsets() const {
    std::vector<CutSet> out;
    auto vs = vertices();
    out.reserve(vs.size());
    for (const GridPoint& v : vs) out.push_back(v.to_cutset());
    return out;
  }

  /// Largest pairwise vertex distance; at most sqrt(2)*(n-1)/m.
  double diameter() const {
    auto vs = vertices();
    std::int64_t best = 0;
    for (size_t a = 0; a < vs.size(); ++a)
      for (size_t b = a + 1; b < vs.size(); ++b) {
        std::int64_t s = 0;
        for (size_t i = 0; i < vs[a].k.size(); ++i) {
          std::int64_t d = vs[a].k[i] - vs[b].k[i];
          s += d * d;
        }
        if (s > best) best = s;
      }
    return std::sqrt(static_cast<double>(best)) / static_cast<double>(base_.m);
  }

  CutSet barycenter() const {
    auto vs = vertices();
    int n = static_cast<int>(base_.k.size());
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    for (const GridPoint& v : vs)
      for (size_t i = 0; i < v.k.size(); ++i) c[i] += Rational(v.k[i], base_.m);
    for (Rational& r : c) r /= n;
    return CutSet(std::move(c));
  }

  friend bool operator==(const ElementarySimplex& a, const ElementarySimplex& b) {
    return a.base_ == b.base_ && a.order_ == b.order_;
  }

 private:
  GridPoint base_;
  std::vector<int> order_;
};

namespace detail {

/// Nonnegative int64 vectors of the given length summing to total, in
/// lexicographically ascending order.
template <typename F>
void for_each_composition(int parts, std::int64_t total, F&& f) {
  std::vector<std::int64_t> k(static_cast<size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos + 1 == parts) {
      k[static_cast<size_t>(pos)] = left;
      f(std::as_const(k));
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      k[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (parts == 0) return;
  rec(rec, 0, total);
}

/// Valid step orders for a base corner: within every maximal block of equal
/// corner coordinates, later cuts must step before earlier ones (otherwise an
/// intermediate vertex would leave the simplex). Interleavings across blocks
/// are free; emitted in lexicographic order.
template <typename F>
void for_each_step_order(const std::vector<std::int64_t>& corner, F&& f) {
  int d = static_cast<int>(corner.size());
  std::vector<std::pair<int, int>> blocks;  // [first, last] cut index per block
  for (int i = 0; i < d;) {
    int j = i;
    while (j + 1 < d && corner[static_cast<size_t>(j) + 1] == corner[static_cast<size_t>(i)]) ++j;
    blocks.emplace_back(i, j);
    i = j + 1;
  }
  std::vector<int> next;  // next cut each block emits (walks downward)
  next.reserve(blocks.size());
  for (auto& b : blocks) next.push_back(b.second);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(d));
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(order.size()) == d) {
      f(std::as_const(order));
      return;
    }
    // Candidates are distinct, and trying blocks by ascending next-cut value
    // yields lexicographic order on the emitted sequence.
    std::vector<size_t> cand;
    for (size_t b = 0; b < blocks.size(); ++b)
      if (next[b] >= blocks[b].first) cand.push_back(b);
    std::sort(cand.begin(), cand.end(),
              [&](size_t a, size_t b) { return next[a] < next[b]; });
    for (size_t b : cand) {
      order.push_back(next[b]);
      --next[b];
      self(self);
      ++next[b];
      order.pop_back();
    }
  };
  rec(rec);
}

template <typename F>
void cells_for_corner(int n, std::int64_t m, const std::vector<std::int64_t>& corner, F&& f) {
  int d = n - 1;
  GridPoint base;
  base.m = m;
  base.k.resize(static_cast<size_t>(n));
  base.k[0] = d > 0 ? corner[0] : m;
  for (int i = 1; i < d; ++i)
    base.k[static_cast<size_t>(i)] = corner[static_cast<size_t>(i)] - corner[static_cast<size_t>(i) - 1];
  if (d > 0) base.k[static_cast<size_t>(d)] = m - corner[static_cast<size_t>(d) - 1];
  for_each_step_order(corner, [&](const std::vector<int>& order) {
    f(ElementarySimplex(base, order));
  });
}

/// Nondecreasing corner vectors in {0..m-1}^d with a fixed first entry.
template <typename F>
void for_each_corner_from(int d, std::int64_t m, std::int64_t first, F&& f) {
  std::vector<std::int64_t> c(static_cast<size_t>(d));
  auto rec = [&](auto&& self, int pos, std::int64_t floor_val) -> void {
    if (pos == d) {
      f(std::as_const(c));
      return;
    }
    for (std::int64_t v = floor_val; v < m; ++v) {
      c[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  c[0] = first;
  rec(rec, 1, first);
}

}  // namespace detail

/// Grid vertices of the standard simplex in lexicographic order.
template <typename F>
void for_each_grid_vertex(int n, std::int64_t m, F&& f) {
  detail::for_each_composition(n, m, [&](const std::vector<std::int64_t>& k) {
    f(GridPoint{k, m});
  });
}

std::vector<GridPoint> grid_vertices(int n, std::int64_t m);

/// All cells of the subdivision, in a fixed deterministic order.
template <typename F>
void for_each_elementary_simplex(int n, std::int64_t m, F&& f) {
  if (n == 1) {
    GridPoint base;
    base.m = m;
    base.k = {m};
    f(ElementarySimplex(base, {}));
    return;
  }
  for (std::int64_t first = 0; first < m; ++first)
    detail::for_each_corner_from(n - 1, m, first, [&](const std::vector<std::int64_t>& c) {
      detail::cells_for_corner(n, m, c, f);
    });
}

/// Cells whose base corner has the given first coordinate; the slices over
/// first = 0..m-1 partition all cells (n >= 2).
template <typename F>
void for_each_elementary_simplex_at(int n, std::int64_t m, std::int64_t first, F&& f) {
  detail::for_each_corner_from(n - 1, m, first, [&](const std::vector<std::int64_t>& c) {
    detail::cells_for_corner(n, m, c, f);
  });
}

std::vector<ElementarySimplex> elementary_simplices(int n, std::int64_t m);

}  // namespace equicake
