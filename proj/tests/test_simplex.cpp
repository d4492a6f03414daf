#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "equicake/simplex.hpp"
#include "support/corpus.hpp"

using namespace equicake;
using namespace equicake::testing;

namespace {

/// Vertex coordinates as lattice prefix sums (the last, always m, dropped).
std::vector<std::int64_t> prefix_coords(const GridPoint& g) {
  std::vector<std::int64_t> y;
  std::int64_t acc = 0;
  for (size_t i = 0; i + 1 < g.k.size(); ++i) {
    acc += g.k[i];
    y.push_back(acc);
  }
  return y;
}

std::int64_t det_small(std::vector<std::vector<std::int64_t>> a) {
  size_t d = a.size();
  if (d == 0) return 1;
  if (d == 1) return a[0][0];
  if (d == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  std::int64_t s = 0;
  for (size_t c = 0; c < d; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (size_t r = 1; r < d; ++r) {
      std::vector<std::int64_t> row;
      for (size_t cc = 0; cc < d; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      minor.push_back(std::move(row));
    }
    std::int64_t term = a[0][c] * det_small(minor);
    s += (c % 2 == 0) ? term : -term;
  }
  return s;
}

std::int64_t cell_lattice_det(const ElementarySimplex& s) {
  auto vs = s.vertices();
  auto y0 = prefix_coords(vs[0]);
  std::vector<std::vector<std::int64_t>> e;
  for (size_t j = 1; j < vs.size(); ++j) {
    auto yj = prefix_coords(vs[j]);
    std::vector<std::int64_t> row;
    for (size_t i = 0; i < yj.size(); ++i) row.push_back(yj[i] - y0[i]);
    e.push_back(std::move(row));
  }
  return det_small(std::move(e));
}

}  // namespace

TEST_CASE("grid vertex and cell counts") {
  CHECK(grid_vertex_count(3, 10) == 66);
  CHECK(grid_vertex_count(2, 4) == 5);
  CHECK(grid_vertex_count(4, 8) == 165);
  CHECK(grid_vertex_count(1, 7) == 1);
  CHECK(elementary_simplex_count(3, 2) == 4);
  CHECK(elementary_simplex_count(4, 8) == 512);
  CHECK(elementary_simplex_count(1, 5) == 1);
  CHECK(elementary_simplex_count(2, 1024) == 1024);
  CHECK_THROWS_AS(grid_vertex_count(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(elementary_simplex_count(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(elementary_simplex_count(10, 1000000), std::overflow_error);
}

TEST_CASE("grid vertices are the ascending compositions") {
  for (int n : {1, 2, 3, 4})
    for (std::int64_t m : {1, 3, 6}) {
      auto vs = grid_vertices(n, m);
      CHECK(static_cast<std::int64_t>(vs.size()) == grid_vertex_count(n, m));
      for (size_t i = 0; i < vs.size(); ++i) {
        std::int64_t sum = 0;
        for (std::int64_t k : vs[i].k) {
          CHECK(k >= 0);
          sum += k;
        }
        CHECK(sum == m);
        if (i > 0) CHECK(vs[i - 1] < vs[i]);
      }
    }
}

TEST_CASE("cell enumeration count, validity, and unimodular volume") {
  for (int n : {2, 3, 4})
    for (std::int64_t m : {1, 2, 4, 8}) {
      std::int64_t count = 0, abs_det_sum = 0;
      for_each_elementary_simplex(n, m, [&](const ElementarySimplex& s) {
        ++count;
        auto vs = s.vertices();
        REQUIRE(static_cast<int>(vs.size()) == n);
        for (const GridPoint& v : vs) {
          std::int64_t sum = 0;
          for (std::int64_t k : v.k) {
            CHECK(k >= 0);
            sum += k;
          }
          CHECK(sum == m);
        }
        std::int64_t det = cell_lattice_det(s);
        CHECK(std::abs(det) == 1);
        abs_det_sum += std::abs(det);
      });
      CHECK(count == elementary_simplex_count(n, m));
      // Each cell fills 1/(d! m^d) of the simplex: the |det| sum being m^d is
      // the exact statement that the cells' volumes add up to the whole.
      CHECK(abs_det_sum == elementary_simplex_count(n, m));
    }
}

TEST_CASE("cell vertices cover exactly the grid") {
  for (int n : {2, 3, 4})
    for (std::int64_t m : {1, 2, 5}) {
      std::set<std::vector<std::int64_t>> seen;
      for_each_elementary_simplex(n, m, [&](const ElementarySimplex& s) {
        for (const GridPoint& v : s.vertices()) seen.insert(v.k);
      });
      std::set<std::vector<std::int64_t>> grid;
      for (const GridPoint& v : grid_vertices(n, m)) grid.insert(v.k);
      CHECK(seen == grid);
    }
}

TEST_CASE("interior facets are shared by two cells, boundary facets by one") {
  for (int n : {2, 3, 4})
    for (std::int64_t m = 1; m <= 6; ++m) {
      if (n == 4 && m > 3) continue;
      std::map<std::set<std::vector<std::int64_t>>, int> facet_count;
      for_each_elementary_simplex(n, m, [&](const ElementarySimplex& s) {
        auto vs = s.vertices();
        for (size_t drop = 0; drop < vs.size(); ++drop) {
          std::set<std::vector<std::int64_t>> facet;
          for (size_t j = 0; j < vs.size(); ++j)
            if (j != drop) facet.insert(vs[j].k);
          ++facet_count[facet];
        }
      });
      for (const auto& [facet, count] : facet_count) {
        bool boundary = false;
        for (int i = 0; i < n && !boundary; ++i) {
          bool all_zero = true;
          for (const auto& k : facet) all_zero = all_zero && k[static_cast<size_t>(i)] == 0;
          boundary = all_zero;
        }
        CHECK(count == (boundary ? 1 : 2));
      }
    }
}

TEST_CASE("diameters meet the vanishing bound") {
  for (int n : {2, 3, 4})
    for (std::int64_t m : {1, 2, 4, 8}) {
      double bound = std::sqrt(2.0) * (n - 1) / static_cast<double>(m);
      for_each_elementary_simplex(n, m, [&](const ElementarySimplex& s) {
        CHECK(s.diameter() <= bound + 1e-12);
      });
    }
  for (const ElementarySimplex& s : elementary_simplices(2, 4))
    CHECK(s.diameter() == doctest::Approx(std::sqrt(2.0) / 4));
}

TEST_CASE("known barycenters") {
  auto one_cell = elementary_simplices(3, 1);
  REQUIRE(one_cell.size() == 1);
  CHECK(one_cell[0].barycenter() == CutSet::uniform(3));

  auto halves = elementary_simplices(2, 2);
  REQUIRE(halves.size() == 2);
  CHECK(halves[0].barycenter() == cut({"1/4", "3/4"}));
  CHECK(halves[1].barycenter() == cut({"3/4", "1/4"}));
}

TEST_CASE("grids nest under doubling") {
  for (int n : {2, 3, 4})
    for (std::int64_t m : {2, 4}) {
      std::set<std::vector<std::int64_t>> fine;
      for (const GridPoint& v : grid_vertices(n, 2 * m)) fine.insert(v.k);
      for (const GridPoint& v : grid_vertices(n, m)) {
        std::vector<std::int64_t> scaled;
        for (std::int64_t k : v.k) scaled.push_back(2 * k);
        CHECK(fine.count(scaled) == 1);
      }
    }
}

TEST_CASE("single-agent subdivision is the whole cake") {
  auto cells = elementary_simplices(1, 5);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].dim() == 0);
  CHECK(cells[0].diameter() == 0);
  CHECK(cells[0].barycenter() == CutSet::vertex(1, 0));
  CHECK(cells[0].vertices().size() == 1);
}

TEST_CASE("slice enumeration concatenates to the full enumeration") {
  for (int n : {2, 3})
    for (std::int64_t m : {3, 5}) {
      std::vector<ElementarySimplex> full = elementary_simplices(n, m);
      std::vector<ElementarySimplex> sliced;
      for (std::int64_t first = 0; first < m; ++first)
        for_each_elementary_simplex_at(n, m, first,
                                       [&](const ElementarySimplex& s) { sliced.push_back(s); });
      REQUIRE(full.size() == sliced.size());
      for (size_t i = 0; i < full.size(); ++i) CHECK(full[i] == sliced[i]);
    }
}

TEST_CASE("grid point to cut-set conversion reduces exactly") {
  GridPoint g{{2, 4, 4}, 10};
  CHECK(g.to_cutset() == cut({"1/5", "2/5", "2/5"}));
}
