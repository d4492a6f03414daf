#include "equicake/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace equicake {

namespace {

std::int64_t checked_to_int64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error(std::string(what) + " does not fit a 64-bit count");
  return v.convert_to<std::int64_t>();
}

}  // namespace

std::int64_t grid_vertex_count(int n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
  BigInt num = 1, den = 1;
  for (int i = 1; i < n; ++i) {
    num *= m + i;
    den *= i;
  }
  return checked_to_int64(num / den, "grid vertex count");
}

std::int64_t elementary_simplex_count(int n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
  BigInt c = 1;
  for (int i = 1; i < n; ++i) c *= m;
  return checked_to_int64(c, "cell count");
}

std::vector<GridPoint> grid_vertices(int n, std::int64_t m) {
  std::vector<GridPoint> out;
  out.reserve(static_cast<size_t>(grid_vertex_count(n, m)));
  for_each_grid_vertex(n, m, [&](const GridPoint& g) { out.push_back(g); });
  return out;
}

std::vector<ElementarySimplex> elementary_simplices(int n, std::int64_t m) {
  std::vector<ElementarySimplex> out;
  out.reserve(static_cast<size_t>(elementary_simplex_count(n, m)));
  for_each_elementary_simplex(n, m, [&](const ElementarySimplex& s) { out.push_back(s); });
  return out;
}

}  // namespace equicake
