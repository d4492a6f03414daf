#include <doctest.h>

#include <stdexcept>

#include "equicake/valuation.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

using namespace equicake;
using namespace equicake::testing;

TEST_CASE("interval and cut-set validation") {
  CHECK_THROWS_AS(Interval(rat("1/2"), rat("1/4")), std::invalid_argument);
  CHECK_THROWS_AS(Interval(rat("-1/4"), rat("1/2")), std::invalid_argument);
  CHECK_THROWS_AS(Interval(rat("0"), rat("3/2")), std::invalid_argument);
  CHECK_NOTHROW(Interval(rat("1/3"), rat("1/3")));

  CHECK_THROWS_AS(CutSet({}), std::invalid_argument);
  CHECK_THROWS_AS(cut({"1/2", "1/4"}), std::invalid_argument);
  CHECK_THROWS_AS(cut({"3/2", "-1/2"}), std::invalid_argument);
  CHECK(CutSet::uniform(3) == cut({"1/3", "1/3", "1/3"}));
  CHECK(CutSet::vertex(3, 1) == cut({"0", "1", "0"}));
}

TEST_CASE("density validation") {
  CHECK_THROWS_AS(PiecewiseConstantDensity(rats({"0"}), {}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseConstantDensity(rats({"0", "1"}), rats({"1", "2"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseConstantDensity(rats({"1/4", "1"}), rats({"1"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseConstantDensity(rats({"0", "3/4"}), rats({"1"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseConstantDensity(rats({"0", "1/2", "1/2", "1"}), rats({"1", "2", "3"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseConstantDensity(rats({"0", "2/3", "1/3", "1"}), rats({"1", "2", "3"})),
                  std::invalid_argument);
}

TEST_CASE("segment lookup and simplification") {
  auto d = dens({"0", "1/4", "1/2", "1"}, {"1", "1", "2"});
  CHECK(d.segment_at(rat("0")) == 0);
  CHECK(d.segment_at(rat("1/4")) == 1);
  CHECK(d.segment_at(rat("3/8")) == 1);
  CHECK(d.segment_at(rat("1/2")) == 2);
  CHECK(d.segment_at(rat("1")) == 2);
  CHECK(d.simplified() == dens({"0", "1/2", "1"}, {"1", "2"}));
  CHECK(dens({"0", "1"}, {"1"}).simplified() == dens({"0", "1"}, {"1"}));
}

TEST_CASE("cdf values on the bundled instances") {
  Instance e1 = example1();
  CHECK(cdf_eval(e1.density(0), rat("1/5")) == rat("1/2"));
  CHECK(cdf_eval(e1.density(0), rat("0")) == 0);
  CHECK(cdf_eval(e1.density(1), rat("1/5")) == rat("1/6"));
  CHECK(cdf_eval(e1.density(1), rat("3/5")) == rat("2/3"));
  CHECK(cdf_eval(e1.density(1), rat("1")) == 1);
  CHECK(cdf_eval(e1.density(2), rat("3/5")) == rat("1/2"));
  CHECK(cdf_eval(e1.density(2), rat("1")) == 1);

  Instance e3 = example3();
  CHECK(cdf_eval(e3.density(0), rat("1/5")) == 2);
  CHECK(cdf_eval(e3.density(0), rat("1/10")) == -1);
  CHECK(cdf_eval(e3.density(1), rat("1/5")) == -1);
  CHECK(cdf_eval(e3.density(2), rat("1/5")) == rat("-1/2"));
  CHECK(cdf_eval(e3.density(0), rat("1")) == 1);
  CHECK(cdf_eval(e3.density(1), rat("1")) == 1);
  CHECK(cdf_eval(e3.density(2), rat("1")) == 1);

  CHECK_THROWS_AS(cdf_eval(e1.density(0), rat("3/2")), std::domain_error);
}

TEST_CASE("piece values") {
  Instance e1 = example1();
  CHECK(piece_value(e1.density(1), Interval(rat("1/5"), rat("3/5"))) == rat("1/2"));
  CHECK(piece_value(e1.density(0), Interval(rat("1/3"), rat("1/3"))) == 0);
  Instance e3 = example3();
  CHECK(piece_value(e3.density(2), Interval(rat("93/230"), rat("1"))) == rat("45/23"));
}

TEST_CASE("piece values add over abutting intervals") {
  Rng rng(seeds::property);
  auto d = random_density(rng, 5, -16, 16);
  std::uniform_int_distribution<int> dt(0, 48);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> ts = {Rational(dt(rng), 48), Rational(dt(rng), 48),
                                Rational(dt(rng), 48)};
    std::sort(ts.begin(), ts.end());
    CHECK(piece_value(d, Interval(ts[0], ts[2])) ==
          piece_value(d, Interval(ts[0], ts[1])) + piece_value(d, Interval(ts[1], ts[2])));
  }
}

TEST_CASE("cut-sets tile the cake in order") {
  auto pieces = cutset_to_allocation(cut({"1/5", "2/5", "2/5"}));
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[0].left == 0);
  CHECK(pieces[0].right == rat("1/5"));
  CHECK(pieces[1].left == rat("1/5"));
  CHECK(pieces[1].right == rat("3/5"));
  CHECK(pieces[2].left == rat("3/5"));
  CHECK(pieces[2].right == 1);

  auto corner = cutset_to_allocation(CutSet::vertex(3, 0));
  CHECK(corner[0].right == 1);
  CHECK(corner[1].left == 1);
  CHECK(corner[2].right == 1);

  auto prefix = cutset_to_allocation(cut({"48/230", "45/230", "137/230"}));
  CHECK(prefix[1].left == rat("48/230"));
  CHECK(prefix[1].right == rat("93/230"));
  CHECK(prefix[2].left == rat("93/230"));
}

TEST_CASE("evaluation on the bundled instances") {
  CHECK(evaluate_exact(example1(), cut({"1/5", "2/5", "2/5"})) ==
        rats({"1/2", "1/2", "1/2"}));
  CHECK(evaluate_exact(example2_permuted(), cut({"1/5", "3/5", "1/5"})) ==
        rats({"3/5", "3/5", "3/5"}));
  CHECK(evaluate_exact(example3(), cut({"4/5", "1/5", "0"})) == rats({"-1", "-1", "0"}));
  CHECK(evaluate_exact(example3(), cut({"48/230", "45/230", "137/230"})) ==
        rats({"45/23", "45/23", "45/23"}));
}

TEST_CASE("zero-length pieces have zero value") {
  Rng rng(seeds::property);
  Instance inst = Instance::additive({random_density(rng, 4, -16, 16),
                                      random_density(rng, 4, -16, 16),
                                      random_density(rng, 4, -16, 16)});
  for (int i = 0; i < 3; ++i) {
    std::vector<Rational> coords(3, Rational(0));
    coords[static_cast<size_t>(i)] = 1;
    auto vals = evaluate_exact(inst, CutSet(coords));
    for (int j = 0; j < 3; ++j)
      if (j != i) CHECK(vals[static_cast<size_t>(j)] == 0);
  }
}

TEST_CASE("negation flips every value") {
  Instance e1 = example1();
  CHECK(evaluate_exact(negate(e1), cut({"1/5", "2/5", "2/5"})) ==
        rats({"-1/2", "-1/2", "-1/2"}));
  Rng rng(seeds::property);
  for (int trial = 0; trial < 20; ++trial) {
    CutSet x = random_cutset(rng, 3);
    auto v = evaluate_exact(e1, x);
    auto nv = evaluate_exact(negate(negate(e1)), x);
    CHECK(v == nv);
    auto neg = evaluate_exact(negate(e1), x);
    for (size_t i = 0; i < v.size(); ++i) CHECK(neg[i] == -v[i]);
  }
}

TEST_CASE("permutation reorders valuations and round-trips") {
  Instance e2 = example2();
  Instance perm = permute(e2, {2, 1, 0});
  CHECK(perm.density(0) == example2_permuted().density(0));
  CHECK(perm.density(1) == example2_permuted().density(1));
  CHECK(perm.density(2) == example2_permuted().density(2));

  CHECK_THROWS_AS(permute(e2, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(permute(e2, {0, 1}), std::invalid_argument);

  Rng rng(seeds::property);
  std::vector<int> p = {1, 2, 0};
  std::vector<int> pinv = {2, 0, 1};  // pinv[p[i]] = i
  Instance round = permute(permute(e2, p), pinv);
  for (int trial = 0; trial < 100; ++trial) {
    CutSet x = random_cutset(rng, 3);
    CHECK(evaluate_exact(round, x) == evaluate_exact(e2, x));
  }
}

TEST_CASE("equity gap") {
  CHECK(equity_gap(rats({"1/2", "1/2", "1/2"})) == 0);
  CHECK(equity_gap(rats({"-1", "-1", "0"})) == 1);
  CHECK(equity_gap(rats({"7"})) == 0);
  CHECK(equity_gap(std::vector<double>{1.0, -0.5}) == 1.5);
  CHECK_THROWS_AS(equity_gap(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("instance construction rules") {
  CHECK_THROWS_AS(Instance::additive({}), std::invalid_argument);
  Instance e1 = example1();
  CHECK(e1.agents() == 3);
  CHECK(e1.additive_exact());
  CHECK(e1.max_abs_density() == rat("5/2"));
  CHECK(example3().max_abs_density() == 30);
  CHECK_THROWS_AS(evaluate_exact(e1, CutSet::uniform(2)), std::invalid_argument);
}

TEST_CASE("global instances spot-check the empty-piece rule") {
  auto good = [](const std::vector<double>& x) {
    std::vector<double> v;
    for (double xi : x) v.push_back(2.0 * xi);
    return v;
  };
  Instance g = Instance::global(3, good);
  CHECK_FALSE(g.additive_exact());
  auto vals = evaluate(g, cut({"1/4", "1/4", "1/2"}));
  CHECK(vals[2] == doctest::Approx(1.0));
  CHECK_THROWS_AS(g.density(0), std::logic_error);
  CHECK_THROWS_AS(negate(g), std::logic_error);

  auto bad = [](const std::vector<double>& x) {
    return std::vector<double>(x.size(), 1.0);  // nonzero even on empty pieces
  };
  CHECK_THROWS_AS(Instance::global(3, bad), std::invalid_argument);
}
