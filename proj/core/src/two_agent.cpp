#include "equicake/two_agent.hpp"

#include <cmath>
#include <stdexcept>

namespace equicake {

TwoAgentReport solve_two(const Instance& inst, const TwoAgentOptions& opt) {
  if (inst.agents() != 2)
    throw std::invalid_argument("two-agent solver needs exactly two agents");
  if (!(opt.eps > 0)) throw std::invalid_argument("eps must be positive");
  if (opt.max_iterations < 1) throw std::invalid_argument("need at least one iteration");

  bool exact = inst.additive_exact();
  Rational eps_ex = rational_from_double(opt.eps);

  auto values_at = [&](const Rational& t) -> std::vector<Rational> {
    return evaluate_exact(inst, CutSet({t, 1 - t}));
  };
  auto values_at_f = [&](const Rational& t) -> std::vector<double> {
    return evaluate(inst, CutSet({t, 1 - t}));
  };

  // h(t) = v_0 - v_1; sign decides the bisection branch in either mode.
  struct Point {
    Rational t;
    std::vector<Rational> vex;
    std::vector<double> vfl;
    Rational hex;
    double hfl = 0;
  };
  auto probe = [&](Rational t) {
    Point p;
    p.t = std::move(t);
    if (exact) {
      p.vex = values_at(p.t);
      p.hex = p.vex[0] - p.vex[1];
      p.hfl = to_double(p.hex);
      p.vfl = {to_double(p.vex[0]), to_double(p.vex[1])};
    } else {
      p.vfl = values_at_f(p.t);
      p.hfl = p.vfl[0] - p.vfl[1];
    }
    return p;
  };
  auto within_eps = [&](const Point& p) {
    return exact ? abs(p.hex) <= eps_ex : std::fabs(p.hfl) <= opt.eps;
  };
  auto nonpositive = [&](const Point& p) { return exact ? p.hex <= 0 : p.hfl <= 0; };

  double lip = exact ? 2.0 * to_double(inst.max_abs_density()) : 2.0 * opt.lipschitz_hint;
  int cap = opt.max_iterations;
  if (lip > 0) {
    int predicted =
        static_cast<int>(std::ceil(std::log2(std::max(lip, opt.eps) / opt.eps))) + 8;
    cap = std::min(cap, std::max(predicted, 1));
  }

  Point lo = probe(Rational(0));
  Point hi = probe(Rational(1));
  if (!nonpositive(lo) && !within_eps(lo))
    throw std::domain_error("inconsistent instance: agent 0 outvalues agent 1 at t = 0");
  if (nonpositive(hi) && !within_eps(hi))
    throw std::domain_error("inconsistent instance: agent 1 outvalues agent 0 at t = 1");

  TwoAgentReport rep;
  auto finish = [&](const Point& p, TwoAgentStatus status, int iters) {
    rep.status = status;
    rep.cut = p.t;
    rep.values = p.vfl;
    rep.gap = std::fabs(p.hfl);
    if (exact) {
      rep.values_exact = p.vex;
      rep.gap_exact = abs(p.hex);
    }
    rep.iterations = iters;
    return rep;
  };

  if (within_eps(lo)) return finish(lo, TwoAgentStatus::converged, 0);
  if (within_eps(hi)) return finish(hi, TwoAgentStatus::converged, 0);

  Point best = lo;
  auto closer = [&](const Point& a, const Point& b) {
    return exact ? abs(a.hex) < abs(b.hex) : std::fabs(a.hfl) < std::fabs(b.hfl);
  };
  for (int it = 1; it <= cap; ++it) {
    Point mid = probe((lo.t + hi.t) / 2);
    if (within_eps(mid)) return finish(mid, TwoAgentStatus::converged, it);
    if (closer(mid, best)) best = mid;
    if (nonpositive(mid))
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return finish(best, TwoAgentStatus::budget_exhausted, cap);
}

}  // namespace equicake
