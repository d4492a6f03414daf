#include "equicake/report_io.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace equicake {

namespace {

using nlohmann::json;

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(format_rational(r));
  return a;
}

json doubles(const std::vector<double>& v) {
  json a = json::array();
  for (double d : v) a.push_back(d);
  return a;
}

json cutset(const CutSet& x) { return rationals(x.coords()); }

json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

json violation_json(const LabelingViolation& v) {
  return {{"vertex", cutset(v.vertex)},
          {"vertex_decimal", doubles(v.vertex.to_doubles())},
          {"label", v.label},
          {"index", v.index},
          {"at_corner", v.at_corner}};
}

json sann_violation_json(const SannViolation& v) {
  return {{"x", cutset(v.x)},
          {"x_decimal", doubles(v.x.to_doubles())},
          {"values", rationals(v.values)}};
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::budget_exhausted: return "budget-exhausted";
    case SolveStatus::labeling_violation: return "labeling-violation";
  }
  return "unknown";
}

}  // namespace

std::string solve_report_to_json(const SolveReport& rep) {
  json j;
  j["status"] = status_name(rep.status);
  j["best"] = cutset(rep.best);
  j["best_decimal"] = doubles(rep.best.to_doubles());
  j["values"] = doubles(rep.values);
  j["values_exact"] = rep.values_exact ? rationals(*rep.values_exact) : json(nullptr);
  j["gap"] = rep.gap;
  j["gap_exact"] = rep.gap_exact ? json(format_rational(*rep.gap_exact)) : json(nullptr);
  j["resolution_reached"] = rep.resolution_reached;
  json stats = json::array();
  for (const ResolutionStats& st : rep.per_resolution)
    stats.push_back({{"m", st.m},
                     {"fully_labeled_cells", st.fully_labeled_cells},
                     {"min_barycenter_gap", finite_or_null(st.min_barycenter_gap)}});
  j["per_resolution"] = std::move(stats);
  j["violation"] = rep.violation ? violation_json(*rep.violation) : json(nullptr);
  return j.dump(2);
}

std::string two_agent_report_to_json(const TwoAgentReport& rep) {
  json j;
  j["status"] = rep.status == TwoAgentStatus::converged ? "converged" : "budget-exhausted";
  j["cut"] = format_rational(rep.cut);
  j["cut_decimal"] = to_double(rep.cut);
  j["values"] = doubles(rep.values);
  j["values_exact"] = rep.values_exact ? rationals(*rep.values_exact) : json(nullptr);
  j["gap"] = rep.gap;
  j["gap_exact"] = rep.gap_exact ? json(format_rational(*rep.gap_exact)) : json(nullptr);
  j["iterations"] = rep.iterations;
  return j.dump(2);
}

std::string class_report_to_json(const ClassReport& rep) {
  json j;
  j["identical"] = rep.identical;
  j["value_ordered"] = rep.value_ordered;
  j["value_order_witness"] =
      rep.value_order_witness
          ? json{{"agent", rep.value_order_witness->agent},
                 {"t", format_rational(rep.value_order_witness->t)}}
          : json(nullptr);
  j["split_cake"] = rep.split_cake;
  json profiles = json::array();
  for (const SplitProfile& p : rep.split_profiles)
    profiles.push_back({{"l", format_rational(p.l)},
                        {"r", format_rational(p.r)},
                        {"theta", format_rational(p.theta)}});
  j["split_profiles"] = std::move(profiles);
  j["non_split_agent"] = rep.non_split_agent ? json(*rep.non_split_agent) : json(nullptr);
  j["single_peaked"] = rep.single_peaked;
  j["falsifier"] = rep.falsifier ? sann_violation_json(*rep.falsifier) : json(nullptr);
  return j.dump(2);
}

std::string permutation_search_to_json(const PermutationSearch& res) {
  json j;
  j["permutation"] = res.permutation ? json(*res.permutation) : json(nullptr);
  json vs = json::array();
  for (const auto& [perm, viol] : res.violations) {
    json entry = sann_violation_json(viol);
    entry["permutation"] = perm;
    vs.push_back(std::move(entry));
  }
  j["violations"] = std::move(vs);
  return j.dump(2);
}

std::string verify_result_to_json(const VerifyResult& res) {
  json j;
  j["pass"] = res.pass;
  j["values"] = doubles(res.values);
  j["values_exact"] = res.values_exact ? rationals(*res.values_exact) : json(nullptr);
  j["gap"] = res.gap;
  j["gap_exact"] = res.gap_exact ? json(format_rational(*res.gap_exact)) : json(nullptr);
  return j.dump(2);
}

std::string grid_search_to_json(const GridSearchResult& res) {
  json j;
  j["best"] = cutset(res.best);
  j["best_decimal"] = doubles(res.best.to_doubles());
  j["values"] = doubles(res.values);
  j["values_exact"] = res.values_exact ? rationals(*res.values_exact) : json(nullptr);
  j["gap"] = res.gap;
  j["gap_exact"] = res.gap_exact ? json(format_rational(*res.gap_exact)) : json(nullptr);
  j["points_scanned"] = res.points_scanned;
  return j.dump(2);
}

}  // namespace equicake
