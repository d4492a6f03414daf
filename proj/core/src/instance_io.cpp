#include "equicake/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace equicake {

namespace {

using nlohmann::json;

Rational parse_rational_field(const json& j, const std::string& where) {
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  if (j.is_number_float())
    throw InstanceParseError(where, "float literals are not exact; write \"p/q\"");
  if (!j.is_string())
    throw InstanceParseError(where, "expected a rational as a string \"p/q\"");
  auto r = parse_rational(j.get<std::string>());
  if (!r)
    throw InstanceParseError(where, "malformed rational \"" + j.get<std::string>() + "\"");
  return *r;
}

std::vector<Rational> parse_rational_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InstanceParseError(where, "expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_rational_field(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InstanceParseError("", "invalid JSON");
  if (!j.is_object()) throw InstanceParseError("", "top level must be an object");

  if (!j.contains("n") || !j["n"].is_number_integer())
    throw InstanceParseError("n", "expected an integer agent count");
  std::int64_t n = j["n"].get<std::int64_t>();
  if (n < 1) throw InstanceParseError("n", "agent count must be at least 1");

  if (!j.contains("mode") || !j["mode"].is_string())
    throw InstanceParseError("mode", "expected a string");
  std::string mode = j["mode"].get<std::string>();
  if (mode != "additive-exact")
    throw InstanceParseError(
        "mode", "unsupported mode \"" + mode + "\" (only \"additive-exact\" has a file format)");

  if (!j.contains("valuations") || !j["valuations"].is_array())
    throw InstanceParseError("valuations", "expected an array");
  const json& vs = j["valuations"];
  if (vs.size() != static_cast<size_t>(n))
    throw InstanceParseError("valuations", "expected exactly n = " + std::to_string(n) +
                                               " entries, got " + std::to_string(vs.size()));

  std::vector<PiecewiseConstantDensity> densities;
  densities.reserve(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) {
    std::string where = "valuations[" + std::to_string(i) + "]";
    if (!vs[i].is_object()) throw InstanceParseError(where, "expected an object");
    if (!vs[i].contains("breakpoints"))
      throw InstanceParseError(where + ".breakpoints", "missing");
    if (!vs[i].contains("values")) throw InstanceParseError(where + ".values", "missing");
    auto bp = parse_rational_array(vs[i]["breakpoints"], where + ".breakpoints");
    auto val = parse_rational_array(vs[i]["values"], where + ".values");
    try {
      densities.emplace_back(std::move(bp), std::move(val));
    } catch (const std::invalid_argument& e) {
      throw InstanceParseError(where, e.what());
    }
  }
  return Instance::additive(std::move(densities));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceParseError("", "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string instance_to_json(const Instance& inst) {
  if (!inst.additive_exact())
    throw std::logic_error("only additive-exact instances serialize to JSON");
  json j;
  j["n"] = inst.agents();
  j["mode"] = "additive-exact";
  json vs = json::array();
  for (int i = 0; i < inst.agents(); ++i) {
    const auto& d = inst.density(i);
    json bp = json::array(), val = json::array();
    for (const Rational& b : d.breakpoints()) bp.push_back(format_rational(b));
    for (const Rational& v : d.values()) val.push_back(format_rational(v));
    vs.push_back({{"breakpoints", std::move(bp)}, {"values", std::move(val)}});
  }
  j["valuations"] = std::move(vs);
  return j.dump(2);
}

void export_cdf_csv(const Instance& inst, std::ostream& out) {
  if (!inst.additive_exact())
    throw std::logic_error("cdf export requires an additive-exact instance");

  std::set<Rational> ts;
  for (int i = 0; i < inst.agents(); ++i)
    ts.insert(inst.density(i).breakpoints().begin(), inst.density(i).breakpoints().end());

  auto decimal = [](const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(r));
    return std::string(buf);
  };

  out << "t,t_exact";
  for (int i = 0; i < inst.agents(); ++i)
    out << ",F" << i + 1 << ",F" << i + 1 << "_exact";
  out << "\n";
  for (const Rational& t : ts) {
    out << decimal(t) << "," << format_rational(t);
    for (int i = 0; i < inst.agents(); ++i) {
      Rational f = cdf_eval(inst.density(i), t);
      out << "," << decimal(f) << "," << format_rational(f);
    }
    out << "\n";
  }
}

}  // namespace equicake
