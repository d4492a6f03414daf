#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "equicake/valuation.hpp"

namespace equicake {

class InstanceParseError : public std::runtime_error {
 public:
  InstanceParseError(std::string where, const std::string& message)
      : std::runtime_error(where.empty() ? message : where + ": " + message),
        where_(std::move(where)) {}

  /// Field path of the offending value, e.g. "valuations[2].breakpoints[1]".
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Parses the JSON instance format:
///   {"n": 3, "mode": "additive-exact",
///    "valuations": [{"breakpoints": ["0","1/2","1"], "values": ["-1","3"]}, ...]}
/// Rationals are "p/q" or integer strings; float literals are rejected.
Instance parse_instance_json(const std::string& text);

Instance load_instance(const std::string& path);

/// Additive-exact instances only (black boxes have no wire format).
std::string instance_to_json(const Instance& inst);

/// One row per breakpoint in the union across agents: t and every F_i(t),
/// each as a 12-digit decimal column followed by an exact rational column.
/// Piecewise-linear interpolation through the rows reproduces each cdf.
void export_cdf_csv(const Instance& inst, std::ostream& out);

}  // namespace equicake
