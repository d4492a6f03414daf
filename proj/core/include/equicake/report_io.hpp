#pragma once

#include <string>

#include "equicake/classes.hpp"
#include "equicake/oracle.hpp"
#include "equicake/sperner.hpp"
#include "equicake/two_agent.hpp"

namespace equicake {

/// JSON renderings of the library's report types, as printed by the CLI.
/// Exact quantities appear as "p/q" strings next to decimal mirrors.
std::string solve_report_to_json(const SolveReport& rep);
std::string two_agent_report_to_json(const TwoAgentReport& rep);
std::string class_report_to_json(const ClassReport& rep);
std::string permutation_search_to_json(const PermutationSearch& res);
std::string verify_result_to_json(const VerifyResult& res);
std::string grid_search_to_json(const GridSearchResult& res);

}  // namespace equicake
