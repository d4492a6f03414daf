#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equicake/classes.hpp"
#include "equicake/instance_io.hpp"
#include "equicake/oracle.hpp"
#include "equicake/report_io.hpp"
#include "equicake/sperner.hpp"
#include "equicake/two_agent.hpp"

namespace {

// Exit codes: 0 success/converged/pass, 1 parse or validation failure,
// 2 labeling violation, 3 budget exhausted or verification failure.
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kLabelingViolation = 2;
constexpr int kBudgetExhausted = 3;

equicake::CutSet parse_cut(const std::string& spec) {
  std::vector<equicake::Rational> coords;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    auto r = equicake::parse_rational(tok);
    if (!r) throw std::invalid_argument("malformed cut coordinate \"" + tok + "\"");
    coords.push_back(*r);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return equicake::CutSet(std::move(coords));
}

int run_solve(const std::string& file, const equicake::SolveOptions& opt, bool sanp) {
  equicake::Instance inst = equicake::load_instance(file);
  equicake::SolveReport rep =
      sanp ? equicake::solve_sanp(inst, opt) : equicake::solve(inst, opt);
  std::cout << equicake::solve_report_to_json(rep) << "\n";
  switch (rep.status) {
    case equicake::SolveStatus::converged: return kOk;
    case equicake::SolveStatus::labeling_violation: return kLabelingViolation;
    case equicake::SolveStatus::budget_exhausted: return kBudgetExhausted;
  }
  return kParseError;
}

int run_solve2(const std::string& file, const equicake::TwoAgentOptions& opt) {
  equicake::Instance inst = equicake::load_instance(file);
  equicake::TwoAgentReport rep = equicake::solve_two(inst, opt);
  std::cout << equicake::two_agent_report_to_json(rep) << "\n";
  return rep.status == equicake::TwoAgentStatus::converged ? kOk : kBudgetExhausted;
}

int run_classes(const std::string& file, std::int64_t falsify_m) {
  equicake::Instance inst = equicake::load_instance(file);
  std::cout << equicake::class_report_to_json(equicake::classify(inst, falsify_m)) << "\n";
  return kOk;
}

int run_permute(const std::string& file, std::int64_t m) {
  equicake::Instance inst = equicake::load_instance(file);
  std::cout << equicake::permutation_search_to_json(equicake::find_sann_permutation(inst, m))
            << "\n";
  return kOk;
}

int run_verify(const std::string& file, const std::string& cut, const std::string& eps) {
  equicake::Instance inst = equicake::load_instance(file);
  auto eps_r = equicake::parse_rational(eps);
  if (!eps_r || *eps_r < 0)
    throw std::invalid_argument("--eps must be a nonnegative rational");
  equicake::VerifyResult res = equicake::verify_equitable(inst, parse_cut(cut), *eps_r);
  std::cout << equicake::verify_result_to_json(res) << "\n";
  return res.pass ? kOk : kBudgetExhausted;
}

int run_oracle(const std::string& file, std::int64_t m) {
  equicake::Instance inst = equicake::load_instance(file);
  std::cout << equicake::grid_search_to_json(equicake::min_gap_grid(inst, m)) << "\n";
  return kOk;
}

int run_export_cdf(const std::string& file, const std::string& out_path) {
  equicake::Instance inst = equicake::load_instance(file);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write \"" + out_path + "\"");
  equicake::export_cdf_csv(inst, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected equitable cake division: solvers, checkers, and exports"};
  app.require_subcommand(1);

  std::string file, out_path, cut, verify_eps = "0";
  equicake::SolveOptions sopt;
  bool sanp = false;
  equicake::TwoAgentOptions topt;
  std::int64_t falsify_m = 32, oracle_m = 32;

  CLI::App* solve = app.add_subcommand("solve", "Refine the subdivision until eps-equitable");
  solve->add_option("instance", file, "Instance JSON file")->required();
  solve->add_option("--eps", sopt.eps, "Equity gap target");
  solve->add_option("--m0", sopt.m0, "Initial grid resolution");
  solve->add_option("--mmax", sopt.mmax, "Resolution budget");
  solve->add_option("--threads", sopt.threads, "Worker threads (0 = all cores)");
  solve->add_flag("--sanp", sanp, "Treat the instance as everywhere-nonpositive");

  CLI::App* solve2 = app.add_subcommand("solve2", "Two-agent bisection solver");
  solve2->add_option("instance", file, "Instance JSON file")->required();
  solve2->add_option("--eps", topt.eps, "Equity gap target");
  solve2->add_option("--max-iterations", topt.max_iterations, "Iteration cap");

  CLI::App* classes = app.add_subcommand("classes", "Report instance class membership");
  classes->add_option("instance", file, "Instance JSON file")->required();
  classes->add_option("--falsify-m", falsify_m, "Falsifier grid resolution");

  CLI::App* permute = app.add_subcommand("permute", "Search agent orderings for acceptability");
  permute->add_option("instance", file, "Instance JSON file")->required();
  permute->add_option("--m", falsify_m, "Falsifier grid resolution");

  CLI::App* verify = app.add_subcommand("verify", "Check a cut-set for eps-equitability");
  verify->add_option("instance", file, "Instance JSON file")->required();
  verify->add_option("--cut", cut, "Comma-separated rational piece lengths")->required();
  verify->add_option("--eps", verify_eps, "Equity tolerance (rational, default 0)");

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive grid minimum of the equity gap");
  oracle->add_option("instance", file, "Instance JSON file")->required();
  oracle->add_option("--m", oracle_m, "Grid resolution");

  CLI::App* export_cdf = app.add_subcommand("export-cdf", "Write cdf knots as CSV");
  export_cdf->add_option("instance", file, "Instance JSON file")->required();
  export_cdf->add_option("output", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (solve->parsed()) return run_solve(file, sopt, sanp);
    if (solve2->parsed()) return run_solve2(file, topt);
    if (classes->parsed()) return run_classes(file, falsify_m);
    if (permute->parsed()) return run_permute(file, falsify_m);
    if (verify->parsed()) return run_verify(file, cut, verify_eps);
    if (oracle->parsed()) return run_oracle(file, oracle_m);
    if (export_cdf->parsed()) return run_export_cdf(file, out_path);
  } catch (const equicake::InstanceParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}
