#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphsep/graph.hpp"
#include "graphsep/json_io.hpp"

// Command implementations behind the graphsep executable. Each returns the
// process exit code; JSON goes to `out`, the human summary to `err`.
namespace graphsep::cli {

enum ExitCode : int {
  kSeparable = 0,
  kEntangled = 1,
  kInconclusive = 2,
  kInputError = 3,
};

/// --tolerance wins over GRAPHSEP_TOLERANCE, which wins over the defaults.
Tolerances resolve_tolerances(std::optional<double> flag);

/// "1,4" -> {1, 4}. Throws InvalidPartition on junk.
std::vector<int> parse_index_list(const std::string& text);

/// The graph an input stands for, at unit degree sum for matrices and states.
/// Matrices are validated as density matrices first.
WeightedGraph input_graph(const io::Input& input, const Tolerances& tol);

struct AnalyzeOptions {
  std::string input;
  std::optional<std::string> partition;  // empty means every cut
  bool oracle = false;
  std::optional<double> tolerance;
};

struct FactorizeOptions {
  std::string input;
  std::optional<std::string> tree_out;
  bool fidelity_check = false;
  std::optional<double> tolerance;
};

struct RandomOptions {
  std::string kind;  // pure | product | graph
  std::string dims;
  std::uint64_t seed = 0;
  int count = 1;
  std::optional<std::string> out_dir;
  std::optional<std::string> groups;  // product only: consecutive group sizes
  double density = 0.5;               // graph only
};

int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int run_factorize(const FactorizeOptions& opts, std::ostream& out, std::ostream& err);
int run_counterexample(std::ostream& out, std::ostream& err);
int run_random(const RandomOptions& opts, std::ostream& out, std::ostream& err);

/// Report objects without the printing, for callers that want the JSON.
io::json analyze_report(const io::Input& input, const AnalyzeOptions& opts, int& exit_code);
io::json counterexample_report();

}  // namespace graphsep::cli
