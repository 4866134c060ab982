#include <iostream>

#include "CLI11.hpp"
#include "graphsep/analysis.hpp"
#include "graphsep/errors.hpp"

namespace cli = graphsep::cli;

int main(int argc, char** argv) {
  CLI::App app{"graphsep: separability of quantum states through their Laplacian graphs"};
  app.require_subcommand(1);

  cli::AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "degree criterion per cut, verdict and factorization");
  a->add_option("input", analyze.input, "graph, matrix or state JSON")->required();
  auto* part = a->add_option("--partition", analyze.partition, "s side of one cut, e.g. 1,4");
  a->add_flag("--all-cuts", "every bipartition in canonical order (default)")->excludes(part);
  a->add_flag("--oracle", analyze.oracle, "cross-check with PPT and the rank-1 reshape");
  a->add_option("--tolerance", analyze.tolerance, "numerical epsilon");

  cli::FactorizeOptions factorize;
  auto* f = app.add_subcommand("factorize", "full factorization tree of a pure state");
  f->add_option("input", factorize.input, "graph, matrix or state JSON")->required();
  f->add_option("--tree-out", factorize.tree_out, "also write the tree here");
  f->add_flag("--fidelity-check", factorize.fidelity_check, "reassemble and compare, check evaluation counts");
  f->add_option("--tolerance", factorize.tolerance, "numerical epsilon");

  auto* c = app.add_subcommand("counterexample", "separable two-qubit state that fails the degree criterion");

  cli::RandomOptions random;
  auto* r = app.add_subcommand("random", "reproducible random instances");
  r->add_option("--kind", random.kind, "pure, product or graph")->required()->check(
      CLI::IsMember({"pure", "product", "graph"}));
  r->add_option("--dims", random.dims, "part dimensions, e.g. 2,2,3")->required();
  r->add_option("--seed", random.seed, "base seed; instance i uses seed + i");
  r->add_option("--count", random.count, "number of instances");
  r->add_option("--out", random.out_dir, "directory for <kind>-<i>.json; stdout when absent");
  r->add_option("--groups", random.groups, "product: sizes of consecutive entangled groups");
  r->add_option("--density", random.density, "graph: edge probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  try {
    if (*a) return cli::run_analyze(analyze, std::cout, std::cerr);
    if (*f) return cli::run_factorize(factorize, std::cout, std::cerr);
    if (*c) return cli::run_counterexample(std::cout, std::cerr);
    if (*r) return cli::run_random(random, std::cout, std::cerr);
  } catch (const graphsep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  }
  return cli::kInputError;
}
