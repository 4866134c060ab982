#include "graphsep/analysis.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "graphsep/errors.hpp"
#include "graphsep/factorize.hpp"
#include "graphsep/laplacian.hpp"
#include "graphsep/mixed_witness.hpp"
#include "graphsep/oracle.hpp"

namespace graphsep::cli {

using io::json;

Tolerances resolve_tolerances(std::optional<double> flag) {
  if (flag) {
    if (!(*flag > 0.0) || !std::isfinite(*flag))
      throw Error(ErrorCode::InvalidInput, "--tolerance must be a positive number");
    return Tolerances::with_override(*flag);
  }
  return Tolerances::from_env();
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidPartition, "bad part index '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorCode::InvalidPartition, "bad part index '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidPartition, "empty part list");
  return out;
}

WeightedGraph input_graph(const io::Input& input, const Tolerances& tol) {
  if (const auto* g = std::get_if<WeightedGraph>(&input)) {
    sigma_of(*g, tol);  // the Laplacian has to be a state
    return *g;
  }
  if (const auto* rho = std::get_if<DensityMatrix>(&input)) {
    rho->validate(tol);
    return graph_of(*rho);
  }
  return graph_of(oracle::pure_density(std::get<oracle::StateVector>(input)));
}

namespace {

// Leading eigenvector of a (numerically) pure density matrix.
oracle::StateVector dominant_vector(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries);
  const auto n = es.eigenvalues().size();
  return {rho.dims, es.eigenvectors().col(n - 1)};
}

std::vector<Partition> requested_cuts(const WeightedGraph& g, const std::optional<std::string>& spec) {
  if (spec) return {Partition::from_s(g.parts(), parse_index_list(*spec))};
  return all_bipartitions(g.parts());
}

json tolerance_json(const Tolerances& tol) {
  return {{"weight", tol.weight}, {"degree", tol.degree}, {"psd", tol.psd}, {"purity", tol.purity}, {"svd", tol.svd}};
}

json factorization_json(const Factorization& f) {
  json levels = json::array();
  for (const auto& level : f.levels) levels.push_back(io::to_json(level));
  json leaf_parts = json::array();
  for (const auto* leaf : leaves(f.root)) leaf_parts.push_back(leaf->parts);
  return {{"tree", io::to_json(f.root)}, {"leaves", leaf_parts}, {"levels", levels}};
}

std::string parts_text(const std::vector<int>& parts) {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + "}";
}

}  // namespace

json analyze_report(const io::Input& input, const AnalyzeOptions& opts, int& exit_code) {
  const Tolerances tol = resolve_tolerances(opts.tolerance);
  const WeightedGraph g = input_graph(input, tol);
  const DensityMatrix sigma = sigma_of(g, tol);
  const bool pure = is_pure_graph(g, tol);
  const auto cuts = requested_cuts(g, opts.partition);
  const auto criterion = criterion_at_all(g, cuts, tol);
  const bool in_class = g.is_real() && !g.has_loops();

  std::optional<oracle::StateVector> psi;
  if (opts.oracle && pure) {
    if (const auto* s = std::get_if<oracle::StateVector>(&input)) psi = *s;
    else psi = dominant_vector(sigma);
  }

  json report = {{"input_kind", io::input_kind(input)},
                 {"dims", g.dims()},
                 {"weights", g.is_real() ? "real" : "complex"},
                 {"loops", g.loop_count()},
                 {"pure", pure},
                 {"tolerance", tolerance_json(tol)}};

  json cut_reports = json::array();
  bool any_entangled = false;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const auto& p = cuts[i];
    const auto classes = classify_edges(g, p);
    json c = {{"s", p.s()},
              {"t", p.t()},
              {"degree_criterion", criterion[i] != 0},
              {"fixed", classes.fixed_size()},
              {"crossing", classes.crossing_size()}};
    if (pure) {
      const bool separable = criterion[i] != 0;
      c["verdict"] = separable ? "Separable" : "Entangled";
      any_entangled |= !separable;
    } else if (in_class) {
      auto v = mixed_verdict(g, p, tol);
      c["verdict"] = to_string(v.kind);
      if (v.reason != InconclusiveReason::None) c["reason"] = to_string(v.reason);
      if (v.witness) c["witness"] = io::to_json(*v.witness, g.dims());
      any_entangled |= v.kind == VerdictKind::Entangled;
    } else {
      c["verdict"] = to_string(VerdictKind::Inconclusive);
      c["reason"] = to_string(InconclusiveReason::OutOfTheoremClass);
    }
    if (opts.oracle) {
      const double min_eig = oracle::min_partial_transpose_eigenvalue(sigma, p);
      json o = {{"ppt_min_eigenvalue", min_eig}, {"ppt", min_eig >= -tol.psd}};
      if (psi) {
        const bool rank_one = oracle::rank_one_reshape(*psi, p, tol).has_value();
        o["rank_one"] = rank_one;
        o["agrees"] = rank_one == (criterion[i] != 0);
      }
      c["oracle"] = o;
    }
    cut_reports.push_back(std::move(c));
  }
  report["cuts"] = cut_reports;

  if (pure) report["factorization"] = factorization_json(full_factorization(g, tol));

  if (any_entangled) exit_code = kEntangled;
  else if (pure) exit_code = kSeparable;
  else exit_code = kInconclusive;
  report["verdict"] = exit_code == kEntangled ? "Entangled" : exit_code == kSeparable ? "Separable" : "Inconclusive";
  if (!pure && !in_class) report["note"] = "mixed state with loops or complex weights: the criterion is not decisive";
  report["exit_code"] = exit_code;
  return report;
}

int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  int code = kInputError;
  json report = analyze_report(io::read_input_file(opts.input), opts, code);
  out << report.dump(2) << '\n';

  err << report["input_kind"].get<std::string>() << " on dims " << report["dims"].dump() << ", "
      << (report["pure"].get<bool>() ? "pure" : "mixed") << '\n';
  for (const auto& c : report["cuts"]) {
    err << "  s=" << c["s"].dump() << " criterion=" << (c["degree_criterion"].get<bool>() ? "holds" : "fails")
        << " |F|=" << c["fixed"] << " |C|=" << c["crossing"] << " -> " << c["verdict"].get<std::string>();
    if (c.contains("reason")) err << " (" << c["reason"].get<std::string>() << ")";
    err << '\n';
  }
  err << report["verdict"].get<std::string>() << '\n';
  return code;
}

int run_factorize(const FactorizeOptions& opts, std::ostream& out, std::ostream& err) {
  const Tolerances tol = resolve_tolerances(opts.tolerance);
  const WeightedGraph g = input_graph(io::read_input_file(opts.input), tol);
  const auto f = full_factorization(g, tol);
  json report = factorization_json(f);

  int code = kSeparable;
  if (opts.fidelity_check) {
    const double fidelity = oracle::overlap(sigma_of(g, tol), sigma_of(reassemble(f.root, tol), tol));
    bool within_bound = true;
    for (const auto& level : f.levels) within_bound &= level.evaluations <= level.bound;
    const bool ok = fidelity >= 1.0 - 1e-9 && within_bound;
    report["fidelity_check"] = {{"fidelity", fidelity}, {"evaluations_within_bound", within_bound}, {"passed", ok}};
    if (!ok) code = kInconclusive;
    err << "fidelity " << fidelity << (within_bound ? ", evaluations within bound" : ", evaluation bound exceeded")
        << '\n';
  }
  if (opts.tree_out) {
    std::ofstream file(*opts.tree_out);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + *opts.tree_out);
    file << report["tree"].dump(2) << '\n';
  }
  out << report.dump(2) << '\n';

  err << leaves(f.root).size() << " leaves:";
  for (const auto* leaf : leaves(f.root)) err << ' ' << parts_text(leaf->parts);
  err << '\n';
  return code;
}

json counterexample_report() {
  const DensityMatrix rho = counterexample_state();
  const DensityMatrix built = counterexample_construction();
  const WeightedGraph g = graph_of(rho);
  const double deviation = (rho.entries - built.entries).cwiseAbs().maxCoeff();

  json cuts = json::array();
  bool criterion_fails = true;
  bool ppt_passes = true;
  for (const auto& p : all_bipartitions(g.parts())) {
    const bool holds = degree_criterion(g, p);
    const double min_eig = oracle::min_partial_transpose_eigenvalue(rho, p);
    criterion_fails &= !holds;
    ppt_passes &= min_eig >= -Tolerances{}.psd;
    cuts.push_back({{"s", p.s()},
                    {"t", p.t()},
                    {"degree", degree_matrix(g).diag},
                    {"degree_transposed", transposed_degree_matrix(g, p).diag},
                    {"degree_criterion", holds},
                    {"crossing", classify_edges(g, p).crossing_size()},
                    {"ppt_min_eigenvalue", min_eig}});
  }
  const bool separable = deviation <= 1e-15;
  return {{"matrix", io::to_json(rho)},
          {"graph", io::to_json(g)},
          {"cuts", cuts},
          {"construction_max_deviation", deviation},
          {"triad",
           {{"separable_construction", separable}, {"criterion_fails", criterion_fails}, {"ppt_passes", ppt_passes}}},
          {"holds", separable && criterion_fails && ppt_passes}};
}

int run_counterexample(std::ostream& out, std::ostream& err) {
  json report = counterexample_report();
  out << report.dump(2) << '\n';
  const auto& triad = report["triad"];
  err << "separable by construction: " << triad["separable_construction"] << '\n'
      << "degree criterion fails:    " << triad["criterion_fails"] << '\n'
      << "PPT passes:                " << triad["ppt_passes"] << '\n';
  return report["holds"].get<bool>() ? kSeparable : kInconclusive;
}

int run_random(const RandomOptions& opts, std::ostream& out, std::ostream& err) {
  Dims dims;
  for (int d : parse_index_list(opts.dims)) {
    if (d < 1) throw Error(ErrorCode::InvalidInput, "dims must be positive");
    dims.push_back(d);
  }
  if (opts.count < 0) throw Error(ErrorCode::InvalidInput, "count must be nonnegative");
  std::vector<int> groups;
  if (opts.groups) {
    groups = parse_index_list(*opts.groups);
    int total = 0;
    for (int s : groups) {
      if (s < 1) throw Error(ErrorCode::InvalidInput, "group sizes must be positive");
      total += s;
    }
    if (total != static_cast<int>(dims.size())) throw Error(ErrorCode::InvalidInput, "groups must cover every part");
  }
  if (opts.kind == "graph" && !(opts.density > 0.0 && opts.density <= 1.0))
    throw Error(ErrorCode::InvalidInput, "density must lie in (0, 1]");

  auto make = [&](std::uint64_t seed) -> json {
    if (opts.kind == "pure") return io::to_json(oracle::pure_density(oracle::random_pure(dims, seed)));
    if (opts.kind == "product")
      return io::to_json(oracle::pure_density(oracle::random_pure_product(dims, groups, seed)));
    if (opts.kind == "graph") return io::to_json(oracle::random_loopless_real_graph(dims, opts.density, seed));
    throw Error(ErrorCode::InvalidInput, "kind must be pure, product or graph");
  };

  if (!opts.out_dir) {
    json all = json::array();
    for (int i = 0; i < opts.count; ++i) all.push_back(make(opts.seed + static_cast<std::uint64_t>(i)));
    out << all.dump(2) << '\n';
    return kSeparable;
  }
  std::filesystem::create_directories(*opts.out_dir);
  for (int i = 0; i < opts.count; ++i) {
    const auto path = std::filesystem::path(*opts.out_dir) / (opts.kind + "-" + std::to_string(i) + ".json");
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
    file << make(opts.seed + static_cast<std::uint64_t>(i)).dump(2) << '\n';
    out << path.string() << '\n';
  }
  err << "wrote " << opts.count << ' ' << opts.kind << " instances to " << *opts.out_dir << '\n';
  return kSeparable;
}

}  // namespace graphsep::cli
