#include "graphsep/json_io.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include "graphsep/errors.hpp"

namespace graphsep::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Dims read_dims(const json& j) {
  const auto& d = field(j, "dims");
  if (!d.is_array() || d.empty()) bad("dims must be a nonempty array");
  Dims dims;
  for (const auto& x : d) {
    if (!x.is_number_integer() || x.get<long>() < 1) bad("dims entries must be positive integers");
    dims.push_back(x.get<int>());
  }
  return dims;
}

double read_number(const json& x) {
  if (!x.is_number()) bad("expected a number");
  return x.get<double>();
}

// [re], [re, im] or a bare number.
Complex read_complex(const json& x) {
  if (x.is_number()) return {x.get<double>(), 0.0};
  if (!x.is_array() || x.empty() || x.size() > 2) bad("complex values are [re] or [re, im]");
  return {read_number(x[0]), x.size() == 2 ? read_number(x[1]) : 0.0};
}

json write_complex(Complex z) { return json::array({z.real(), z.imag()}); }

VertexLabel read_label(const json& x) {
  if (!x.is_array()) bad("vertex labels are arrays of 1-based coordinates");
  VertexLabel label;
  for (const auto& c : x) {
    if (!c.is_number_integer()) bad("vertex coordinates must be integers");
    label.coords.push_back(c.get<int>());
  }
  return label;
}

json parts_json(const std::vector<int>& parts) { return json(parts); }

}  // namespace

json to_json(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json w = g.is_real() ? json::array({e.w.real()}) : write_complex(e.w);
    edges.push_back({{"u", label_of(g.dims(), e.u).coords}, {"v", label_of(g.dims(), e.v).coords}, {"w", w}});
  }
  json loops = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.loop(v) != 0.0) loops.push_back({{"v", label_of(g.dims(), v).coords}, {"w", g.loop(v)}});
  return {{"dims", g.dims()}, {"kind", g.is_real() ? "real" : "complex"}, {"edges", edges}, {"loops", loops}};
}

WeightedGraph graph_from_json(const json& j) {
  Dims dims = read_dims(j);
  WeightKind kind = WeightKind::Real;
  if (j.contains("kind")) {
    const auto& k = j.at("kind");
    if (k == "real") kind = WeightKind::Real;
    else if (k == "complex") kind = WeightKind::Complex;
    else bad("kind must be \"real\" or \"complex\"");
  }

  std::map<std::pair<VertexLabel, VertexLabel>, Complex> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) bad("edges must be an array");
    for (const auto& e : j.at("edges")) {
      auto key = std::make_pair(read_label(field(e, "u")), read_label(field(e, "v")));
      Complex w = read_complex(field(e, "w"));
      // a repeated pair in either orientation adds up
      if (key.first > key.second) {
        std::swap(key.first, key.second);
        w = std::conj(w);
      }
      edges[key] += w;
    }
  }
  std::map<VertexLabel, double> loops;
  if (j.contains("loops")) {
    if (!j.at("loops").is_array()) bad("loops must be an array");
    for (const auto& l : j.at("loops")) loops[read_label(field(l, "v"))] += read_number(field(l, "w"));
  }
  return build_graph(dims, edges, loops, kind);
}

json to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < rho.entries.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < rho.entries.cols(); ++c) row.push_back(write_complex(rho.entries(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"dims", rho.dims}, {"rows", rows}};
}

DensityMatrix matrix_from_json(const json& j) {
  Dims dims = read_dims(j);
  const auto n = static_cast<Eigen::Index>(vertex_count(dims));
  const auto& rows = field(j, "rows");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw Error(ErrorCode::SizeMismatch, "matrix row count does not match dims");
  DensityMatrix rho{dims, Eigen::MatrixXcd(n, n)};
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw Error(ErrorCode::SizeMismatch, "matrix column count does not match dims");
    for (Eigen::Index c = 0; c < n; ++c) rho.entries(r, c) = read_complex(row[static_cast<std::size_t>(c)]);
  }
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      if (!std::isfinite(rho.entries(r, c).real()) || !std::isfinite(rho.entries(r, c).imag()))
        throw Error(ErrorCode::NonFiniteWeight, "matrix entry is not finite");
  return rho;
}

json to_json(const oracle::StateVector& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) amps.push_back(write_complex(psi.amplitudes[i]));
  return {{"dims", psi.dims}, {"amplitudes", amps}};
}

oracle::StateVector state_from_json(const json& j) {
  Dims dims = read_dims(j);
  const auto& amps = field(j, "amplitudes");
  if (!amps.is_array() || amps.size() != vertex_count(dims))
    throw Error(ErrorCode::SizeMismatch, "amplitude count does not match dims");
  oracle::StateVector psi{dims, Eigen::VectorXcd(static_cast<Eigen::Index>(amps.size()))};
  for (std::size_t i = 0; i < amps.size(); ++i) psi.amplitudes[static_cast<Eigen::Index>(i)] = read_complex(amps[i]);
  if (!psi.amplitudes.allFinite()) throw Error(ErrorCode::NonFiniteWeight, "amplitude is not finite");
  const double norm = psi.amplitudes.norm();
  if (norm == 0.0) throw Error(ErrorCode::ZeroDegreeSum, "state vector is zero");
  psi.amplitudes /= norm;
  return psi;
}

json to_json(const Partition& p) { return {{"s", p.s()}, {"t", p.t()}}; }

json to_json(const FactorNode& node, bool with_graphs) {
  if (node.is_leaf()) {
    json leaf = {{"parts", parts_json(node.parts)}};
    if (with_graphs) leaf["graph"] = to_json(node.graph);
    return leaf;
  }
  return {{"parts", parts_json(node.parts)},
          {"s", parts_json(node.split_s)},
          {"left", to_json(node.children[0], with_graphs)},
          {"right", to_json(node.children[1], with_graphs)}};
}

json to_json(const WitnessReport& report, const Dims& dims) {
  std::vector<double> gap(report.gap.data(), report.gap.data() + report.gap.size());
  std::vector<double> chi(report.chi.data(), report.chi.data() + report.chi.size());
  return {{"partition", to_json(report.partition)},
          {"gap", gap},
          {"index", report.index},
          {"vertex", label_of(dims, report.index).coords},
          {"k", report.k},
          {"chi", chi},
          {"value", report.value}};
}

json to_json(const LevelStats& stats) {
  return {{"parts", stats.parts},
          {"clique_size", stats.clique_size},
          {"largest_prime", stats.largest_prime},
          {"s1", stats.s1},
          {"evaluations", stats.evaluations},
          {"bound", stats.bound},
          {"prime_shortcut", stats.prime_shortcut}};
}

Input parse_input(const json& j) {
  if (!j.is_object()) bad("top level must be an object");
  if (j.contains("rows")) return matrix_from_json(j);
  if (j.contains("amplitudes")) return state_from_json(j);
  if (j.contains("edges") || j.contains("loops")) return graph_from_json(j);
  bad("cannot tell graph, matrix or state apart: expected edges, rows or amplitudes");
}

Input read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
  return parse_input(j);
}

const char* input_kind(const Input& input) {
  switch (input.index()) {
    case 0: return "graph";
    case 1: return "matrix";
    default: return "state";
  }
}

}  // namespace graphsep::io
