#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "graphsep/factorize.hpp"
#include "graphsep/graph.hpp"
#include "graphsep/laplacian.hpp"
#include "graphsep/mixed_witness.hpp"
#include "graphsep/oracle.hpp"

namespace graphsep::io {

using nlohmann::json;

// Graph:  {"dims":[..],"kind":"real"|"complex",
//          "edges":[{"u":[..],"v":[..],"w":[re,im]}],"loops":[{"v":[..],"w":re}]}
// Matrix: {"dims":[..],"rows":[[[re,im],..],..]}
// State:  {"dims":[..],"amplitudes":[[re,im],..]}
// Labels are 1-based coordinates.

json to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const json& j);

json to_json(const DensityMatrix& rho);
DensityMatrix matrix_from_json(const json& j);

json to_json(const oracle::StateVector& psi);
oracle::StateVector state_from_json(const json& j);

json to_json(const Partition& p);
json to_json(const FactorNode& node, bool with_graphs = true);
json to_json(const WitnessReport& report, const Dims& dims);
json to_json(const LevelStats& stats);

using Input = std::variant<WeightedGraph, DensityMatrix, oracle::StateVector>;

/// Dispatches on the keys present ("rows", "amplitudes", or "edges"/"loops").
/// Throws Error(InvalidInput) on anything malformed.
Input parse_input(const json& j);
Input read_input_file(const std::string& path);

const char* input_kind(const Input& input);

}  // namespace graphsep::io
