#include "graphsep/products.hpp"

#include <cmath>

#include "graphsep/errors.hpp"
#include "graphsep/laplacian.hpp"

namespace graphsep {

namespace {

WeightKind joint_kind(const WeightedGraph& a, const WeightedGraph& b) {
  return a.is_real() && b.is_real() ? WeightKind::Real : WeightKind::Complex;
}

Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

WeightedGraph graph_operator(const WeightedGraph& g, GraphOperator op) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  switch (op) {
    case GraphOperator::Loopless:
      return WeightedGraph::from_edges(g.dims(), g.kind(), std::move(edges));
    case GraphOperator::DegreeLoops:
      return WeightedGraph::from_edges(g.dims(), g.kind(), {}, degree_matrix(g).diag);
    case GraphOperator::LoopsOnly:
      return WeightedGraph::from_edges(g.dims(), g.kind(), {}, g.loops());
    case GraphOperator::Negate:
      for (auto& e : edges) e.w = -e.w;
      return WeightedGraph::from_edges(g.dims(), g.kind(), std::move(edges), g.loops());
  }
  return g;
}

WeightedGraph promote_to_complex(const WeightedGraph& g) {
  if (!g.is_real()) return g;
  std::vector<double> loops = g.loops();
  for (const auto& e : g.edges()) {
    double shift = e.w.real() - std::abs(e.w);
    loops[e.u] += shift;
    loops[e.v] += shift;
  }
  return WeightedGraph::from_edges(g.dims(), WeightKind::Complex,
                                   {g.edges().begin(), g.edges().end()}, std::move(loops));
}

WeightedGraph scale_weights(const WeightedGraph& g, double c) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.w *= c;
  std::vector<double> loops = g.loops();
  for (double& l : loops) l *= c;
  return WeightedGraph::from_edges(g.dims(), g.kind(), std::move(edges), std::move(loops));
}

WeightedGraph edge_union(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.dims() != b.dims()) throw Error(ErrorCode::SizeMismatch, "edge union of different vertex sets");
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  std::vector<double> loops = a.loops();
  for (std::size_t v = 0; v < loops.size(); ++v) loops[v] += b.loop(v);
  return WeightedGraph::from_edges(a.dims(), joint_kind(a, b), std::move(edges), std::move(loops));
}

WeightedGraph tensor_product(const WeightedGraph& g1, const WeightedGraph& g2) {
  const std::size_t n2 = g2.vertex_count();
  auto at = [n2](std::size_t x, std::size_t y) { return x * n2 + y; };

  std::vector<Edge> edges;
  edges.reserve(2 * g1.edges().size() * g2.edges().size());
  for (const auto& e1 : g1.edges())
    for (const auto& e2 : g2.edges()) {
      edges.push_back({at(e1.u, e2.u), at(e1.v, e2.v), e1.w * e2.w});
      edges.push_back({at(e1.u, e2.v), at(e1.v, e2.u), e1.w * std::conj(e2.w)});
    }
  for (std::size_t x = 0; x < g1.vertex_count(); ++x) {
    double l1 = g1.loop(x);
    if (l1 == 0.0) continue;
    for (const auto& e2 : g2.edges()) edges.push_back({at(x, e2.u), at(x, e2.v), l1 * e2.w});
  }
  for (std::size_t y = 0; y < n2; ++y) {
    double l2 = g2.loop(y);
    if (l2 == 0.0) continue;
    for (const auto& e1 : g1.edges()) edges.push_back({at(e1.u, y), at(e1.v, y), e1.w * l2});
  }

  std::vector<double> loops(g1.vertex_count() * n2, 0.0);
  for (std::size_t x = 0; x < g1.vertex_count(); ++x)
    for (std::size_t y = 0; y < n2; ++y) loops[at(x, y)] = g1.loop(x) * g2.loop(y);

  return WeightedGraph::from_edges(concat(g1.dims(), g2.dims()), joint_kind(g1, g2),
                                   std::move(edges), std::move(loops));
}

WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2) {
  using enum GraphOperator;
  return edge_union(
      tensor_product(graph_operator(g1, Loopless), graph_operator(g2, DegreeLoops)),
      tensor_product(graph_operator(g1, DegreeLoops), graph_operator(g2, Loopless)));
}

WeightedGraph modified_tensor_product(const WeightedGraph& gs, const WeightedGraph& gt,
                                      const Tolerances& tol) {
  if (!is_pure_graph(gs, tol)) throw Error(ErrorCode::NotPure, "s factor is not a pure-state graph");
  if (!is_pure_graph(gt, tol)) throw Error(ErrorCode::NotPure, "t factor is not a pure-state graph");

  using enum GraphOperator;
  const bool real = gs.is_real() && gt.is_real();
  const WeightedGraph b = real ? gs : promote_to_complex(gs);
  const WeightedGraph c = real ? gt : promote_to_complex(gt);

  const WeightedGraph lb = graph_operator(b, Loopless);
  const WeightedGraph lc = graph_operator(c, Loopless);

  // C-set edges, then the two F-set families (common t part, common s part)
  WeightedGraph g = tensor_product(lb, graph_operator(lc, Negate));
  g = edge_union(g, tensor_product(lb, graph_operator(c, DegreeLoops)));
  g = edge_union(g, tensor_product(graph_operator(b, DegreeLoops), lc));

  // loops
  g = edge_union(g, tensor_product(graph_operator(b, LoopsOnly), graph_operator(c, LoopsOnly)));
  if (!real) {
    // modulus degrees count the C-set edges with a positive sign, which the
    // loops have to give back twice
    g = edge_union(g, scale_weights(tensor_product(graph_operator(lb, DegreeLoops),
                                                   graph_operator(lc, DegreeLoops)),
                                    -2.0));
  }
  return g;
}

WeightedGraph permute_parts(const WeightedGraph& g, const std::vector<int>& order) {
  const int m = g.parts();
  if (static_cast<int>(order.size()) != m)
    throw Error(ErrorCode::SizeMismatch, "permutation length differs from part count");
  std::vector<char> seen(m, 0);
  Dims dims(m);
  for (int i = 0; i < m; ++i) {
    int src = order[i];
    if (src < 1 || src > m || seen[src - 1]) throw Error(ErrorCode::InvalidInput, "not a permutation");
    seen[src - 1] = 1;
    dims[i] = g.dims()[src - 1];
  }

  std::vector<std::size_t> map(g.vertex_count());
  std::vector<int> moved(m);
  for (std::size_t v = 0; v < map.size(); ++v) {
    auto c = coords_of(g.dims(), v);
    for (int i = 0; i < m; ++i) moved[i] = c[order[i] - 1];
    map[v] = linear_index(dims, moved);
  }

  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.push_back({map[e.u], map[e.v], e.w});
  std::vector<double> loops(g.vertex_count(), 0.0);
  for (std::size_t v = 0; v < map.size(); ++v) loops[map[v]] = g.loop(v);
  return WeightedGraph::from_edges(std::move(dims), g.kind(), std::move(edges), std::move(loops));
}

}  // namespace graphsep
