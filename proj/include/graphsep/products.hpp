#pragma once

#include "graphsep/graph.hpp"

namespace graphsep {

enum class GraphOperator {
  Loopless,     // L: drop every loop
  DegreeLoops,  // N: loops-only graph, loop weight = vertex degree
  LoopsOnly,    // Omega: drop every edge
  Negate,       // eta: negate edge weights, keep loops
};

WeightedGraph graph_operator(const WeightedGraph& g, GraphOperator op);

/// Same generalized Laplacian as a Complex-kind graph: loops are recomputed so
/// that modulus degrees equal the original signed degrees.
WeightedGraph promote_to_complex(const WeightedGraph& g);

/// Multiplies every edge and loop weight by c.
WeightedGraph scale_weights(const WeightedGraph& g, double c);

/// Disjoint edge union: weights of coinciding edges and loops add.
WeightedGraph edge_union(const WeightedGraph& a, const WeightedGraph& b);

/// Kronecker product of adjacencies (loops on the diagonal): an edge pair
/// gives two edges, a loop and an edge give one edge, two loops give a loop.
/// Parts of g1 come first.
WeightedGraph tensor_product(const WeightedGraph& g1, const WeightedGraph& g2);

/// Edges {(v1,v2),(v1,w2)} weighted d_{v1} * c and {(v1,v2),(w1,v2)}
/// weighted d_{v2} * b. Loopless.
WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2);

/// Graph whose density matrix is sigma(gs) (x) sigma(gt). Both factors must
/// be pure-state graphs (NotPure otherwise). Mixed kinds promote to Complex.
WeightedGraph modified_tensor_product(const WeightedGraph& gs, const WeightedGraph& gt,
                                      const Tolerances& tol = {});

/// Reorders parts: part i of the result is part order[i] (1-based) of g.
WeightedGraph permute_parts(const WeightedGraph& g, const std::vector<int>& order);

}  // namespace graphsep
