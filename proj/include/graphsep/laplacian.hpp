#pragma once

#include <Eigen/Dense>

#include "graphsep/graph.hpp"

namespace graphsep {

using HermitianMatrix = Eigen::MatrixXcd;

/// Dense density matrix over the product basis (mixed-radix ordering).
struct DensityMatrix {
  Dims dims;
  Eigen::MatrixXcd entries;

  std::size_t size() const { return static_cast<std::size_t>(entries.rows()); }

  /// Throws SizeMismatch, NotHermitian or NotPSD; also rejects a trace away
  /// from 1 by more than tol.weight * size().
  void validate(const Tolerances& tol = {}) const;
};

/// Adjacency with loops on the diagonal: M_uv = a(u -> v), M_vv = loop(v).
HermitianMatrix adjacency_matrix(const WeightedGraph& g);

/// Loopless degrees minus the loopless adjacency. Loops are ignored.
HermitianMatrix combinatorial_laplacian(const WeightedGraph& g);

/// Q_vv = degree(v), Q_uv = -a(u -> v).
HermitianMatrix generalized_laplacian(const WeightedGraph& g);

/// Q / degree_sum. Throws ZeroDegreeSum or NotPSD.
DensityMatrix sigma_of(const WeightedGraph& g, const Tolerances& tol = {});

/// Q / degree_sum without the positivity check; for comparisons only.
HermitianMatrix normalized_laplacian(const WeightedGraph& g);

/// Graph at unit degree-sum scale: a(u -> v) = -rho_uv, loops chosen so
/// that degree(v) = rho_vv. Real iff every entry of rho is real.
WeightedGraph graph_of(const DensityMatrix& rho);

/// A single clique on the support plus the weight identity
/// sum d_v^2 + 2 sum |a_e|^2 == (degree sum)^2 within tol.purity.
bool is_pure_graph(const WeightedGraph& g, const Tolerances& tol = {});

/// Sum over edges of a_jl (x_j - x_l)^2. Throws ComplexGraph or HasLoops.
double quadratic_form(const WeightedGraph& g, const Eigen::VectorXd& x);

}  // namespace graphsep
