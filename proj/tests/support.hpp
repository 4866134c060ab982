#pragma once

#include <cstdint>
#include <random>

#include "graphsep/graph.hpp"
#include "graphsep/laplacian.hpp"
#include "graphsep/oracle.hpp"

namespace testing {

using namespace graphsep;

inline oracle::StateVector qubit(Complex a, Complex b) {
  oracle::StateVector psi{{2}, Eigen::VectorXcd(2)};
  psi.amplitudes << a, b;
  psi.amplitudes.normalize();
  return psi;
}

inline WeightedGraph state_graph(const oracle::StateVector& psi) {
  return graph_of(oracle::pure_density(psi));
}

inline WeightedGraph bell_graph() { return state_graph(oracle::bell_state()); }

inline double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Random dims with m parts, each in [2, max_dim].
inline Dims random_dims(std::mt19937_64& rng, int m, int max_dim) {
  std::uniform_int_distribution<int> d(2, max_dim);
  Dims dims(m);
  for (auto& x : dims) x = d(rng);
  return dims;
}

// Sparse graph with optional complex weights and loops; not necessarily a state.
inline WeightedGraph random_graph(const Dims& dims, std::uint64_t seed, bool complex, bool loops,
                                  double density = 0.4) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> n(0.0, 1.0);
  const std::size_t size = vertex_count(dims);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a + 1; b < size; ++b)
      if (u(rng) < density) edges.push_back({a, b, complex ? Complex(n(rng), n(rng)) : Complex(n(rng), 0.0)});
  std::vector<double> l(size, 0.0);
  if (loops)
    for (auto& x : l)
      if (u(rng) < 0.5) x = n(rng);
  if (edges.empty()) edges.push_back({0, size - 1, 1.0});
  return WeightedGraph::from_edges(dims, complex ? WeightKind::Complex : WeightKind::Real, std::move(edges),
                                   std::move(l));
}

}  // namespace testing
