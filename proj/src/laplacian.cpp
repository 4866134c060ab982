#include "graphsep/laplacian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "graphsep/errors.hpp"

namespace graphsep {

void DensityMatrix::validate(const Tolerances& tol) const {
  const auto n = static_cast<Eigen::Index>(vertex_count(dims));
  if (entries.rows() != n || entries.cols() != n)
    throw Error(ErrorCode::SizeMismatch, "matrix is " + std::to_string(entries.rows()) + "x" +
                                             std::to_string(entries.cols()) + ", dims imply " +
                                             std::to_string(n));
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > tol.weight)
    throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
  double trace = entries.trace().real();
  if (std::abs(trace - 1.0) > tol.weight * static_cast<double>(n))
    throw Error(ErrorCode::InvalidInput, "trace is " + std::to_string(trace) + ", expected 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol.psd)
    throw Error(ErrorCode::NotPSD, "minimum eigenvalue " +
                                       std::to_string(solver.eigenvalues().minCoeff()));
}

HermitianMatrix adjacency_matrix(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  HermitianMatrix m = HermitianMatrix::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) m(v, v) = g.loop(v);
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = e.w;
    m(e.v, e.u) = std::conj(e.w);
  }
  return m;
}

HermitianMatrix combinatorial_laplacian(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  HermitianMatrix l = HermitianMatrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    double c = g.is_real() ? e.w.real() : std::abs(e.w);
    l(e.u, e.u) += c;
    l(e.v, e.v) += c;
    l(e.u, e.v) = -e.w;
    l(e.v, e.u) = -std::conj(e.w);
  }
  return l;
}

HermitianMatrix generalized_laplacian(const WeightedGraph& g) {
  HermitianMatrix q = combinatorial_laplacian(g);
  for (Eigen::Index v = 0; v < q.rows(); ++v) q(v, v) += g.loop(v);
  return q;
}

HermitianMatrix normalized_laplacian(const WeightedGraph& g) {
  HermitianMatrix q = generalized_laplacian(g);
  double total = q.trace().real();
  if (total == 0.0) throw Error(ErrorCode::ZeroDegreeSum, "degree sum is zero");
  return q / total;
}

DensityMatrix sigma_of(const WeightedGraph& g, const Tolerances& tol) {
  HermitianMatrix q = generalized_laplacian(g);
  double total = q.trace().real();
  if (!(std::abs(total) > 0.0)) throw Error(ErrorCode::ZeroDegreeSum, "degree sum is zero");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(q / total, Eigen::EigenvaluesOnly);
  double lowest = solver.eigenvalues().minCoeff();
  if (lowest < -tol.psd)
    throw Error(ErrorCode::NotPSD, "generalized Laplacian has eigenvalue " +
                                       std::to_string(lowest * total));
  return {g.dims(), q / total};
}

WeightedGraph graph_of(const DensityMatrix& rho) {
  const auto n = static_cast<Eigen::Index>(rho.size());
  if (n != static_cast<Eigen::Index>(vertex_count(rho.dims)) || rho.entries.cols() != n)
    throw Error(ErrorCode::SizeMismatch, "density matrix does not match dims");

  bool real = true;
  for (Eigen::Index i = 0; i < n && real; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (rho.entries(i, j).imag() != 0.0) {
        real = false;
        break;
      }
  const WeightKind kind = real ? WeightKind::Real : WeightKind::Complex;

  std::vector<Edge> edges;
  std::vector<double> loops(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index u = 0; u < n; ++u) {
    double off = 0.0;
    for (Eigen::Index v = 0; v < n; ++v) {
      if (u == v) continue;
      Complex entry = rho.entries(u, v);
      if (entry == Complex(0.0, 0.0)) continue;
      off += real ? -entry.real() : std::abs(entry);
      if (u < v) edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), -entry});
    }
    loops[u] = rho.entries(u, u).real() - off;
  }
  return WeightedGraph::from_edges(rho.dims, kind, std::move(edges), std::move(loops));
}

bool is_pure_graph(const WeightedGraph& g, const Tolerances& tol) {
  auto support = support_vertices(g, tol);
  if (support.empty()) return false;

  // every pair of support vertices adjacent
  std::size_t strong_edges = 0;
  for (const auto& e : g.edges())
    if (std::abs(e.w) > tol.weight) ++strong_edges;
  const std::size_t n = support.size();
  if (strong_edges != n * (n - 1) / 2) return false;

  auto degrees = degree_matrix(g);
  double total = degrees.degree_sum();
  if (!(std::abs(total) > 0.0)) return false;
  double lhs = 0.0;
  for (double d : degrees.diag) lhs += d * d;
  for (const auto& e : g.edges()) lhs += 2.0 * std::norm(e.w);
  return std::abs(lhs / (total * total) - 1.0) <= tol.purity;
}

double quadratic_form(const WeightedGraph& g, const Eigen::VectorXd& x) {
  if (!g.is_real()) throw Error(ErrorCode::ComplexGraph, "quadratic form needs real weights");
  if (g.has_loops()) throw Error(ErrorCode::HasLoops, "quadratic form needs a loopless graph");
  if (static_cast<std::size_t>(x.size()) != g.vertex_count())
    throw Error(ErrorCode::SizeMismatch, "vector length differs from vertex count");
  double sum = 0.0;
  for (const auto& e : g.edges()) {
    double diff = x[static_cast<Eigen::Index>(e.u)] - x[static_cast<Eigen::Index>(e.v)];
    sum += e.w.real() * diff * diff;
  }
  return sum;
}

}  // namespace graphsep
