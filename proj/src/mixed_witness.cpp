#include "graphsep/mixed_witness.hpp"

#include <cmath>

#include "graphsep/errors.hpp"
#include "graphsep/oracle.hpp"

namespace graphsep {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Separable: return "Separable";
    case VerdictKind::Entangled: return "Entangled";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

const char* to_string(InconclusiveReason reason) {
  switch (reason) {
    case InconclusiveReason::None: return "None";
    case InconclusiveReason::CriterionSatisfied: return "CriterionSatisfied";
    case InconclusiveReason::OutOfTheoremClass: return "OutOfTheoremClass";
  }
  return "Unknown";
}

namespace {

void require_real_loopless(const WeightedGraph& g) {
  if (!g.is_real()) throw Error(ErrorCode::ComplexGraph, "witness needs real edge weights");
  if (g.has_loops()) throw Error(ErrorCode::HasLoops, "witness needs a loopless graph");
}

}  // namespace

Eigen::VectorXd degree_gap(const WeightedGraph& g, const Partition& p) {
  require_real_loopless(g);
  auto before = degree_matrix(g);
  auto after = transposed_degree_matrix(g, p);
  Eigen::VectorXd gap(static_cast<Eigen::Index>(before.diag.size()));
  for (std::size_t v = 0; v < before.diag.size(); ++v) gap[static_cast<Eigen::Index>(v)] = before.diag[v] - after.diag[v];
  return gap;
}

std::pair<HermitianMatrix, HermitianMatrix> laplacian_pt_identity(const WeightedGraph& g,
                                                                  const Partition& p) {
  Eigen::VectorXd gap = degree_gap(g, p);
  HermitianMatrix lhs = oracle::matrix_partial_transpose(combinatorial_laplacian(g), g.dims(), p);
  HermitianMatrix rhs = combinatorial_laplacian(partial_transpose_graph(g, p));
  rhs.diagonal() += gap.cast<Complex>();
  return {std::move(lhs), std::move(rhs)};
}

WitnessReport witness_vector(const WeightedGraph& g, const Partition& p, const Tolerances& tol) {
  Eigen::VectorXd gap = degree_gap(g, p);
  if (gap.cwiseAbs().maxCoeff() <= tol.degree)
    throw Error(ErrorCode::GapZero, "degree matrices agree; no witness exists");

  Eigen::Index i = 0;
  gap.minCoeff(&i);  // first minimum on ties
  const double b = gap[i];
  const double degree_t = transposed_degree_matrix(g, p).diag[static_cast<std::size_t>(i)];
  const double curvature = b + degree_t;
  const double k = curvature > 0.0 ? -b / curvature : 1.0;

  WitnessReport report{p, gap, static_cast<std::size_t>(i), k, Eigen::VectorXd::Ones(gap.size()), 0.0};
  report.chi[i] += k;
  report.value = k * k * curvature + 2.0 * k * b;
  return report;
}

Verdict mixed_verdict(const WeightedGraph& g, const Partition& p, const Tolerances& tol) {
  if (!g.is_real() || g.has_loops())
    return {VerdictKind::Inconclusive, InconclusiveReason::OutOfTheoremClass, std::nullopt};
  Eigen::VectorXd gap = degree_gap(g, p);
  if (gap.cwiseAbs().maxCoeff() <= tol.degree)
    return {VerdictKind::Inconclusive, InconclusiveReason::CriterionSatisfied, std::nullopt};
  return {VerdictKind::Entangled, InconclusiveReason::None, witness_vector(g, p, tol)};
}

DensityMatrix counterexample_state() {
  using C = Complex;
  Eigen::MatrixXcd m(4, 4);
  m << C(2, 0), C(1, 1), C(1, 1), C(0, 0),
       C(1, -1), C(2, 0), C(2, 0), C(1, 1),
       C(1, -1), C(2, 0), C(2, 0), C(1, 1),
       C(0, 0), C(1, -1), C(1, -1), C(2, 0);
  return {{2, 2}, m / 8.0};
}

DensityMatrix counterexample_construction() {
  const double r = 1.0 / std::sqrt(2.0);
  oracle::StateVector y_minus{{2}, Eigen::VectorXcd(2)};
  y_minus.amplitudes << Complex(r, 0), Complex(0, -r);
  oracle::StateVector x_plus{{2}, Eigen::VectorXcd(2)};
  x_plus.amplitudes << Complex(r, 0), Complex(r, 0);

  auto yy = oracle::pure_density(oracle::kron(y_minus, y_minus));
  auto xx = oracle::pure_density(oracle::kron(x_plus, x_plus));
  return {{2, 2}, 0.5 * yy.entries + 0.5 * xx.entries};
}

}  // namespace graphsep
