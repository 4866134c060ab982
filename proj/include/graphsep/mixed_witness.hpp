#pragma once

#include <optional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "graphsep/graph.hpp"
#include "graphsep/laplacian.hpp"

namespace graphsep {

/// Certificate that L(G)^{T_s} is not positive semidefinite.
struct WitnessReport {
  Partition partition;
  Eigen::VectorXd gap;    // diagonal of D = Delta(G) - Delta(G^{T_s})
  std::size_t index = 0;  // vertex i with D_ii = b_i < 0
  double k = 0.0;
  Eigen::VectorXd chi;    // all-ones plus k at index
  double value = 0.0;     // <chi| L(G^{T_s}) + D |chi> = k^2 (b_i + d_i) + 2 k b_i
};

enum class VerdictKind { Separable, Entangled, Inconclusive };

enum class InconclusiveReason {
  None,
  CriterionSatisfied,  // D = 0: the criterion is only necessary for mixed states
  OutOfTheoremClass,   // loops or complex weights
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  InconclusiveReason reason = InconclusiveReason::None;
  std::optional<WitnessReport> witness;
};

const char* to_string(VerdictKind kind);
const char* to_string(InconclusiveReason reason);

/// Diagonal of Delta(G) - Delta(G^{T_s}). Throws ComplexGraph or HasLoops.
Eigen::VectorXd degree_gap(const WeightedGraph& g, const Partition& p);

/// (matrix partial transpose of L(G), D + L(G^{T_s})).
std::pair<HermitianMatrix, HermitianMatrix> laplacian_pt_identity(const WeightedGraph& g,
                                                                  const Partition& p);

/// Picks the most negative gap entry (lowest index on ties) and the k that
/// minimizes the quadratic when it opens upward, else k = 1. Throws GapZero
/// when every |D_ii| <= tol.degree.
WitnessReport witness_vector(const WeightedGraph& g, const Partition& p, const Tolerances& tol = {});

/// Degree-criterion verdict for a mixed state at one cut; never throws for
/// graphs whose density matrix exists.
Verdict mixed_verdict(const WeightedGraph& g, const Partition& p, const Tolerances& tol = {});

/// (1/8)[[2,1+i,1+i,0],[1-i,2,2,1+i],[1-i,2,2,1+i],[0,1-i,1-i,2]] on two qubits:
/// separable, fails the degree criterion, passes PPT.
DensityMatrix counterexample_state();

/// 1/2 |y-,y-><y-,y-| + 1/2 |x+,x+><x+,x+| assembled from outer products.
DensityMatrix counterexample_construction();

}  // namespace graphsep
