#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphsep/graph.hpp"
#include "graphsep/laplacian.hpp"

// Dense linear-algebra ground truth. Nothing in here goes through the graph
// representation; it works on amplitudes and matrices directly.
namespace graphsep::oracle {

struct StateVector {
  Dims dims;
  Eigen::VectorXcd amplitudes;
};

/// Ascending eigenvalues. Throws NotHermitian beyond tol.weight.
std::vector<double> eigenvalues_hermitian(const HermitianMatrix& h, const Tolerances& tol = {});

/// ((v_s,v_t),(w_s,w_t)) <- ((w_s,v_t),(v_s,w_t)).
HermitianMatrix matrix_partial_transpose(const HermitianMatrix& h, const Dims& dims,
                                         const Partition& p);

double min_partial_transpose_eigenvalue(const DensityMatrix& rho, const Partition& p);

/// True iff rho^{T_s} has no eigenvalue below -tol.psd.
bool ppt_check(const DensityMatrix& rho, const Partition& p, const Tolerances& tol = {});

/// Singular values of the amplitudes reshaped to d_s x d_t, descending.
std::vector<double> schmidt_coefficients(const StateVector& psi, const Partition& p);

/// Leading singular pair when the second singular value is at most tol.svd
/// times the first. psi ~ first (x) second up to a global phase.
std::optional<std::pair<StateVector, StateVector>> rank_one_reshape(const StateVector& psi,
                                                                    const Partition& p,
                                                                    const Tolerances& tol = {});

DensityMatrix pure_density(const StateVector& psi);

/// Kronecker product of state vectors / matrices, first argument's parts first.
StateVector kron(const StateVector& a, const StateVector& b);
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

/// Tr(rho sigma); for a pure rho this is the fidelity.
double overlap(const DensityMatrix& rho, const DensityMatrix& sigma);

double purity(const DensityMatrix& rho);

// Named states --------------------------------------------------------------

/// 0-based coordinates.
StateVector basis_state(const Dims& dims, const std::vector<int>& coords);
StateVector ghz_state(int parts);
StateVector w_state(int parts);
/// (|00> + |11>)/sqrt 2.
StateVector bell_state();

// Generators; deterministic in the seed -------------------------------------

/// Haar-random pure state via normalized complex Gaussians.
StateVector random_pure(const Dims& dims, std::uint64_t seed);

/// Tensor product of independent Haar states, one per group of consecutive
/// parts; group_sizes must sum to dims.size(). Empty means one group per part.
StateVector random_pure_product(const Dims& dims, const std::vector<int>& group_sizes,
                                std::uint64_t seed);

/// Real Gaussian amplitudes, normalized.
StateVector random_real_pure(const Dims& dims, std::uint64_t seed);

/// Each vertex pair becomes an edge with probability density, weight
/// uniform in (0, 1]. No loops. Retries until the graph has an edge.
WeightedGraph random_loopless_real_graph(const Dims& dims, double density, std::uint64_t seed);

/// Uniform mixture of `rank` random pure states (real amplitudes when real).
DensityMatrix random_density(const Dims& dims, int rank, std::uint64_t seed, bool real = false);

}  // namespace graphsep::oracle
