#include "graphsep/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numeric>
#include <random>

#include "graphsep/errors.hpp"

namespace graphsep::oracle {

namespace {

// s/t coordinates of every basis index, kept local to the oracle.
struct Reshape {
  std::size_t s_dim = 1;
  std::size_t t_dim = 1;
  std::vector<std::size_t> row;  // s-index of basis vector
  std::vector<std::size_t> col;  // t-index of basis vector
};

Reshape reshape_indices(const Dims& dims, const Partition& p) {
  if (static_cast<int>(dims.size()) != p.parts())
    throw Error(ErrorCode::InvalidPartition, "partition does not match dims");
  const std::size_t m = dims.size();
  std::vector<char> in_s(m, 0);
  for (int i : p.s()) in_s[i - 1] = 1;

  Reshape r;
  std::size_t total = 1;
  for (int d : dims) total *= d;
  r.row.resize(total);
  r.col.resize(total);
  for (std::size_t i = 0; i < m; ++i) (in_s[i] ? r.s_dim : r.t_dim) *= dims[i];

  for (std::size_t idx = 0; idx < total; ++idx) {
    // decode least significant part first, weighting s and t digits separately
    std::size_t rest = idx, s = 0, t = 0, s_scale = 1, t_scale = 1;
    for (std::size_t i = m; i-- > 0;) {
      std::size_t digit = rest % dims[i];
      rest /= dims[i];
      if (in_s[i]) {
        s += digit * s_scale;
        s_scale *= dims[i];
      } else {
        t += digit * t_scale;
        t_scale *= dims[i];
      }
    }
    r.row[idx] = s;
    r.col[idx] = t;
  }
  return r;
}

Eigen::VectorXcd gaussian_vector(std::size_t n, std::mt19937_64& rng, bool real) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double re = normal(rng);
    double im = real ? 0.0 : normal(rng);
    v[i] = {re, im};
  }
  return v.normalized();
}

}  // namespace

std::vector<double> eigenvalues_hermitian(const HermitianMatrix& h, const Tolerances& tol) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::SizeMismatch, "matrix is not square");
  if (h.size() > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > tol.weight)
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

HermitianMatrix matrix_partial_transpose(const HermitianMatrix& h, const Dims& dims,
                                         const Partition& p) {
  const auto r = reshape_indices(dims, p);
  const auto n = static_cast<Eigen::Index>(r.row.size());
  if (h.rows() != n || h.cols() != n)
    throw Error(ErrorCode::SizeMismatch, "matrix size does not match dims");

  std::vector<std::size_t> at(r.s_dim * r.t_dim);
  for (std::size_t idx = 0; idx < r.row.size(); ++idx) at[r.row[idx] * r.t_dim + r.col[idx]] = idx;

  HermitianMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      std::size_t src_i = at[r.row[j] * r.t_dim + r.col[i]];
      std::size_t src_j = at[r.row[i] * r.t_dim + r.col[j]];
      out(i, j) = h(static_cast<Eigen::Index>(src_i), static_cast<Eigen::Index>(src_j));
    }
  return out;
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho, const Partition& p) {
  auto pt = matrix_partial_transpose(rho.entries, rho.dims, p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool ppt_check(const DensityMatrix& rho, const Partition& p, const Tolerances& tol) {
  return min_partial_transpose_eigenvalue(rho, p) >= -tol.psd;
}

namespace {

Eigen::MatrixXcd reshaped(const StateVector& psi, const Partition& p, Reshape& r) {
  r = reshape_indices(psi.dims, p);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(r.s_dim),
                                              static_cast<Eigen::Index>(r.t_dim));
  for (std::size_t idx = 0; idx < r.row.size(); ++idx)
    m(static_cast<Eigen::Index>(r.row[idx]), static_cast<Eigen::Index>(r.col[idx])) =
        psi.amplitudes[static_cast<Eigen::Index>(idx)];
  return m;
}

Dims side_dims(const Dims& dims, const std::vector<int>& parts) {
  Dims out;
  for (int i : parts) out.push_back(dims[i - 1]);
  return out;
}

}  // namespace

std::vector<double> schmidt_coefficients(const StateVector& psi, const Partition& p) {
  Reshape r;
  auto m = reshaped(psi, p, r);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

std::optional<std::pair<StateVector, StateVector>> rank_one_reshape(const StateVector& psi,
                                                                    const Partition& p,
                                                                    const Tolerances& tol) {
  Reshape r;
  auto m = reshaped(psi, p, r);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() > 1 && sv[1] > tol.svd * sv[0]) return std::nullopt;

  StateVector left{side_dims(psi.dims, p.s()), svd.matrixU().col(0)};
  StateVector right{side_dims(psi.dims, p.t()), svd.matrixV().col(0).conjugate() * sv[0]};
  right.amplitudes.normalize();
  return std::pair{std::move(left), std::move(right)};
}

DensityMatrix pure_density(const StateVector& psi) {
  return {psi.dims, psi.amplitudes * psi.amplitudes.adjoint()};
}

StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out;
  out.dims = a.dims;
  out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
  out.amplitudes.resize(a.amplitudes.size() * b.amplitudes.size());
  for (Eigen::Index i = 0; i < a.amplitudes.size(); ++i)
    out.amplitudes.segment(i * b.amplitudes.size(), b.amplitudes.size()) = a.amplitudes[i] * b.amplitudes;
  return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  DensityMatrix out;
  out.dims = a.dims;
  out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
  const auto na = a.entries.rows(), nb = b.entries.rows();
  out.entries.resize(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j) out.entries.block(i * nb, j * nb, nb, nb) = a.entries(i, j) * b.entries;
  return out;
}

double overlap(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return (rho.entries * sigma.entries).trace().real();
}

double purity(const DensityMatrix& rho) { return overlap(rho, rho); }

StateVector basis_state(const Dims& dims, const std::vector<int>& coords) {
  StateVector psi{dims, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(vertex_count(dims)))};
  psi.amplitudes[static_cast<Eigen::Index>(linear_index(dims, coords))] = 1.0;
  return psi;
}

StateVector ghz_state(int parts) {
  Dims dims(parts, 2);
  StateVector psi{dims, Eigen::VectorXcd::Zero(Eigen::Index{1} << parts)};
  psi.amplitudes[0] = psi.amplitudes[psi.amplitudes.size() - 1] = 1.0 / std::sqrt(2.0);
  return psi;
}

StateVector w_state(int parts) {
  Dims dims(parts, 2);
  StateVector psi{dims, Eigen::VectorXcd::Zero(Eigen::Index{1} << parts)};
  for (int i = 0; i < parts; ++i) psi.amplitudes[Eigen::Index{1} << i] = 1.0 / std::sqrt(double(parts));
  return psi;
}

StateVector bell_state() {
  StateVector psi{{2, 2}, Eigen::VectorXcd::Zero(4)};
  psi.amplitudes[0] = psi.amplitudes[3] = 1.0 / std::sqrt(2.0);
  return psi;
}

StateVector random_pure(const Dims& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return {dims, gaussian_vector(vertex_count(dims), rng, false)};
}

StateVector random_real_pure(const Dims& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return {dims, gaussian_vector(vertex_count(dims), rng, true)};
}

StateVector random_pure_product(const Dims& dims, const std::vector<int>& group_sizes,
                                std::uint64_t seed) {
  std::vector<int> groups = group_sizes;
  if (groups.empty()) groups.assign(dims.size(), 1);
  if (std::accumulate(groups.begin(), groups.end(), 0) != static_cast<int>(dims.size()))
    throw Error(ErrorCode::InvalidInput, "group sizes must add up to the number of parts");

  std::mt19937_64 rng(seed);
  StateVector out{{}, Eigen::VectorXcd::Ones(1)};
  std::size_t next = 0;
  for (int size : groups) {
    if (size < 1) throw Error(ErrorCode::InvalidInput, "group sizes must be positive");
    Dims sub(dims.begin() + next, dims.begin() + next + size);
    next += size;
    out = kron(out, StateVector{sub, gaussian_vector(vertex_count(sub), rng, false)});
  }
  return out;
}

WeightedGraph random_loopless_real_graph(const Dims& dims, double density, std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0))
    throw Error(ErrorCode::InvalidInput, "density must lie in (0, 1]");
  const std::size_t n = vertex_count(dims);
  if (n < 2) throw Error(ErrorCode::InvalidInput, "need at least two vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  while (edges.empty()) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        bool keep = unit(rng) < density;
        double w = 1.0 - unit(rng);  // (0, 1]
        if (keep) edges.push_back({u, v, w});
      }
  }
  return WeightedGraph::from_edges(dims, WeightKind::Real, std::move(edges));
}

DensityMatrix random_density(const Dims& dims, int rank, std::uint64_t seed, bool real) {
  if (rank < 1) throw Error(ErrorCode::InvalidInput, "rank must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t n = vertex_count(dims);
  DensityMatrix rho{dims, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
  for (int k = 0; k < rank; ++k) {
    auto v = gaussian_vector(n, rng, real);
    rho.entries += v * v.adjoint();
  }
  rho.entries /= static_cast<double>(rank);
  // exact Hermitian symmetry
  rho.entries = (0.5 * (rho.entries + rho.entries.adjoint())).eval();
  return rho;
}

}  // namespace graphsep::oracle
