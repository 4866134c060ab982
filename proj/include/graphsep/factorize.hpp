#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graphsep/graph.hpp"

namespace graphsep {

/// Clique of a pure-state graph laid out as rows (distinct s parts) by
/// columns (distinct t parts). Entries are s- and t-indices of the cut.
struct CliqueGrid {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t n = 0;

  std::size_t p() const { return rows.size(); }
  std::size_t q() const { return cols.size(); }
  /// n == p * q, i.e. the clique is the full product rows x cols.
  bool is_lattice() const { return rows.size() * cols.size() == n; }
};

/// Throws NotPure.
CliqueGrid clique_grid(const WeightedGraph& g, const Partition& p, const Tolerances& tol = {});

struct PureSplit {
  WeightedGraph s_factor;  // parts p.s(), degree sum 1
  WeightedGraph t_factor;  // parts p.t(), degree sum of the input
};

/// Factor graphs with modified_tensor_product(s_factor, t_factor) carrying
/// the same density matrix as g, or empty when g does not factor across p.
/// Throws NotPure.
std::optional<PureSplit> split_pure(const WeightedGraph& g, const Partition& p,
                                    const Tolerances& tol = {});

/// Weight split of a C-set pair a1 = a(e), a2 = a(T_s e), with e oriented
/// (v_s,v_t) -> (w_s,w_t) and T_s e oriented (v_s,w_t) -> (w_s,v_t).
/// The factor edges carry phases (theta1 + theta2)/2 and (theta1 - theta2)/2,
/// each fixed up to pi.
struct PhaseSplit {
  double modulus;
  double phi_s;
  double phi_t;
};
PhaseSplit split_phases(Complex a1, Complex a2);

// ---------------------------------------------------------------------------
// full factorization

struct FactorNode {
  std::vector<int> parts;       // original 1-based part indices, ascending
  WeightedGraph graph;          // on `parts`, in that order
  std::vector<int> split_s;     // original indices sent left; empty for a leaf
  std::vector<FactorNode> children;

  bool is_leaf() const { return children.empty(); }
};

struct LevelStats {
  std::vector<int> parts;
  std::size_t clique_size = 0;
  std::size_t largest_prime = 1;
  int s1 = 1;
  std::size_t evaluations = 0;  // degree-criterion calls in the partition scan
  std::size_t bound = 0;        // sum_{j=s1}^{m-1} C(m, j)
  bool prime_shortcut = false;
};

struct Factorization {
  FactorNode root;
  std::vector<LevelStats> levels;  // pre-order, one entry per internal or scanned node
};

enum class ScanPolicy { Serial, Parallel };

/// Throws NotPure.
Factorization full_factorization(const WeightedGraph& g, const Tolerances& tol = {},
                                 ScanPolicy policy = ScanPolicy::Parallel);

/// Graph over all parts in original order, rebuilt from the leaves with the
/// modified tensor product.
WeightedGraph reassemble(const FactorNode& node, const Tolerances& tol = {});

std::vector<const FactorNode*> leaves(const FactorNode& node);

// number-theory helpers ------------------------------------------------------

/// Prime factors, descending, with multiplicity. Empty for n < 2.
std::vector<std::size_t> prime_factors(std::size_t n);

/// Least s1 > 0 with the product of the s1 largest dims >= prime.
int least_covering_parts(const Dims& dims, std::size_t prime);

/// C(m, s1) + ... + C(m, m-1).
std::size_t scan_bound(int m, int s1);

/// Candidate cuts with s1 <= |s| <= m-1 in canonical order, skipping a cut
/// whose complement already appeared.
std::vector<Partition> scan_candidates(int m, int s1);

// partition scan -------------------------------------------------------------

struct ScanResult {
  std::optional<std::size_t> first;  // index into the candidate list
  std::size_t evaluations = 0;
};

/// Reference scan: candidates in order, stop at the first that satisfies the
/// degree criterion and splits.
ScanResult scan_serial(const WeightedGraph& g, std::span<const Partition> candidates,
                       const Tolerances& tol = {});

/// OpenMP scan over fixed-size blocks; picks the same candidate as
/// scan_serial and evaluates a thread-count independent number of cuts.
ScanResult scan_parallel(const WeightedGraph& g, std::span<const Partition> candidates,
                         const Tolerances& tol = {});

/// Degree criterion at every cut, evaluated concurrently; order preserved.
std::vector<char> criterion_at_all(const WeightedGraph& g, std::span<const Partition> cuts,
                                   const Tolerances& tol = {});

}  // namespace graphsep
