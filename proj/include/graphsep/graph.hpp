#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphsep/tolerances.hpp"

namespace graphsep {

using Complex = std::complex<double>;
using Dims = std::vector<int>;

enum class WeightKind { Real, Complex };

/// Number of basis vectors, d_1 * ... * d_m.
std::size_t vertex_count(std::span<const int> dims);

/// Mixed-radix index of 0-based coordinates, part 1 most significant.
std::size_t linear_index(std::span<const int> dims, std::span<const int> coords);

/// Inverse of linear_index.
std::vector<int> coords_of(std::span<const int> dims, std::size_t index);

/// 1-based coordinates of a basis vector, as they appear in graph files.
struct VertexLabel {
  std::vector<int> coords;

  auto operator<=>(const VertexLabel&) const = default;
};

/// Validates a label against dims and returns its linear index.
std::size_t index_of(std::span<const int> dims, const VertexLabel& label);
VertexLabel label_of(std::span<const int> dims, std::size_t index);

/// An (s, t) bipartition of the parts {1..m}. Both sides nonempty; stored
/// sorted. Ordered by (|s|, lexicographic s).
class Partition {
 public:
  /// Throws InvalidPartition for empty, full, duplicate or out-of-range s.
  static Partition from_s(int parts, std::vector<int> s);

  int parts() const noexcept { return parts_; }
  const std::vector<int>& s() const noexcept { return s_; }
  const std::vector<int>& t() const noexcept { return t_; }

  /// The same cut with the roles of s and t exchanged.
  Partition swapped() const;

  bool operator==(const Partition& other) const {
    return parts_ == other.parts_ && s_ == other.s_;
  }
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  int parts_ = 0;
  std::vector<int> s_;
  std::vector<int> t_;
};

/// All subsets s with min_size <= |s| <= max_size in canonical order.
std::vector<Partition> subsets_by_size(int parts, int min_size, int max_size);

/// One representative per unordered cut: the canonically smaller of {s, t}.
std::vector<Partition> all_bipartitions(int parts);

/// Splits linear vertex indices into (s-index, t-index) pairs for one cut.
class CutIndexer {
 public:
  CutIndexer(const Dims& dims, const Partition& partition);

  std::size_t s_index(std::size_t v) const { return s_index_[v]; }
  std::size_t t_index(std::size_t v) const { return t_index_[v]; }
  std::size_t join(std::size_t s, std::size_t t) const { return join_[s * t_dim_ + t]; }

  std::size_t s_dim() const noexcept { return s_dim_; }
  std::size_t t_dim() const noexcept { return t_dim_; }
  const Dims& s_dims() const noexcept { return s_dims_; }
  const Dims& t_dims() const noexcept { return t_dims_; }

  /// Image of the vertex pair {u, v} under T_s, as (u', v') with
  /// u' = (v_s, u_t) and v' = (u_s, v_t).
  std::pair<std::size_t, std::size_t> transpose_pair(std::size_t u, std::size_t v) const {
    return {join(s_index_[v], t_index_[u]), join(s_index_[u], t_index_[v])};
  }

 private:
  Dims s_dims_;
  Dims t_dims_;
  std::size_t s_dim_ = 1;
  std::size_t t_dim_ = 1;
  std::vector<std::size_t> s_index_;
  std::vector<std::size_t> t_index_;
  std::vector<std::size_t> join_;
};

/// Stored with u < v. The weight is a(u -> v); a(v -> u) is its conjugate.
struct Edge {
  std::size_t u;
  std::size_t v;
  Complex w;
  bool operator==(const Edge&) const = default;
};

/// Weighted graph on the product basis. Edge weights are real or complex
/// according to kind(); loop weights are always real. Zero weights are never
/// stored.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(Dims dims, WeightKind kind);

  /// Normalizing constructor: orients every edge low -> high (conjugating the
  /// weight when flipped), sums duplicates, drops zeros. Throws on invalid
  /// endpoints, loops passed as edges, complex weights in a Real graph,
  /// non-finite weights, or a loop vector of the wrong size.
  static WeightedGraph from_edges(Dims dims, WeightKind kind, std::vector<Edge> edges,
                                  std::vector<double> loops = {});

  const Dims& dims() const noexcept { return dims_; }
  int parts() const noexcept { return static_cast<int>(dims_.size()); }
  WeightKind kind() const noexcept { return kind_; }
  bool is_real() const noexcept { return kind_ == WeightKind::Real; }
  std::size_t vertex_count() const noexcept { return loops_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::vector<double>& loops() const noexcept { return loops_; }
  double loop(std::size_t v) const { return loops_.at(v); }
  bool has_loops() const;
  std::size_t loop_count() const;

  /// Oriented weight a(u -> v), empty when the edge is absent.
  std::optional<Complex> weight(std::size_t u, std::size_t v) const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  Dims dims_;
  WeightKind kind_ = WeightKind::Real;
  std::vector<Edge> edges_;   // sorted by (u, v)
  std::vector<double> loops_; // dense, 0 = no loop
};

/// Builds a graph from labelled edges and loops.
WeightedGraph build_graph(const Dims& dims,
                          const std::map<std::pair<VertexLabel, VertexLabel>, Complex>& edges,
                          const std::map<VertexLabel, double>& loops, WeightKind kind);

struct DegreeMatrix {
  std::vector<double> diag;

  double degree_sum() const;
};

/// Real graphs: signed sum of incident weights plus the loop. Complex graphs:
/// sum of moduli plus the loop.
double vertex_degree(const WeightedGraph& g, std::size_t v);
double vertex_degree(const WeightedGraph& g, const VertexLabel& v);
DegreeMatrix degree_matrix(const WeightedGraph& g);

/// Degrees of the vertices in the partial transpose, computed directly from
/// the edge images without materializing the transposed graph.
DegreeMatrix transposed_degree_matrix(const WeightedGraph& g, const Partition& p);

struct EdgeClasses {
  std::vector<Edge> fixed;             // F: edges sharing the s part or the t part
  std::vector<std::size_t> loops;      // F: loop vertices
  std::vector<Edge> crossing;          // C: everything else

  std::size_t fixed_size() const { return fixed.size() + loops.size(); }
  std::size_t crossing_size() const { return crossing.size(); }
};

EdgeClasses classify_edges(const WeightedGraph& g, const Partition& p);

/// T_s applied to the edge set. Loops and F-set edges are fixed points.
/// Weights follow the Hermitian matrix partial transpose, so an edge flipped
/// by T_s carries the conjugate weight.
WeightedGraph partial_transpose_graph(const WeightedGraph& g, const Partition& p);

/// True iff every edge's image is present with equal weight (Real) or equal
/// modulus (Complex), within tol.weight.
bool edge_set_closed(const WeightedGraph& g, const Partition& p, const Tolerances& tol = {});

/// Delta(G) == Delta(G^{T_s}) entrywise within tol.degree.
bool degree_criterion(const WeightedGraph& g, const Partition& p, const Tolerances& tol = {});

/// Vertices with an incident edge or a loop of modulus above tol.weight.
std::vector<std::size_t> support_vertices(const WeightedGraph& g, const Tolerances& tol = {});

}  // namespace graphsep
