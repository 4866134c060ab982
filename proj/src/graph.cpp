#include "graphsep/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "graphsep/errors.hpp"

namespace graphsep {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::LoopAsEdge: return "LoopAsEdge";
    case ErrorCode::ComplexWeightInRealGraph: return "ComplexWeightInRealGraph";
    case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ZeroDegreeSum: return "ZeroDegreeSum";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::ComplexGraph: return "ComplexGraph";
    case ErrorCode::HasLoops: return "HasLoops";
    case ErrorCode::GapZero: return "GapZero";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Tolerances Tolerances::with_override(double eps) {
  Tolerances tol;
  tol.degree = eps;
  tol.purity = eps;
  tol.psd = eps;
  tol.weight = eps / 10.0;
  return tol;
}

std::optional<double> tolerance_from_env() {
  const char* raw = std::getenv("GRAPHSEP_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  double eps = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(eps > 0.0) || !std::isfinite(eps)) return std::nullopt;
  return eps;
}

Tolerances Tolerances::from_env() {
  if (auto eps = tolerance_from_env()) return with_override(*eps);
  return {};
}

// ---------------------------------------------------------------------------
// indexing

std::size_t vertex_count(std::span<const int> dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

std::size_t linear_index(std::span<const int> dims, std::span<const int> coords) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + coords[i];
  return idx;
}

std::vector<int> coords_of(std::span<const int> dims, std::size_t index) {
  std::vector<int> coords(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    coords[i] = static_cast<int>(index % dims[i]);
    index /= dims[i];
  }
  return coords;
}

std::size_t index_of(std::span<const int> dims, const VertexLabel& label) {
  if (label.coords.size() != dims.size())
    throw Error(ErrorCode::InvalidLabel, "label has " + std::to_string(label.coords.size()) +
                                             " coordinates, expected " + std::to_string(dims.size()));
  std::vector<int> zero_based(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    int c = label.coords[i];
    if (c < 1 || c > dims[i])
      throw Error(ErrorCode::InvalidLabel, "coordinate " + std::to_string(c) + " of part " +
                                               std::to_string(i + 1) + " outside 1.." +
                                               std::to_string(dims[i]));
    zero_based[i] = c - 1;
  }
  return linear_index(dims, zero_based);
}

VertexLabel label_of(std::span<const int> dims, std::size_t index) {
  VertexLabel label{coords_of(dims, index)};
  for (int& c : label.coords) ++c;
  return label;
}

// ---------------------------------------------------------------------------
// partitions

Partition Partition::from_s(int parts, std::vector<int> s) {
  if (parts < 2) throw Error(ErrorCode::InvalidPartition, "a cut needs at least two parts");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(ErrorCode::InvalidPartition, "duplicate part index");
  if (s.empty() || static_cast<int>(s.size()) >= parts)
    throw Error(ErrorCode::InvalidPartition, "s must be a nonempty proper subset");
  if (s.front() < 1 || s.back() > parts)
    throw Error(ErrorCode::InvalidPartition, "part index outside 1.." + std::to_string(parts));

  Partition p;
  p.parts_ = parts;
  p.s_ = std::move(s);
  for (int i = 1; i <= parts; ++i)
    if (!std::binary_search(p.s_.begin(), p.s_.end(), i)) p.t_.push_back(i);
  return p;
}

Partition Partition::swapped() const { return from_s(parts_, t_); }

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = parts_ <=> other.parts_; c != 0) return c;
  if (auto c = s_.size() <=> other.s_.size(); c != 0) return c;
  return s_ <=> other.s_;
}

std::vector<Partition> subsets_by_size(int parts, int min_size, int max_size) {
  std::vector<Partition> out;
  min_size = std::max(min_size, 1);
  max_size = std::min(max_size, parts - 1);
  for (int k = min_size; k <= max_size; ++k) {
    // lexicographic k-combinations of 1..parts
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 1);
    while (true) {
      out.push_back(Partition::from_s(parts, comb));
      int i = k - 1;
      while (i >= 0 && comb[i] == parts - k + i + 1) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Partition> all_bipartitions(int parts) {
  std::vector<Partition> out;
  for (auto& p : subsets_by_size(parts, 1, parts - 1)) {
    auto q = p.swapped();
    if (!(q < p)) out.push_back(std::move(p));
  }
  return out;
}

CutIndexer::CutIndexer(const Dims& dims, const Partition& partition) {
  if (static_cast<int>(dims.size()) != partition.parts())
    throw Error(ErrorCode::InvalidPartition, "partition is for " +
                                                 std::to_string(partition.parts()) +
                                                 " parts, graph has " + std::to_string(dims.size()));
  for (int i : partition.s()) s_dims_.push_back(dims[i - 1]);
  for (int i : partition.t()) t_dims_.push_back(dims[i - 1]);
  s_dim_ = graphsep::vertex_count(s_dims_);
  t_dim_ = graphsep::vertex_count(t_dims_);

  const std::size_t n = graphsep::vertex_count(dims);
  s_index_.resize(n);
  t_index_.resize(n);
  join_.resize(n);
  std::vector<int> sc(s_dims_.size()), tc(t_dims_.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto c = coords_of(dims, v);
    for (std::size_t i = 0; i < sc.size(); ++i) sc[i] = c[partition.s()[i] - 1];
    for (std::size_t i = 0; i < tc.size(); ++i) tc[i] = c[partition.t()[i] - 1];
    s_index_[v] = linear_index(s_dims_, sc);
    t_index_[v] = linear_index(t_dims_, tc);
    join_[s_index_[v] * t_dim_ + t_index_[v]] = v;
  }
}

// ---------------------------------------------------------------------------
// graphs

WeightedGraph::WeightedGraph(Dims dims, WeightKind kind) : dims_(std::move(dims)), kind_(kind) {
  for (int d : dims_)
    if (d < 1) throw Error(ErrorCode::InvalidInput, "part dimensions must be positive");
  loops_.assign(graphsep::vertex_count(dims_), 0.0);
}

WeightedGraph WeightedGraph::from_edges(Dims dims, WeightKind kind, std::vector<Edge> edges,
                                        std::vector<double> loops) {
  WeightedGraph g(std::move(dims), kind);
  const std::size_t n = g.vertex_count();
  if (!loops.empty()) {
    if (loops.size() != n)
      throw Error(ErrorCode::SizeMismatch, "loop vector has " + std::to_string(loops.size()) +
                                               " entries, expected " + std::to_string(n));
    for (double l : loops)
      if (!std::isfinite(l)) throw Error(ErrorCode::NonFiniteWeight, "loop weight");
    g.loops_ = std::move(loops);
  }

  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::InvalidLabel, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::LoopAsEdge, "edge with identical endpoints");
    if (!std::isfinite(e.w.real()) || !std::isfinite(e.w.imag()))
      throw Error(ErrorCode::NonFiniteWeight, "edge weight");
    if (kind == WeightKind::Real && e.w.imag() != 0.0)
      throw Error(ErrorCode::ComplexWeightInRealGraph, "edge weight has an imaginary part");
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      e.w = std::conj(e.w);
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

  // merge duplicates by summation
  for (std::size_t i = 0; i < edges.size();) {
    Edge merged = edges[i];
    std::size_t j = i + 1;
    while (j < edges.size() && edges[j].u == merged.u && edges[j].v == merged.v)
      merged.w += edges[j++].w;
    if (merged.w != Complex(0.0, 0.0)) g.edges_.push_back(merged);
    i = j;
  }
  return g;
}

bool WeightedGraph::has_loops() const {
  return std::any_of(loops_.begin(), loops_.end(), [](double l) { return l != 0.0; });
}

std::size_t WeightedGraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(loops_.begin(), loops_.end(), [](double l) { return l != 0.0; }));
}

std::optional<Complex> WeightedGraph::weight(std::size_t u, std::size_t v) const {
  bool flipped = u > v;
  if (flipped) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return flipped ? std::conj(it->w) : it->w;
}

WeightedGraph build_graph(const Dims& dims,
                          const std::map<std::pair<VertexLabel, VertexLabel>, Complex>& edges,
                          const std::map<VertexLabel, double>& loops, WeightKind kind) {
  const std::size_t n = vertex_count(dims);
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [ends, w] : edges)
    list.push_back({index_of(dims, ends.first), index_of(dims, ends.second), w});
  std::vector<double> loop_weights(n, 0.0);
  for (const auto& [v, w] : loops) loop_weights[index_of(dims, v)] += w;
  return WeightedGraph::from_edges(dims, kind, std::move(list), std::move(loop_weights));
}

// ---------------------------------------------------------------------------
// degrees

namespace {

inline double edge_contribution(WeightKind kind, Complex w) {
  return kind == WeightKind::Real ? w.real() : std::abs(w);
}

}  // namespace

double DegreeMatrix::degree_sum() const { return std::accumulate(diag.begin(), diag.end(), 0.0); }

double vertex_degree(const WeightedGraph& g, std::size_t v) {
  double d = g.loop(v);
  for (const auto& e : g.edges())
    if (e.u == v || e.v == v) d += edge_contribution(g.kind(), e.w);
  return d;
}

double vertex_degree(const WeightedGraph& g, const VertexLabel& v) {
  return vertex_degree(g, index_of(g.dims(), v));
}

DegreeMatrix degree_matrix(const WeightedGraph& g) {
  DegreeMatrix m{g.loops()};
  for (const auto& e : g.edges()) {
    double c = edge_contribution(g.kind(), e.w);
    m.diag[e.u] += c;
    m.diag[e.v] += c;
  }
  return m;
}

DegreeMatrix transposed_degree_matrix(const WeightedGraph& g, const Partition& p) {
  CutIndexer cut(g.dims(), p);
  DegreeMatrix m{g.loops()};
  for (const auto& e : g.edges()) {
    auto [u, v] = cut.transpose_pair(e.u, e.v);
    double c = edge_contribution(g.kind(), e.w);
    m.diag[u] += c;
    m.diag[v] += c;
  }
  return m;
}

EdgeClasses classify_edges(const WeightedGraph& g, const Partition& p) {
  CutIndexer cut(g.dims(), p);
  EdgeClasses out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.loop(v) != 0.0) out.loops.push_back(v);
  for (const auto& e : g.edges()) {
    bool same_s = cut.s_index(e.u) == cut.s_index(e.v);
    bool same_t = cut.t_index(e.u) == cut.t_index(e.v);
    (same_s || same_t ? out.fixed : out.crossing).push_back(e);
  }
  return out;
}

WeightedGraph partial_transpose_graph(const WeightedGraph& g, const Partition& p) {
  CutIndexer cut(g.dims(), p);
  std::vector<Edge> image;
  image.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    auto [u, v] = cut.transpose_pair(e.u, e.v);
    image.push_back({u, v, e.w});  // from_edges conjugates when it reorients
  }
  return WeightedGraph::from_edges(g.dims(), g.kind(), std::move(image), g.loops());
}

bool edge_set_closed(const WeightedGraph& g, const Partition& p, const Tolerances& tol) {
  CutIndexer cut(g.dims(), p);
  for (const auto& e : g.edges()) {
    auto [u, v] = cut.transpose_pair(e.u, e.v);
    auto w = g.weight(u, v);
    if (!w) {
      if (std::abs(e.w) > tol.weight) return false;
      continue;
    }
    double gap = g.is_real() ? std::abs(w->real() - e.w.real()) : std::abs(std::abs(*w) - std::abs(e.w));
    if (gap > tol.weight) return false;
  }
  return true;
}

bool degree_criterion(const WeightedGraph& g, const Partition& p, const Tolerances& tol) {
  auto before = degree_matrix(g);
  auto after = transposed_degree_matrix(g, p);
  for (std::size_t v = 0; v < before.diag.size(); ++v)
    if (std::abs(before.diag[v] - after.diag[v]) > tol.degree) return false;
  return true;
}

std::vector<std::size_t> support_vertices(const WeightedGraph& g, const Tolerances& tol) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (std::abs(g.loop(v)) > tol.weight) mark[v] = 1;
  for (const auto& e : g.edges())
    if (std::abs(e.w) > tol.weight) mark[e.u] = mark[e.v] = 1;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < mark.size(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

}  // namespace graphsep
