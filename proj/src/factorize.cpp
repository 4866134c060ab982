#include "graphsep/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "graphsep/errors.hpp"
#include "graphsep/laplacian.hpp"
#include "graphsep/products.hpp"

namespace graphsep {

CliqueGrid clique_grid(const WeightedGraph& g, const Partition& p, const Tolerances& tol) {
  if (!is_pure_graph(g, tol)) throw Error(ErrorCode::NotPure, "graph is not a pure-state graph");
  CutIndexer cut(g.dims(), p);
  auto support = support_vertices(g, tol);
  std::set<std::size_t> rows, cols;
  for (auto v : support) {
    rows.insert(cut.s_index(v));
    cols.insert(cut.t_index(v));
  }
  return {{rows.begin(), rows.end()}, {cols.begin(), cols.end()}, support.size()};
}

namespace {

double contribution(WeightKind kind, Complex w) {
  return kind == WeightKind::Real ? w.real() : std::abs(w);
}

// Factor graph from summed projections; loops fill each degree up to target.
WeightedGraph factor_graph(const Dims& dims, WeightKind kind, std::vector<Edge> edges,
                           const std::vector<double>& degrees) {
  std::vector<double> loops = degrees;
  for (const auto& e : edges) {
    double c = contribution(kind, e.w);
    loops[e.u] -= c;
    loops[e.v] -= c;
  }
  return WeightedGraph::from_edges(dims, kind, std::move(edges), std::move(loops));
}

// Position of each original part in the concatenation s ++ t, 1-based.
std::vector<int> restore_order(const Partition& p) {
  std::vector<int> order(p.parts());
  int pos = 1;
  for (int i : p.s()) order[i - 1] = pos++;
  for (int i : p.t()) order[i - 1] = pos++;
  return order;
}

}  // namespace

std::optional<PureSplit> split_pure(const WeightedGraph& g, const Partition& p,
                                    const Tolerances& tol) {
  if (!is_pure_graph(g, tol)) throw Error(ErrorCode::NotPure, "graph is not a pure-state graph");
  if (!degree_criterion(g, p, tol)) return std::nullopt;
  auto grid = clique_grid(g, p, tol);
  if (!grid.is_lattice()) return std::nullopt;

  CutIndexer cut(g.dims(), p);
  const auto degrees = degree_matrix(g);
  const double total = degrees.degree_sum();

  std::vector<double> s_deg(cut.s_dim(), 0.0), t_deg(cut.t_dim(), 0.0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    s_deg[cut.s_index(v)] += degrees.diag[v] / total;
    t_deg[cut.t_index(v)] += degrees.diag[v];
  }

  // s factor: edges with a common t part, summed over the columns (cartesian
  // rule a = d_{v_t} b), at unit degree sum
  std::vector<Edge> s_edges;
  for (std::size_t i = 0; i < grid.rows.size(); ++i)
    for (std::size_t j = i + 1; j < grid.rows.size(); ++j) {
      Complex sum = 0.0;
      for (auto col : grid.cols)
        sum += g.weight(cut.join(grid.rows[i], col), cut.join(grid.rows[j], col)).value_or(0.0);
      s_edges.push_back({grid.rows[i], grid.rows[j], sum / total});
    }

  // t factor: edges with a common s part, summed over the rows, at the
  // input's degree sum
  std::vector<Edge> t_edges;
  for (std::size_t i = 0; i < grid.cols.size(); ++i)
    for (std::size_t j = i + 1; j < grid.cols.size(); ++j) {
      Complex sum = 0.0;
      for (auto row : grid.rows)
        sum += g.weight(cut.join(row, grid.cols[i]), cut.join(row, grid.cols[j])).value_or(0.0);
      t_edges.push_back({grid.cols[i], grid.cols[j], sum});
    }

  PureSplit split{factor_graph(cut.s_dims(), g.kind(), std::move(s_edges), s_deg),
                  factor_graph(cut.t_dims(), g.kind(), std::move(t_edges), t_deg)};

  // A degree match without a product structure (zero-sum amplitude patterns)
  // shows up here: the projected factors are mixed or do not reassemble.
  if (!is_pure_graph(split.s_factor, tol) || !is_pure_graph(split.t_factor, tol)) return std::nullopt;
  auto rebuilt = permute_parts(modified_tensor_product(split.s_factor, split.t_factor, tol),
                               restore_order(p));
  double gap = (normalized_laplacian(rebuilt) - normalized_laplacian(g)).cwiseAbs().maxCoeff();
  if (gap > tol.degree) return std::nullopt;
  return split;
}

PhaseSplit split_phases(Complex a1, Complex a2) {
  double theta1 = std::arg(a1);
  double theta2 = std::arg(a2);
  return {std::sqrt(std::abs(a1) * std::abs(a2)), (theta1 + theta2) / 2.0, (theta1 - theta2) / 2.0};
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t f = 2; f * f <= n; ++f)
    while (n % f == 0) {
      out.push_back(f);
      n /= f;
    }
  if (n > 1) out.push_back(n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

int least_covering_parts(const Dims& dims, std::size_t prime) {
  Dims sorted = dims;
  std::sort(sorted.rbegin(), sorted.rend());
  std::size_t product = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    product *= sorted[i];
    if (product >= prime) return static_cast<int>(i + 1);
  }
  return static_cast<int>(sorted.size());
}

std::size_t scan_bound(int m, int s1) {
  std::size_t total = 0;
  for (int j = std::max(s1, 1); j <= m - 1; ++j) {
    std::size_t c = 1;
    for (int i = 1; i <= j; ++i) c = c * (m - j + i) / i;
    total += c;
  }
  return total;
}

std::vector<Partition> scan_candidates(int m, int s1) {
  std::vector<Partition> out;
  std::set<std::vector<int>> seen;
  for (auto& p : subsets_by_size(m, s1, m - 1)) {
    if (seen.count(p.t())) continue;
    seen.insert(p.s());
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

struct Builder {
  const Tolerances& tol;
  ScanPolicy policy;
  std::vector<LevelStats>& levels;

  FactorNode build(WeightedGraph g, std::vector<int> parts) {
    FactorNode node{std::move(parts), std::move(g), {}, {}};
    const int m = node.graph.parts();
    if (m == 1) return node;

    const auto support = support_vertices(node.graph, tol);
    const std::size_t n = support.size();
    const auto primes = prime_factors(n);

    LevelStats stats;
    stats.parts = node.parts;
    stats.clique_size = n;
    stats.largest_prime = primes.empty() ? 1 : primes.front();
    stats.s1 = least_covering_parts(node.graph.dims(), stats.largest_prime);
    stats.bound = scan_bound(m, stats.s1);
    const std::size_t slot = levels.size();
    levels.push_back(stats);

    std::optional<std::pair<Partition, PureSplit>> found;
    if (primes.size() <= 1) {
      // n prime (or 1): the state factors only by splitting off a part whose
      // coordinate is common to every clique vertex
      levels[slot].prime_shortcut = true;
      for (int i = 0; i < m && !found; ++i) {
        const int digit = coords_of(node.graph.dims(), support.front())[i];
        bool common = std::all_of(support.begin(), support.end(), [&](std::size_t v) {
          return coords_of(node.graph.dims(), v)[i] == digit;
        });
        if (!common) continue;
        auto p = Partition::from_s(m, {i + 1});
        ++levels[slot].evaluations;
        if (auto split = split_pure(node.graph, p, tol)) found.emplace(p, std::move(*split));
      }
    } else {
      const auto candidates = scan_candidates(m, levels[slot].s1);
      std::size_t start = 0;
      while (!found && start < candidates.size()) {
        std::span<const Partition> rest(candidates.data() + start, candidates.size() - start);
        auto scan = policy == ScanPolicy::Serial ? scan_serial(node.graph, rest, tol)
                                                 : scan_parallel(node.graph, rest, tol);
        levels[slot].evaluations += scan.evaluations;
        if (!scan.first) break;
        const auto& p = candidates[start + *scan.first];
        if (auto split = split_pure(node.graph, p, tol)) found.emplace(p, std::move(*split));
        start += *scan.first + 1;
      }
    }
    if (!found) return node;

    const auto& [p, split] = *found;
    std::vector<int> s_parts, t_parts;
    for (int i : p.s()) s_parts.push_back(node.parts[i - 1]);
    for (int i : p.t()) t_parts.push_back(node.parts[i - 1]);
    node.split_s = s_parts;
    node.children.push_back(build(split.s_factor, s_parts));
    node.children.push_back(build(split.t_factor, t_parts));
    return node;
  }
};

}  // namespace

Factorization full_factorization(const WeightedGraph& g, const Tolerances& tol, ScanPolicy policy) {
  if (!is_pure_graph(g, tol)) throw Error(ErrorCode::NotPure, "graph is not a pure-state graph");
  Factorization out;
  std::vector<int> parts(g.parts());
  for (int i = 0; i < g.parts(); ++i) parts[i] = i + 1;
  Builder builder{tol, policy, out.levels};
  out.root = builder.build(g, std::move(parts));
  return out;
}

WeightedGraph reassemble(const FactorNode& node, const Tolerances& tol) {
  if (node.is_leaf()) return node.graph;
  const auto& left = node.children[0];
  const auto& right = node.children[1];
  auto combined = modified_tensor_product(reassemble(left, tol), reassemble(right, tol), tol);

  std::vector<int> concat = left.parts;
  concat.insert(concat.end(), right.parts.begin(), right.parts.end());
  std::vector<int> order(node.parts.size());
  for (std::size_t i = 0; i < node.parts.size(); ++i)
    order[i] = static_cast<int>(std::find(concat.begin(), concat.end(), node.parts[i]) - concat.begin()) + 1;
  return permute_parts(combined, order);
}

std::vector<const FactorNode*> leaves(const FactorNode& node) {
  if (node.is_leaf()) return {&node};
  std::vector<const FactorNode*> out;
  for (const auto& child : node.children) {
    auto sub = leaves(child);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace graphsep
