#include <cmath>
#include <limits>

#include "doctest.h"
#include "graphsep/errors.hpp"
#include "graphsep/mixed_witness.hpp"
#include "support.hpp"

using namespace graphsep;
using testing::bell_graph;
using testing::max_abs;
using testing::random_graph;
using testing::state_graph;

namespace {

std::size_t at(const Dims& dims, std::vector<int> one_based) { return index_of(dims, VertexLabel{std::move(one_based)}); }

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("mixed-radix indexing puts part 1 first") {
  Dims dims{2, 3, 2};
  CHECK(vertex_count(dims) == 12);
  CHECK(at(dims, {1, 1, 1}) == 0);
  CHECK(at(dims, {1, 1, 2}) == 1);
  CHECK(at(dims, {1, 2, 1}) == 2);
  CHECK(at(dims, {2, 1, 1}) == 6);
  for (std::size_t v = 0; v < 12; ++v) CHECK(index_of(dims, label_of(dims, v)) == v);
  CHECK(throws_code(ErrorCode::InvalidLabel, [&] { at(dims, {1, 4, 1}); }));
  CHECK(throws_code(ErrorCode::InvalidLabel, [&] { at(dims, {0, 1, 1}); }));
  CHECK(throws_code(ErrorCode::InvalidLabel, [&] { at(dims, {1, 1}); }));
}

TEST_CASE("partitions") {
  auto p = Partition::from_s(4, {3, 1});
  CHECK(p.s() == std::vector<int>{1, 3});
  CHECK(p.t() == std::vector<int>{2, 4});
  CHECK(p.swapped().s() == std::vector<int>{2, 4});
  CHECK(Partition::from_s(3, {3}) < Partition::from_s(3, {1, 2}));
  CHECK(Partition::from_s(3, {1}) < Partition::from_s(3, {2}));

  CHECK(throws_code(ErrorCode::InvalidPartition, [] { Partition::from_s(3, {}); }));
  CHECK(throws_code(ErrorCode::InvalidPartition, [] { Partition::from_s(3, {1, 2, 3}); }));
  CHECK(throws_code(ErrorCode::InvalidPartition, [] { Partition::from_s(3, {1, 1}); }));
  CHECK(throws_code(ErrorCode::InvalidPartition, [] { Partition::from_s(3, {4}); }));

  for (int m = 2; m <= 6; ++m) {
    auto cuts = all_bipartitions(m);
    CHECK(cuts.size() == (std::size_t{1} << (m - 1)) - 1);
    CHECK(std::is_sorted(cuts.begin(), cuts.end()));
    for (const auto& c : cuts) CHECK_FALSE(c.swapped() < c);
  }
  CHECK(all_bipartitions(1).empty());
}

TEST_CASE("cut indexer splits and rejoins") {
  Dims dims{2, 3, 2};
  auto p = Partition::from_s(3, {1, 3});
  CutIndexer cut(dims, p);
  CHECK(cut.s_dim() == 4);
  CHECK(cut.t_dim() == 3);
  for (std::size_t v = 0; v < 12; ++v) {
    CHECK(cut.join(cut.s_index(v), cut.t_index(v)) == v);
    auto c = coords_of(dims, v);
    CHECK(cut.s_index(v) == static_cast<std::size_t>(c[0] * 2 + c[2]));
    CHECK(cut.t_index(v) == static_cast<std::size_t>(c[1]));
  }
}

TEST_CASE("graph construction") {
  Dims dims{2, 2};
  SUBCASE("single loop") {
    auto g = build_graph(dims, {}, {{VertexLabel{{1, 1}}, 1.0}}, WeightKind::Real);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges().empty());
    CHECK(g.loop_count() == 1);
    CHECK(support_vertices(g) == std::vector<std::size_t>{0});
  }
  SUBCASE("Bell graph round-trips through its matrix") {
    // signed degree of a -1/2 edge is -1/2, so a loop of 1 brings it to 1/2
    auto g = build_graph(dims, {{{VertexLabel{{1, 1}}, VertexLabel{{2, 2}}}, -0.5}},
                         {{VertexLabel{{1, 1}}, 1.0}, {VertexLabel{{2, 2}}, 1.0}}, WeightKind::Real);
    auto rho = oracle::pure_density(oracle::bell_state());
    CHECK(max_abs(sigma_of(g).entries - rho.entries) < 1e-15);
    auto back = graph_of(rho);
    REQUIRE(back.edges().size() == 1);
    CHECK(back.edges()[0].w.real() == doctest::Approx(-0.5));
    CHECK(back.loop(0) == doctest::Approx(1.0));
    CHECK(back.loop(3) == doctest::Approx(1.0));
  }
  SUBCASE("loop passed as an edge") {
    CHECK(throws_code(ErrorCode::LoopAsEdge, [] {
      build_graph({2}, {{{VertexLabel{{1}}, VertexLabel{{1}}}, 1.0}}, {}, WeightKind::Real);
    }));
  }
  SUBCASE("complex weight in a real graph") {
    CHECK(throws_code(ErrorCode::ComplexWeightInRealGraph,
                      [] { WeightedGraph::from_edges({2}, WeightKind::Real, {{0, 1, Complex(0, 1)}}); }));
  }
  SUBCASE("non-finite weight") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(throws_code(ErrorCode::NonFiniteWeight,
                      [&] { WeightedGraph::from_edges({2}, WeightKind::Real, {{0, 1, inf}}); }));
    CHECK(throws_code(ErrorCode::NonFiniteWeight,
                      [&] { WeightedGraph::from_edges({2}, WeightKind::Real, {}, {std::nan(""), 0.0}); }));
  }
  SUBCASE("loop vector of the wrong size") {
    CHECK(throws_code(ErrorCode::SizeMismatch,
                      [] { WeightedGraph::from_edges({2}, WeightKind::Real, {}, {1.0}); }));
  }
}

TEST_CASE("edges are stored low to high with the conjugate weight") {
  auto g = WeightedGraph::from_edges({3}, WeightKind::Complex,
                                     {{2, 0, Complex(1, 2)}, {0, 2, Complex(1, 0)}, {1, 2, 0.0}});
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 2);
  CHECK(g.edges()[0].w == Complex(2, -2));
  CHECK(*g.weight(2, 0) == Complex(2, 2));
  CHECK_FALSE(g.weight(0, 1).has_value());
}

TEST_CASE("degrees") {
  SUBCASE("isolated vertex") {
    auto g = WeightedGraph::from_edges({3}, WeightKind::Real, {{0, 1, 1.0}});
    CHECK(vertex_degree(g, 2) == 0.0);
  }
  SUBCASE("single loop") {
    auto g = WeightedGraph::from_edges({2}, WeightKind::Real, {}, {1.0, 0.0});
    CHECK(vertex_degree(g, 0) == 1.0);
  }
  SUBCASE("counterexample graph") {
    auto rho = counterexample_state();
    auto g = graph_of(rho);
    CHECK(vertex_degree(g, VertexLabel{{1, 2}}) == doctest::Approx(rho.entries(1, 1).real()).epsilon(1e-15));
    CHECK(degree_matrix(g).degree_sum() == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("empty graph") {
    WeightedGraph g({2, 2}, WeightKind::Real);
    for (double d : degree_matrix(g).diag) CHECK(d == 0.0);
  }
  SUBCASE("Bell graph") {
    auto d = degree_matrix(bell_graph()).diag;
    CHECK(d[0] == doctest::Approx(0.5));
    CHECK(d[3] == doctest::Approx(0.5));
    CHECK(d[1] == 0.0);
    CHECK(d[2] == 0.0);
  }
  SUBCASE("complex graphs count moduli") {
    auto g = WeightedGraph::from_edges({2}, WeightKind::Complex, {{0, 1, Complex(3, 4)}}, {0.0, 1.0});
    CHECK(vertex_degree(g, 0) == doctest::Approx(5.0));
    CHECK(vertex_degree(g, 1) == doctest::Approx(6.0));
  }
}

TEST_CASE("edge classes") {
  SUBCASE("counterexample has one crossing edge at its only cut") {
    auto g = graph_of(counterexample_state());
    auto c = classify_edges(g, Partition::from_s(2, {1}));
    REQUIRE(c.crossing.size() == 1);
    CHECK(label_of(Dims{2, 2}, c.crossing[0].u).coords == std::vector<int>{1, 2});
    CHECK(label_of(Dims{2, 2}, c.crossing[0].v).coords == std::vector<int>{2, 1});
  }
  SUBCASE("loops only") {
    auto g = WeightedGraph::from_edges({2, 2}, WeightKind::Real, {}, {0.25, 0.25, 0.25, 0.25});
    auto c = classify_edges(g, Partition::from_s(2, {1}));
    CHECK(c.crossing.empty());
    CHECK(c.loops.size() == 4);
  }
  SUBCASE("Bell edge crosses") {
    auto c = classify_edges(bell_graph(), Partition::from_s(2, {1}));
    REQUIRE(c.crossing.size() == 1);
    CHECK(c.crossing[0].u == 0);
    CHECK(c.crossing[0].v == 3);
  }
  SUBCASE("sizes add up") {
    auto g = random_graph({2, 3, 2}, 9, true, true);
    for (const auto& p : all_bipartitions(3)) {
      auto c = classify_edges(g, p);
      CHECK(c.fixed.size() + c.crossing.size() == g.edges().size());
      CHECK(c.loops.size() == g.loop_count());
    }
  }
}

TEST_CASE("partial transpose of a graph") {
  SUBCASE("loops are fixed") {
    auto g = WeightedGraph::from_edges({2, 2}, WeightKind::Real, {}, {0.1, 0.2, 0.3, 0.4});
    CHECK(partial_transpose_graph(g, Partition::from_s(2, {1})) == g);
  }
  SUBCASE("Bell edge moves to the off-diagonal pair") {
    auto pt = partial_transpose_graph(bell_graph(), Partition::from_s(2, {1}));
    REQUIRE(pt.edges().size() == 1);
    CHECK(pt.edges()[0].u == at({2, 2}, {1, 2}));
    CHECK(pt.edges()[0].v == at({2, 2}, {2, 1}));
  }
  SUBCASE("involution, T_s = T_t, and the matrix partial transpose") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      std::mt19937_64 rng(seed);
      auto dims = testing::random_dims(rng, 2 + static_cast<int>(seed % 3), 3);
      auto g = random_graph(dims, seed, seed % 2 == 0, seed % 3 == 0);
      for (const auto& p : all_bipartitions(g.parts())) {
        auto once = partial_transpose_graph(g, p);
        CHECK(partial_transpose_graph(once, p) == g);
        // T_t has the same edges and moduli; under the matrix convention the
        // complex weights come out conjugated
        auto other = partial_transpose_graph(g, p.swapped());
        if (g.is_real()) {
          CHECK(other == once);
        } else {
          REQUIRE(other.edges().size() == once.edges().size());
          for (std::size_t i = 0; i < once.edges().size(); ++i) {
            CHECK(other.edges()[i].u == once.edges()[i].u);
            CHECK(other.edges()[i].v == once.edges()[i].v);
            CHECK(other.edges()[i].w == std::conj(once.edges()[i].w));
          }
          CHECK(other.loops() == once.loops());
        }
        auto expected = oracle::matrix_partial_transpose(adjacency_matrix(g), dims, p);
        CHECK(max_abs(adjacency_matrix(once) - expected) == 0.0);
      }
    }
  }
  SUBCASE("degree sum is invariant") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto g = random_graph({2, 3}, seed, seed % 2 == 1, true);
      auto p = Partition::from_s(2, {1});
      CHECK(degree_matrix(partial_transpose_graph(g, p)).degree_sum() ==
            doctest::Approx(degree_matrix(g).degree_sum()).epsilon(1e-12));
    }
  }
  SUBCASE("fast transposed degrees match the materialized graph") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto g = random_graph({2, 2, 3}, seed, seed % 2 == 0, true);
      for (const auto& p : all_bipartitions(3)) {
        auto fast = transposed_degree_matrix(g, p).diag;
        auto slow = degree_matrix(partial_transpose_graph(g, p)).diag;
        for (std::size_t v = 0; v < fast.size(); ++v) CHECK(fast[v] == doctest::Approx(slow[v]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("closure and the degree criterion") {
  auto p = Partition::from_s(2, {1});
  auto loops = WeightedGraph::from_edges({2, 2}, WeightKind::Real, {}, {0.25, 0.25, 0.25, 0.25});
  CHECK(edge_set_closed(loops, p));
  CHECK(degree_criterion(loops, p));

  CHECK_FALSE(edge_set_closed(bell_graph(), p));
  CHECK_FALSE(degree_criterion(bell_graph(), p));
  CHECK_FALSE(degree_criterion(graph_of(counterexample_state()), p));

  auto plus = testing::qubit(1.0, 1.0);
  auto zero = oracle::basis_state({2}, {0});
  auto product = state_graph(oracle::kron(zero, plus));
  CHECK(edge_set_closed(product, p));
  CHECK(degree_criterion(product, p));
}

TEST_CASE("on pure states closure and the degree criterion agree") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    const int m = 2 + static_cast<int>(seed % 3);
    auto dims = testing::random_dims(rng, m, 3);
    auto psi = seed % 2 ? oracle::random_pure(dims, seed) : oracle::random_pure_product(dims, {}, seed);
    auto g = state_graph(psi);
    for (const auto& p : all_bipartitions(m)) CHECK(edge_set_closed(g, p) == degree_criterion(g, p));
  }
}

TEST_CASE("support vertices") {
  auto g = WeightedGraph::from_edges({4}, WeightKind::Real, {{0, 1, 1e-12}, {1, 2, 1.0}}, {0.0, 0.0, 0.0, 1e-3});
  CHECK(support_vertices(g) == std::vector<std::size_t>{1, 2, 3});
}
