#include <doctest.h>

#include <numeric>

#include "spectral_gate/errors.hpp"
#include "spectral_gate/generators.hpp"
#include "spectral_gate/graph.hpp"

using namespace spectral_gate;

namespace {

VertexSubset subset(int n, std::vector<Vertex> members) { return VertexSubset(n, std::move(members)); }

}  // namespace

TEST_CASE("from_edge_list builds simple and multigraphs") {
  const auto k3 = Multigraph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.simple());
  for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

  const auto triple = Multigraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK_FALSE(triple.simple());
  CHECK(triple.max_multiplicity() == 3);
  CHECK(triple.multiplicity(0, 1) == 3);
  CHECK(triple.multiplicity(1, 0) == 3);
  CHECK(triple.degree(0) == 3);
  CHECK(triple.degree(1) == 3);
  CHECK(triple.edge_count() == 3);
}

TEST_CASE("bad edges are rejected") {
  CHECK_THROWS_AS(Multigraph::from_edge_list(3, {{0, 0}}), LoopEdge);
  CHECK_THROWS_AS(Multigraph::from_edge_list(3, {{0, 3}}), VertexOutOfRange);
  CHECK_THROWS_AS(Multigraph::from_edge_list(3, {{-1, 2}}), VertexOutOfRange);
}

TEST_CASE("from_multiplicities accumulates repeated pairs") {
  const std::vector<EdgeCount> e{{0, 1, 2}, {1, 0, 1}, {1, 2, 1}};
  const auto g = Multigraph::from_multiplicities(3, e);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK(g.edge_count() == 4);
  const auto edges = g.edges();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == EdgeCount{0, 1, 3});
  CHECK(edges[1] == EdgeCount{1, 2, 1});
}

TEST_CASE("degree_stats") {
  const auto k4 = complete_graph(4);
  auto s = degree_stats(k4);
  CHECK(s.min_degree == 3);
  CHECK(s.max_degree == 3);
  CHECK(s.average == Rational(3));

  s = degree_stats(path_graph(3));
  CHECK(s.min_degree == 1);
  CHECK(s.max_degree == 2);
  CHECK(s.average == Rational(4, 3));

  s = degree_stats(Multigraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}}));
  CHECK(s.min_degree == 3);
  CHECK(s.max_degree == 3);
  CHECK(s.average == Rational(3));
}

TEST_CASE("edge_boundary") {
  CHECK(edge_boundary(complete_graph(4), subset(4, {0}), subset(4, {1, 2, 3})) == 3);
  CHECK(edge_boundary(cycle_graph(6), subset(6, {0, 1, 2}), subset(6, {3, 4, 5})) == 2);
  CHECK(edge_boundary(Multigraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}}), subset(2, {0}), subset(2, {1})) == 3);
  CHECK_THROWS_AS(edge_boundary(complete_graph(4), subset(4, {0, 1}), subset(4, {1, 2})), OverlappingSets);
}

TEST_CASE("components_after_deletion") {
  const auto c4 = cycle_graph(4);  // edges 0-1,1-2,2-3,3-0
  const EdgeMultiset opposite{{0, 1, 1}, {2, 3, 1}};
  CHECK(components_after_deletion(c4, opposite).count == 2);
  CHECK(components_after_deletion(c4, {}).count == 1);

  const EdgeMultiset star0{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
  const auto k = components_after_deletion(complete_graph(4), star0);
  CHECK(k.count == 2);
  CHECK(k.label[1] == k.label[2]);
  CHECK(k.label[2] == k.label[3]);
  CHECK(k.label[0] != k.label[1]);

  const EdgeMultiset too_many{{0, 1, 2}};
  CHECK_THROWS_AS(components_after_deletion(c4, too_many), EdgeNotPresent);
  const EdgeMultiset absent{{0, 2, 1}};
  CHECK_THROWS_AS(components_after_deletion(c4, absent), EdgeNotPresent);

  // removing one of two parallel copies keeps the pair joined
  const auto dbl = Multigraph::from_edge_list(2, {{0, 1}, {0, 1}});
  const EdgeMultiset one{{0, 1, 1}};
  CHECK(components_after_deletion(dbl, one).count == 1);
}

TEST_CASE("induced_average_degrees") {
  auto d = induced_average_degrees(complete_graph(4), VertexPartition({subset(4, {0}), subset(4, {1, 2, 3})}));
  CHECK(d == std::vector<Rational>{3, 3});
  d = induced_average_degrees(star_graph(3), VertexPartition({subset(4, {0}), subset(4, {1, 2, 3})}));
  CHECK(d == std::vector<Rational>{3, 1});
  d = induced_average_degrees(path_graph(3), VertexPartition({subset(3, {0, 2}), subset(3, {1})}));
  CHECK(d == std::vector<Rational>{1, 2});
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(VertexPartition({subset(3, {0, 1}), subset(3, {1, 2})}), InvalidPartition);
  CHECK_THROWS_AS(VertexPartition({subset(3, {0}), subset(3, {1})}), InvalidPartition);
  CHECK_THROWS_AS(VertexPartition({subset(3, {0, 1, 2}), subset(3, {})}), InvalidPartition);
  const std::vector<int> labels{1, 0, 1};
  const auto p = VertexPartition::from_labels(labels);
  CHECK(p.size() == 2);
  CHECK(p.labels() == labels);
}

TEST_CASE("property: handshake, boundary symmetry, cut complement") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const auto g = trial % 2 ? gen_gnp(n, 0.4, rng) : gen_random_multigraph(n, 3, 1.5, rng);
    std::int64_t sum = 0;
    for (auto d : g.degrees()) sum += d;
    CHECK(sum == 2 * g.edge_count());

    const auto mask = rng.below((std::uint64_t{1} << n) - 2) + 1;
    const auto s = VertexSubset::from_mask(n, mask);
    const auto t = s.complement();
    CHECK(edge_boundary(g, s, t) == edge_boundary(g, t, s));
    CHECK(cut_weight(g, s) == cut_weight(g, t));

    // average degrees weighted by block size recover 2m
    const auto parts = VertexPartition({s, t});
    const auto avg = induced_average_degrees(g, parts);
    const Rational total = avg[0] * static_cast<std::int64_t>(s.size()) + avg[1] * static_cast<std::int64_t>(t.size());
    CHECK(total == Rational(2 * g.edge_count()));

    const auto comps = components(g);
    CHECK((comps.count == 1) == is_connected(g));
  }
}
