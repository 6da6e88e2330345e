#include <doctest.h>

#include "oracles.hpp"
#include "spectral_gate/connectivity.hpp"
#include "spectral_gate/errors.hpp"
#include "spectral_gate/generators.hpp"

using namespace spectral_gate;

namespace {

Multigraph two_triangles() { return Multigraph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}); }

}  // namespace

TEST_CASE("edge_connectivity examples") {
  CHECK(edge_connectivity(complete_graph(4)).value == 3);
  CHECK(edge_connectivity(cycle_graph(6)).value == 2);
  const auto g = two_triangles();
  const auto cut = edge_connectivity(g);
  CHECK(cut.value == 1);
  const auto side = cut.side.mask();
  CHECK((side == 0b000111 || side == 0b111000));
  CHECK(cut_weight(g, cut.side) == 1);

  const auto split = Multigraph::from_edge_list(4, {{0, 1}, {2, 3}});
  const auto dc = edge_connectivity(split);
  CHECK(dc.value == 0);
  CHECK(dc.side.mask() == 0b0011);

  CHECK_THROWS_AS(edge_connectivity(complete_graph(1)), SingleVertex);
}

TEST_CASE("min_cut_oracle examples") {
  CHECK(min_cut_oracle(petersen_graph()) == 3);
  CHECK(min_cut_oracle(Multigraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}})) == 3);
  CHECK(min_cut_oracle(path_graph(4)) == 1);
  CHECK_THROWS_AS(min_cut_oracle(complete_graph(1)), SingleVertex);
  CHECK_THROWS_AS(min_cut_oracle(cycle_graph(25)), TooLarge);
}

TEST_CASE("cut_sides_with_value") {
  CHECK(cut_sides_with_value(path_graph(3), 1) == std::vector<std::uint32_t>{0b001, 0b011, 0b100, 0b110});
  CHECK(cut_sides_with_value(complete_graph(3), 1).empty());
}

TEST_CASE("property: Stoer-Wagner matches brute force on every connected graph n <= 6") {
  std::int64_t checked = 0;
  for (int n = 2; n <= 6; ++n) {
    enumerate_connected(n, [&](const Multigraph& g) {
      const auto cut = edge_connectivity(g);
      const auto want = oracle::brute_min_cut(g);
      if (cut.value != want || min_cut_oracle(g) != want || cut_weight(g, cut.side) != want || !cut.side.proper())
        FAIL_CHECK("mismatch on n=" << n);
      ++checked;
    });
  }
  CHECK(checked == 1 + 4 + 38 + 728 + 26704);
}

TEST_CASE("property: Stoer-Wagner matches brute force on random multigraphs") {
  Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(13));
    const auto g = trial % 3 == 0 ? gen_gnp(n, 0.3, rng) : gen_random_multigraph(n, 4, 2.5, rng);
    const auto cut = edge_connectivity(g);
    CHECK(cut.value == oracle::brute_min_cut(g));
    CHECK(cut_weight(g, cut.side) == cut.value);
  }
}

TEST_CASE("class membership examples") {
  const auto pappus = pappus_graph();
  const auto r = g_class_membership(pappus);
  CHECK(r.status == Membership::InClass);
  CHECK(r.kappa == 3);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->first.size() == 1);
  CHECK(r.witness->second.size() == 1);
  CHECK(validate_witness(pappus, *r.witness));

  const auto c4 = g_class_membership(cycle_graph(4));
  CHECK(c4.status == Membership::InClass);
  CHECK(c4.kappa == 2);
  CHECK(g_class_membership(path_graph(3)).status == Membership::InClass);

  const auto dumbbell = dumbbell_graph();
  const auto d = g_class_membership(dumbbell);
  CHECK(d.status == Membership::NotInClass);
  CHECK(d.kappa == 1);
  CHECK_FALSE(d.witness.has_value());
  CHECK(cut_sides_with_value(dumbbell, 1) == std::vector<std::uint32_t>{0x0F, 0xF0});

  CHECK_THROWS_AS(g_class_membership(complete_graph(2)), TooSmall);

  // K_n for n >= 3: every vertex has degree kappa'
  CHECK(g_class_membership(complete_graph(5)).status == Membership::InClass);
}

TEST_CASE("validate_witness rejects bad witnesses") {
  const auto g = cycle_graph(4);
  CHECK_FALSE(validate_witness(g, {VertexSubset(4, {0}), VertexSubset(4, {0}), 2}));           // overlap
  CHECK_FALSE(validate_witness(g, {VertexSubset(4, {0, 1}), VertexSubset(4, {2, 3}), 2}));     // covers V
  CHECK_FALSE(validate_witness(g, {VertexSubset(4, {0}), VertexSubset(4, {2}), 1}));           // wrong kappa
  CHECK(validate_witness(g, {VertexSubset(4, {0}), VertexSubset(4, {2}), 2}));
}

TEST_CASE("property: membership matches the definition on every connected graph n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    enumerate_connected(n, [&](const Multigraph& g) {
      const auto r = g_class_membership(g);
      const bool want = oracle::brute_in_class(g);
      if ((r.status == Membership::InClass) != want || r.status == Membership::Undecided) FAIL_CHECK("membership mismatch n=" << n);
      if (r.witness && !validate_witness(g, *r.witness)) FAIL_CHECK("bad witness n=" << n);
    });
  }
}

TEST_CASE("property: membership matches the definition on random multigraphs") {
  Rng rng(37);
  int outside = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const auto g = gen_random_multigraph(n, 3, 1.6, rng);
    const auto r = g_class_membership(g);
    CHECK((r.status == Membership::InClass) == oracle::brute_in_class(g));
    if (r.witness) CHECK(validate_witness(g, *r.witness));
    outside += r.status == Membership::NotInClass;
  }
  CHECK(outside > 0);
}

TEST_CASE("large graphs beyond the exhaustive stage") {
  // fast path still decides
  CHECK(g_class_membership(cycle_graph(40)).status == Membership::InClass);
  // two K_14 joined by a bridge: no vertex of degree 1, n = 28 > 24
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int b = 0; b < 2; ++b)
    for (int u = 0; u < 14; ++u)
      for (int v = u + 1; v < 14; ++v) e.emplace_back(14 * b + u, 14 * b + v);
  e.emplace_back(0, 14);
  CHECK(g_class_membership(Multigraph::from_edge_list(28, e)).status == Membership::Undecided);
}
