#include <doctest.h>

#include "oracles.hpp"
#include "spectral_gate/connectivity.hpp"
#include "spectral_gate/errors.hpp"
#include "spectral_gate/generators.hpp"
#include "spectral_gate/tree_packing.hpp"

using namespace spectral_gate;

namespace {

void check_certificate(const Multigraph& g, const PackingCertificate& p) {
  CHECK(validate_packing(g, p));
  CHECK(p.forests.size() == static_cast<std::size_t>(p.tau));
  REQUIRE(p.dual.has_value());
  CHECK(p.dual->bound == p.tau);
  CHECK(p.dual->parts.size() >= 2);
  CHECK(p.dual->crossing == make_partition_witness(g, p.dual->parts).crossing);
}

}  // namespace

TEST_CASE("spanning_tree_packing examples") {
  for (int n = 2; n <= 9; ++n) {
    const auto p = spanning_tree_packing(path_graph(n));
    CHECK(p.tau == 1);
    check_certificate(path_graph(n), p);
  }
  CHECK(spanning_tree_packing(star_graph(5)).tau == 1);

  const auto k4 = spanning_tree_packing(complete_graph(4));
  CHECK(k4.tau == 2);
  check_certificate(complete_graph(4), k4);

  const auto triple = Multigraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}});
  const auto t = spanning_tree_packing(triple);
  CHECK(t.tau == 3);
  check_certificate(triple, t);

  CHECK(spanning_tree_packing(complete_graph(1)).tau == kUnboundedPacking);
  CHECK_THROWS_AS(spanning_tree_packing(Multigraph::from_edge_list(4, {{0, 1}, {2, 3}})), Disconnected);
}

TEST_CASE("tau_partition_oracle examples") {
  const auto c5 = tau_partition_oracle(cycle_graph(5));
  CHECK(c5.tau == 1);
  CHECK(c5.witness.bound == 1);

  const auto k4 = tau_partition_oracle(complete_graph(4));
  CHECK(k4.tau == 2);
  CHECK(k4.witness.bound == 2);
  CHECK(k4.witness.crossing / static_cast<std::int64_t>(k4.witness.parts.size() - 1) == 2);
  const auto singletons = make_partition_witness(complete_graph(4), VertexPartition::from_labels(std::vector<int>{0, 1, 2, 3}));
  CHECK(singletons.crossing == 6);
  CHECK(singletons.bound == 2);
  // the 2+2 split gives floor(4/1) = 4, not the minimum
  const auto split = make_partition_witness(complete_graph(4), VertexPartition::from_labels(std::vector<int>{0, 0, 1, 1}));
  CHECK(split.crossing == 4);
  CHECK(split.bound == 4);

  CHECK(tau_partition_oracle(complete_graph(2)).tau == 1);
  CHECK_THROWS_AS(tau_partition_oracle(complete_graph(1)), SingleVertex);
  CHECK_THROWS_AS(tau_partition_oracle(path_graph(11)), TooLarge);
  CHECK_THROWS_AS(tau_partition_oracle(Multigraph::from_edge_list(3, {{0, 1}})), Disconnected);
}

TEST_CASE("check_nash_williams") {
  const auto k4 = complete_graph(4);
  CHECK(check_nash_williams(k4, 3, {}));
  CHECK_FALSE(check_nash_williams(k4, 3, k4.edges()));
  const EdgeMultiset one{{0, 1, 1}};
  CHECK(check_nash_williams(cycle_graph(4), 1, one));
  const EdgeMultiset absent{{0, 2, 1}};
  CHECK_THROWS_AS(check_nash_williams(cycle_graph(4), 1, absent), EdgeNotPresent);
}

TEST_CASE("component_cut_profile") {
  const EdgeMultiset opposite{{0, 1, 1}, {3, 4, 1}};
  auto p = component_cut_profile(cycle_graph(6), opposite);
  CHECK(p.components == 2);
  CHECK(p.r == std::vector<std::int64_t>{2, 2});
  CHECK(p.total == 4);

  const EdgeMultiset star0{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
  p = component_cut_profile(complete_graph(4), star0);
  CHECK(p.components == 2);
  CHECK(p.r == std::vector<std::int64_t>{3, 3});

  p = component_cut_profile(petersen_graph(), {});
  CHECK(p.components == 1);
  CHECK(p.r == std::vector<std::int64_t>{0});
}

TEST_CASE("property: packing matches backtracking on every connected graph n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    enumerate_connected(n, [&](const Multigraph& g) {
      const auto p = spanning_tree_packing(g);
      if (p.tau != oracle::brute_tree_packing(g)) FAIL_CHECK("tau mismatch n=" << n);
      if (!validate_packing(g, p) || !p.dual || p.dual->bound != p.tau) FAIL_CHECK("certificate n=" << n);
    });
  }
}

TEST_CASE("property: packing matches backtracking on small random multigraphs") {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const auto g = gen_random_multigraph(n, 4, 2.5, rng);
    CHECK(spanning_tree_packing(g).tau == oracle::brute_tree_packing(g));
  }
}

TEST_CASE("property: packing matches the partition oracle and its certificates") {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const auto g = gen_random_multigraph(n, 3, 2.0 + rng.unit() * 2, rng);
    const auto p = spanning_tree_packing(g);
    CHECK(p.tau == tau_partition_oracle(g).tau);
    check_certificate(g, p);
    CHECK(p.tau <= edge_connectivity(g).value);
    CHECK(p.tau <= g.edge_count() / (n - 1));
    CHECK_FALSE(check_nash_williams(g, p.tau + 1, crossing_edges(g, p.dual->parts)));
    const auto profile = component_cut_profile(g, crossing_edges(g, p.dual->parts));
    CHECK(profile.total == 2 * p.dual->crossing);
    CHECK(static_cast<std::size_t>(profile.components) == p.dual->parts.size());
  }
}

TEST_CASE("validate_packing rejects broken certificates") {
  const auto g = complete_graph(4);
  auto p = spanning_tree_packing(g);
  REQUIRE(p.tau == 2);
  auto shared = p;
  shared.forests[1] = shared.forests[0];
  CHECK_FALSE(validate_packing(g, shared));
  auto short_tree = p;
  short_tree.forests[0].pop_back();
  CHECK_FALSE(validate_packing(g, short_tree));
  auto phantom = p;
  phantom.forests[0][0].copy = 1;
  CHECK_FALSE(validate_packing(g, phantom));
}
