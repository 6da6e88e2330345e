#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spectral_gate/graph.hpp"

namespace spectral_gate {

// Seeded source of randomness for every generator. The engine is
// std::mt19937_64, whose output sequence is fixed by the C++ standard; the
// bounded-integer and real helpers are written out here so that results do
// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double unit();

  // Seed of the i-th sample of a stream seeded with `seed` (SplitMix64), so
  // samples can be generated independently and in any order.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

// Named families. `n` is ignored by the fixed graphs.
Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);
// Star with `leaves` leaves; the centre is vertex 0.
Multigraph star_graph(int leaves);
Multigraph petersen_graph();
// 18 vertices, LCF notation [5,7,-7,7,-7,-5]^3.
Multigraph pappus_graph();
// Two copies of K4 on {0..3} and {4..7} joined by the edge {3,4}.
Multigraph dumbbell_graph();

std::vector<std::string> family_names();
// Throws DomainError for an unknown name.
Multigraph named_family(const std::string& name, int n);

// Simple d-regular graph from the pairing model; a collision (loop or
// repeated pair) restarts the pairing. Throws Infeasible if n*d is odd,
// d >= n, or no simple pairing is found within kRegularRestarts attempts.
inline constexpr int kRegularRestarts = 10000;
Multigraph gen_random_regular(int n, int d, Rng& rng);
Multigraph gen_random_regular(int n, int d, std::uint64_t seed);

// Erdos-Renyi G(n, p).
Multigraph gen_gnp(int n, double p, Rng& rng);

// Connected multigraph: a random spanning tree, then extra edges between
// random pairs until the edge count reaches max(n-1, round(edge_factor*n)).
// No pair exceeds max_mult; throws DomainError if max_mult < 1.
Multigraph gen_random_multigraph(int n, int max_mult, double edge_factor, Rng& rng);

// Labelled simple graphs on n vertices encoded by an edge mask over the
// pairs (0,1),(0,2),(1,2),(0,3),... (column order, as in graph6).
inline constexpr int kMaxEnumerationVertices = 8;
int pair_count(int n);
bool edge_mask_connected(int n, std::uint64_t mask);
Multigraph graph_from_edge_mask(int n, std::uint64_t mask);

// Streams every connected labelled simple graph on n vertices, in increasing
// mask order. No isomorphism reduction. Throws TooLarge for n > 8 and
// DomainError for n < 2.
class ConnectedEnumerator {
 public:
  explicit ConnectedEnumerator(int n);
  std::optional<Multigraph> next();

 private:
  int n_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
};

// Calls visit on each connected labelled graph on n vertices.
void enumerate_connected(int n, const std::function<void(const Multigraph&)>& visit);
std::int64_t count_connected(int n);

}  // namespace spectral_gate
