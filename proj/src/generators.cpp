#include "spectral_gate/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

#include "spectral_gate/errors.hpp"

namespace spectral_gate {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below needs bound >= 1");
  // Largest multiple of bound that fits, then reject above it.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Multigraph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Multigraph::from_edge_list(n, edges);
}

Multigraph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Multigraph::from_edge_list(n, edges);
}

Multigraph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Multigraph::from_edge_list(n, edges);
}

Multigraph star_graph(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Multigraph::from_edge_list(leaves + 1, edges);
}

Multigraph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Multigraph::from_edge_list(10, edges);
}

Multigraph pappus_graph() {
  constexpr int n = 18;
  constexpr int lcf[6] = {5, 7, -7, 7, -7, -5};
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    pairs.emplace(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    const Vertex j = ((i + lcf[i % 6]) % n + n) % n;
    pairs.emplace(std::min(i, j), std::max(i, j));
  }
  const std::vector<std::pair<Vertex, Vertex>> edges(pairs.begin(), pairs.end());
  return Multigraph::from_edge_list(n, edges);
}

Multigraph dumbbell_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex base : {0, 4})
    for (Vertex i = 0; i < 4; ++i)
      for (Vertex j = i + 1; j < 4; ++j) edges.emplace_back(base + i, base + j);
  edges.emplace_back(3, 4);
  return Multigraph::from_edge_list(8, edges);
}

std::vector<std::string> family_names() {
  return {"complete", "cycle", "path", "star", "petersen", "pappus", "dumbbell"};
}

Multigraph named_family(const std::string& name, int n) {
  if (name == "complete") return complete_graph(n);
  if (name == "cycle") return cycle_graph(n);
  if (name == "path") return path_graph(n);
  if (name == "star") return star_graph(n - 1);
  if (name == "petersen") return petersen_graph();
  if (name == "pappus") return pappus_graph();
  if (name == "dumbbell") return dumbbell_graph();
  throw DomainError("unknown family " + name);
}

Multigraph gen_random_regular(int n, int d, Rng& rng) {
  if (n < 1 || d < 0 || d >= n || (static_cast<std::int64_t>(n) * d) % 2 != 0)
    throw Infeasible("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
  const auto points = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  std::vector<Vertex> cells(points);
  std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int attempt = 0; attempt < kRegularRestarts; ++attempt) {
    for (std::size_t p = 0; p < points; ++p) cells[p] = static_cast<Vertex>(p / static_cast<std::size_t>(d));
    for (std::size_t p = points; p > 1; --p) std::swap(cells[p - 1], cells[rng.below(p)]);
    std::fill(seen.begin(), seen.end(), 0);
    edges.clear();
    bool ok = true;
    for (std::size_t p = 0; p < points && ok; p += 2) {
      const Vertex u = std::min(cells[p], cells[p + 1]);
      const Vertex v = std::max(cells[p], cells[p + 1]);
      char& slot = seen[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
      ok = u != v && !slot;
      slot = 1;
      edges.emplace_back(u, v);
    }
    if (ok) return Multigraph::from_edge_list(n, edges);
  }
  throw Infeasible("pairing model found no simple graph within the restart cap");
}

Multigraph gen_random_regular(int n, int d, std::uint64_t seed) {
  Rng rng(seed);
  return gen_random_regular(n, d, rng);
}

Multigraph gen_gnp(int n, double p, Rng& rng) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw DomainError("gnp needs n >= 0 and 0 <= p <= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rng.unit() < p) edges.emplace_back(i, j);
  return Multigraph::from_edge_list(n, edges);
}

Multigraph gen_random_multigraph(int n, int max_mult, double edge_factor, Rng& rng) {
  if (n < 1) throw DomainError("random multigraph needs n >= 1");
  if (max_mult < 1) throw DomainError("random multigraph needs max_mult >= 1");
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t target =
      std::min<std::int64_t>(std::max<std::int64_t>(n - 1, std::llround(edge_factor * n)), pairs * max_mult);

  std::vector<int> mult(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    ++mult[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    edges.emplace_back(u, v);
  };

  // Random spanning tree: attach each vertex of a random order to an earlier one.
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (std::size_t i = 1; i < order.size(); ++i) add(order[i], order[rng.below(i)]);

  while (static_cast<std::int64_t>(edges.size()) < target) {
    const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    const Vertex a = std::min(u, v);
    const Vertex b = std::max(u, v);
    if (mult[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] >= max_mult) continue;
    add(a, b);
  }
  return Multigraph::from_edge_list(n, edges);
}

int pair_count(int n) { return n * (n - 1) / 2; }

bool edge_mask_connected(int n, std::uint64_t mask) {
  if (n <= 1) return true;
  std::uint32_t adj[kMaxEnumerationVertices] = {};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
    }
  }
  const std::uint32_t all = (1U << n) - 1;
  std::uint32_t reached = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

Multigraph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
  return Multigraph::from_edge_list(n, edges);
}

ConnectedEnumerator::ConnectedEnumerator(int n) : n_(n) {
  if (n > kMaxEnumerationVertices) throw TooLarge("enumeration needs n <= 8");
  if (n < 2) throw DomainError("enumeration needs n >= 2");
  end_ = std::uint64_t{1} << pair_count(n);
}

std::optional<Multigraph> ConnectedEnumerator::next() {
  while (mask_ < end_) {
    const std::uint64_t m = mask_++;
    if (edge_mask_connected(n_, m)) return graph_from_edge_mask(n_, m);
  }
  return std::nullopt;
}

void enumerate_connected(int n, const std::function<void(const Multigraph&)>& visit) {
  ConnectedEnumerator it(n);
  while (auto g = it.next()) visit(*g);
}

std::int64_t count_connected(int n) {
  if (n > kMaxEnumerationVertices) throw TooLarge("enumeration needs n <= 8");
  if (n < 2) throw DomainError("enumeration needs n >= 2");
  std::int64_t count = 0;
  const std::uint64_t end = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t m = 0; m < end; ++m)
    if (edge_mask_connected(n, m)) ++count;
  return count;
}

}  // namespace spectral_gate
