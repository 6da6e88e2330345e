#include "spectral_gate/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spectral_gate/errors.hpp"

namespace spectral_gate {

namespace {

void check_vertex(Vertex v, int n) {
  if (v < 0 || v >= n) throw VertexOutOfRange(v, n);
}

// Normalizes a deletion multiset: pairs ordered u < v, duplicates summed,
// validated against the stored multiplicities.
std::map<std::pair<Vertex, Vertex>, int> normalize_removed(const Multigraph& g,
                                                           std::span<const EdgeCount> removed) {
  std::map<std::pair<Vertex, Vertex>, int> out;
  for (const auto& e : removed) {
    check_vertex(e.u, g.order());
    check_vertex(e.v, g.order());
    if (e.count < 0) throw EdgeNotPresent(e.u, e.v);
    if (e.count == 0) continue;
    if (e.u == e.v) throw EdgeNotPresent(e.u, e.v);
    out[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.count;
  }
  for (const auto& [pair, count] : out) {
    if (count > g.multiplicity(pair.first, pair.second)) throw EdgeNotPresent(pair.first, pair.second);
  }
  return out;
}

}  // namespace

Multigraph::Multigraph(int n)
    : n_(n),
      mult_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      degree_(static_cast<std::size_t>(n), 0),
      adjacency_(static_cast<std::size_t>(n)) {
  if (n < 0) throw VertexOutOfRange(n, 0);
}

void Multigraph::add(Vertex u, Vertex v, int count) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) throw LoopEdge(u);
  if (count <= 0) return;
  mult_[index(u, v)] += count;
  mult_[index(v, u)] += count;
}

void Multigraph::finalize() {
  edge_count_ = 0;
  max_multiplicity_ = 1;
  for (Vertex u = 0; u < n_; ++u) {
    std::int64_t d = 0;
    auto& adj = adjacency_[static_cast<std::size_t>(u)];
    adj.clear();
    for (Vertex v = 0; v < n_; ++v) {
      const int m = mult_[index(u, v)];
      if (m == 0) continue;
      d += m;
      adj.push_back(v);
      max_multiplicity_ = std::max(max_multiplicity_, m);
      if (u < v) edge_count_ += m;
    }
    degree_[static_cast<std::size_t>(u)] = d;
  }
}

Multigraph Multigraph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Multigraph g(n);
  for (const auto& [u, v] : edges) g.add(u, v, 1);
  g.finalize();
  return g;
}

Multigraph Multigraph::from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Multigraph Multigraph::from_multiplicities(int n, std::span<const EdgeCount> edges) {
  Multigraph g(n);
  for (const auto& e : edges) g.add(e.u, e.v, e.count);
  g.finalize();
  return g;
}

EdgeMultiset Multigraph::edges() const {
  EdgeMultiset out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[static_cast<std::size_t>(u)]) {
      if (u < v) out.push_back({u, v, mult_[index(u, v)]});
    }
  }
  return out;
}

VertexSubset::VertexSubset(int universe_size, std::vector<Vertex> members)
    : universe_(universe_size), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Vertex v : members_) check_vertex(v, universe_);
}

VertexSubset VertexSubset::from_mask(int universe_size, std::uint64_t mask) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < universe_size; ++v) {
    if ((mask >> v) & 1U) members.push_back(v);
  }
  return VertexSubset(universe_size, std::move(members));
}

bool VertexSubset::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSubset VertexSubset::complement() const {
  std::vector<Vertex> rest;
  auto it = members_.begin();
  for (Vertex v = 0; v < universe_; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      rest.push_back(v);
    }
  }
  return VertexSubset(universe_, std::move(rest));
}

bool VertexSubset::disjoint_from(const VertexSubset& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

std::uint64_t VertexSubset::mask() const {
  if (universe_ > 64) throw TooLarge("vertex mask needs universe <= 64");
  std::uint64_t m = 0;
  for (Vertex v : members_) m |= std::uint64_t{1} << v;
  return m;
}

VertexPartition::VertexPartition(std::vector<VertexSubset> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidPartition("partition has no blocks");
  const int n = blocks_.front().universe_size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::size_t covered = 0;
  for (const auto& b : blocks_) {
    if (b.universe_size() != n) throw InvalidPartition("blocks drawn from different universes");
    if (b.empty()) throw InvalidPartition("empty block");
    for (Vertex v : b.members()) {
      if (seen[static_cast<std::size_t>(v)]) throw InvalidPartition("blocks overlap");
      seen[static_cast<std::size_t>(v)] = 1;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(n)) throw InvalidPartition("blocks do not cover V");
}

VertexPartition VertexPartition::from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  int t = 0;
  for (int l : labels) {
    if (l < 0) throw InvalidPartition("negative block label");
    t = std::max(t, l + 1);
  }
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(t));
  for (Vertex v = 0; v < n; ++v) members[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<VertexSubset> blocks;
  blocks.reserve(members.size());
  for (auto& m : members) blocks.emplace_back(n, std::move(m));
  return VertexPartition(std::move(blocks));
}

std::vector<int> VertexPartition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(universe_size()), -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Vertex v : blocks_[i].members()) out[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return out;
}

DegreeStats degree_stats(const Multigraph& g) {
  DegreeStats s;
  if (g.order() == 0) return s;
  const auto d = g.degrees();
  s.min_degree = *std::min_element(d.begin(), d.end());
  s.max_degree = *std::max_element(d.begin(), d.end());
  s.average = Rational(2 * g.edge_count(), g.order());
  return s;
}

std::int64_t edge_boundary(const Multigraph& g, const VertexSubset& s, const VertexSubset& t) {
  if (!s.disjoint_from(t)) throw OverlappingSets();
  std::int64_t total = 0;
  for (Vertex u : s.members()) {
    for (Vertex v : t.members()) total += g.multiplicity(u, v);
  }
  return total;
}

std::int64_t cut_weight(const Multigraph& g, const VertexSubset& s) {
  std::vector<char> inside(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s.members()) inside[static_cast<std::size_t>(v)] = 1;
  std::int64_t total = 0;
  for (Vertex u : s.members()) {
    for (Vertex v : g.neighbors(u)) {
      if (!inside[static_cast<std::size_t>(v)]) total += g.multiplicity(u, v);
    }
  }
  return total;
}

ComponentLabels components_after_deletion(const Multigraph& g, std::span<const EdgeCount> removed) {
  const auto gone = normalize_removed(g, removed);
  const int n = g.order();
  ComponentLabels out;
  out.label.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (out.label[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = out.count++;
    out.label[static_cast<std::size_t>(start)] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (out.label[static_cast<std::size_t>(v)] >= 0) continue;
        if (!gone.empty()) {
          auto it = gone.find({std::min(u, v), std::max(u, v)});
          if (it != gone.end() && it->second >= g.multiplicity(u, v)) continue;
        }
        out.label[static_cast<std::size_t>(v)] = id;
        stack.push_back(v);
      }
    }
  }
  return out;
}

ComponentLabels components(const Multigraph& g) { return components_after_deletion(g, {}); }

bool is_connected(const Multigraph& g) { return g.order() <= 1 || components(g).count == 1; }

std::vector<Rational> induced_average_degrees(const Multigraph& g, const VertexPartition& partition) {
  std::vector<Rational> out;
  out.reserve(partition.size());
  for (const auto& block : partition.blocks()) {
    std::int64_t sum = 0;
    for (Vertex v : block.members()) sum += g.degree(v);
    out.emplace_back(sum, static_cast<std::int64_t>(block.size()));
  }
  return out;
}

}  // namespace spectral_gate
