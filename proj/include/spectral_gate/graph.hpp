#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace spectral_gate {

using Vertex = int;
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// One unordered vertex pair together with a count: a stored edge class of a
// multigraph, or a sub-multiset of it when used as a deletion set.
struct EdgeCount {
  Vertex u = 0;
  Vertex v = 0;
  int count = 0;

  friend bool operator==(const EdgeCount&, const EdgeCount&) = default;
};

using EdgeMultiset = std::vector<EdgeCount>;

// Loop-free graph with integer edge multiplicities on vertices 0..n-1.
// Immutable once built; every accessor is O(1) except edges().
class Multigraph {
 public:
  Multigraph() = default;

  // Each pair in `edges` contributes one parallel edge.
  static Multigraph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Multigraph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  // Each entry contributes `count` parallel edges; repeated pairs accumulate.
  static Multigraph from_multiplicities(int n, std::span<const EdgeCount> edges);

  int order() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return edge_count_; }
  int multiplicity(Vertex u, Vertex v) const { return mult_[index(u, v)]; }
  std::int64_t degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
  std::span<const std::int64_t> degrees() const noexcept { return degree_; }
  // Distinct neighbours in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }

  bool simple() const noexcept { return max_multiplicity_ <= 1; }
  // Largest pair multiplicity; 1 for edgeless graphs.
  int max_multiplicity() const noexcept { return max_multiplicity_; }

  // Stored edge classes with u < v, sorted lexicographically.
  EdgeMultiset edges() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

 private:
  explicit Multigraph(int n);
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void add(Vertex u, Vertex v, int count);
  void finalize();

  int n_ = 0;
  std::int64_t edge_count_ = 0;
  int max_multiplicity_ = 1;
  std::vector<int> mult_;
  std::vector<std::int64_t> degree_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// A set of vertices drawn from a universe {0..universe_size-1}.
class VertexSubset {
 public:
  VertexSubset() = default;
  VertexSubset(int universe_size, std::vector<Vertex> members);
  static VertexSubset from_mask(int universe_size, std::uint64_t mask);

  int universe_size() const noexcept { return universe_; }
  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  bool proper() const noexcept { return !empty() && size() < static_cast<std::size_t>(universe_); }
  VertexSubset complement() const;
  bool disjoint_from(const VertexSubset& other) const;
  // Requires universe_size <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  int universe_ = 0;
  std::vector<Vertex> members_;
};

// Ordered disjoint cover of V by non-empty blocks.
class VertexPartition {
 public:
  VertexPartition() = default;
  // Throws InvalidPartition unless the blocks are non-empty, disjoint and cover the universe.
  explicit VertexPartition(std::vector<VertexSubset> blocks);
  // Block labels per vertex; labels must be 0..t-1 with every label used.
  static VertexPartition from_labels(std::span<const int> labels);

  std::size_t size() const noexcept { return blocks_.size(); }
  const VertexSubset& block(std::size_t i) const { return blocks_[i]; }
  std::span<const VertexSubset> blocks() const noexcept { return blocks_; }
  int universe_size() const noexcept { return blocks_.empty() ? 0 : blocks_.front().universe_size(); }
  std::vector<int> labels() const;

 private:
  std::vector<VertexSubset> blocks_;
};

struct DegreeStats {
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  Rational average{0};
};

DegreeStats degree_stats(const Multigraph& g);

// e(S, T): number of edges (with multiplicity) joining S to T. Throws OverlappingSets.
std::int64_t edge_boundary(const Multigraph& g, const VertexSubset& s, const VertexSubset& t);
// e(S, V \ S).
std::int64_t cut_weight(const Multigraph& g, const VertexSubset& s);

struct ComponentLabels {
  int count = 0;
  std::vector<int> label;  // component id per vertex, ids in order of first appearance
};

// Components of G - X. Throws EdgeNotPresent if X exceeds a stored multiplicity.
ComponentLabels components_after_deletion(const Multigraph& g, std::span<const EdgeCount> removed);
ComponentLabels components(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Whole-graph average degree of each block (not the induced-subgraph degree).
std::vector<Rational> induced_average_degrees(const Multigraph& g, const VertexPartition& partition);

}  // namespace spectral_gate
