#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "spectral_gate/graph.hpp"

namespace spectral_gate {

// One parallel copy of the edge {u,v}; copies are numbered 0..mult(u,v)-1.
// Parallel edges are distinct ground-set elements for packing.
struct EdgeSlot {
  Vertex u = 0;
  Vertex v = 0;
  int copy = 0;

  friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

// A partition with s >= 2 parts. bound = floor(crossing / (s-1)) upper-bounds
// the number of edge-disjoint spanning trees.
struct PartitionWitness {
  VertexPartition parts;
  std::int64_t crossing = 0;
  std::int64_t bound = 0;
};

inline constexpr int kUnboundedPacking = std::numeric_limits<int>::max();

struct PackingCertificate {
  int tau = 0;
  std::vector<std::vector<EdgeSlot>> forests;
  // Certifies that tau + 1 trees do not exist (bound == tau).
  std::optional<PartitionWitness> dual;
};

// Spanning tree packing number by matroid-union augmentation over graphic
// matroids, ascending k from 1. The dual partition is read off the exchange
// graph at the first failing k. n == 1 yields kUnboundedPacking.
// Throws Disconnected.
PackingCertificate spanning_tree_packing(const Multigraph& g);

// Builds the partition witness for `parts` (counts crossing edges).
PartitionWitness make_partition_witness(const Multigraph& g, VertexPartition parts);

struct PartitionOracleResult {
  int tau = 0;
  PartitionWitness witness;
};

// min over all partitions with >= 2 parts of floor(crossing/(parts-1)), by
// restricted-growth-string enumeration. Throws TooLarge if n > 10,
// Disconnected, SingleVertex.
PartitionOracleResult tau_partition_oracle(const Multigraph& g);

inline constexpr int kMaxPartitionOracleOrder = 10;

// |X| >= k * (c(G - X) - 1). Throws EdgeNotPresent.
bool check_nash_williams(const Multigraph& g, int k, const EdgeMultiset& removed);

struct CutProfile {
  std::vector<std::int64_t> r;   // r_i = e(V_i, V \ V_i) for components of G - X, ascending
  std::vector<int> labels;       // component id per vertex
  int components = 0;
  std::int64_t total = 0;        // sum of r_i
};

// Throws EdgeNotPresent.
CutProfile component_cut_profile(const Multigraph& g, const EdgeMultiset& removed);

// Edges of G joining different blocks of the partition.
EdgeMultiset crossing_edges(const Multigraph& g, const VertexPartition& parts);

// Forests pairwise disjoint, slots exist in G, each forest a spanning tree.
bool validate_packing(const Multigraph& g, const PackingCertificate& cert);

}  // namespace spectral_gate
