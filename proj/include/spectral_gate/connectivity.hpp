#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectral_gate/graph.hpp"

namespace spectral_gate {

// kappa'(G) together with one side S of a minimum cut: e(S, V\S) = value.
struct CutCertificate {
  std::int64_t value = 0;
  VertexSubset side;
};

// Global minimum edge cut by Stoer-Wagner with multiplicities as weights.
// Ties in the maximum-adjacency order go to the lowest vertex index.
// Disconnected input yields value 0 with the component of vertex 0 as side.
// Throws SingleVertex if n < 2.
CutCertificate edge_connectivity(const Multigraph& g);

// Largest order accepted by the bitmask enumerations below.
inline constexpr int kMaxEnumerationOrder = 24;

// Minimum of e(S, V\S) over all 2^(n-1)-1 proper bipartitions. Independent of
// edge_connectivity; exists to cross-check it. Throws SingleVertex, TooLarge.
std::int64_t min_cut_oracle(const Multigraph& g);

// Every proper non-empty S (both sides of each cut) with e(S, V\S) == value,
// as bitmasks in increasing order. Throws TooLarge if n > 24.
std::vector<std::uint32_t> cut_sides_with_value(const Multigraph& g, std::int64_t value);

// Two disjoint non-empty proper vertex sets, each a side of a minimum cut,
// whose union misses at least one vertex.
struct GClassWitness {
  VertexSubset first;
  VertexSubset second;
  std::int64_t kappa = 0;
};

enum class Membership { InClass, NotInClass, Undecided };

struct GClassResult {
  Membership status = Membership::Undecided;
  std::optional<GClassWitness> witness;
  std::int64_t kappa = 0;
};

// Decides membership in the class of graphs having two disjoint minimum-cut
// sides that leave a vertex uncovered. Fast path: two vertices whose degree
// equals kappa'. Otherwise exhaustive over cut sides for n <= 24, and
// Undecided beyond that. Throws TooSmall if n < 3.
GClassResult g_class_membership(const Multigraph& g);
GClassResult g_class_membership(const Multigraph& g, std::int64_t kappa);

// Recounts a witness against the definition.
bool validate_witness(const Multigraph& g, const GClassWitness& w);

}  // namespace spectral_gate
