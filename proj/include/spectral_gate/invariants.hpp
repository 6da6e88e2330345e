#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spectral_gate/generators.hpp"
#include "spectral_gate/graph.hpp"
#include "spectral_gate/theorems.hpp"

namespace spectral_gate {

inline constexpr double kInvariantTolerance = 1e-8;
inline constexpr double kInterlacingTolerance = 1e-7;

struct CheckTally {
  std::int64_t checked = 0;
  std::int64_t failed = 0;
};

// Per-check counters plus the first few failure descriptions.
struct InvariantReport {
  std::map<std::string, CheckTally> tallies;
  std::vector<std::string> failures;

  // `detail` is called only on failure.
  template <class Detail>
  void record(const std::string& check, bool ok, Detail&& detail) {
    ++tallies[check].checked;
    if (!ok) fail(check, detail());
  }
  void fail(const std::string& check, const std::string& detail);
  void merge(const InvariantReport& other);
  std::int64_t failed() const;
};

// Traces, Laplacian null vector, 2delta <= q1 <= 2Delta (equality iff regular
// for connected graphs), and the four eigenvalue/degree inequalities
// mu_{n-1}+lambda_2 <= Delta, delta+lambda_2 <= q_2, mu_{n-2}+lambda_3 <= Delta,
// delta+lambda_3 <= q_3 (n >= 3).
void check_spectral_invariants(const GraphFacts& facts, InvariantReport& report);

// Quotient matrices of A and Q for one partition: interlacing, the
// row-sum bounds on the largest quotient eigenvalue, and the trace identity.
void check_quotient_invariants(const Multigraph& g, const SpectralSummary& s, const VertexPartition& partition,
                               InvariantReport& report);

// Every proper U with e(U, V\U) <= delta-1 has |U| >= delta+1 (simple graphs)
// or |U| >= max(ceil((delta+1)/m), 2) (multigraphs). Exhaustive, n <= 10.
void check_cut_size_bounds(const Multigraph& g, InvariantReport& report);
inline constexpr int kMaxCutSizeOrder = 10;

// Cut and packing certificates, tau <= kappa' <= delta, tau <= m/(n-1),
// dual witness bound, the r-sum identity, class witness recount.
void check_certificates(const GraphFacts& facts, InvariantReport& report);

// Both auxiliary inequalities over b in [3, b_max], b' in [2, b_max], k in [1, k_max].
void check_lemma_arith(int b_max, int k_max, InvariantReport& report);

VertexPartition random_partition(int n, Rng& rng);

struct SelftestOptions {
  int enumerate_max = 5;
  int random_graphs = 200;
  int partitions_per_graph = 5;
  std::uint64_t seed = 1;
};

// Runs every check above over a small mixed corpus.
InvariantReport run_selftest(const SelftestOptions& options);

}  // namespace spectral_gate
