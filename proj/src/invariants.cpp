#include "spectral_gate/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spectral_gate/errors.hpp"
#include "spectral_gate/graph6.hpp"

namespace spectral_gate {

namespace {

constexpr std::size_t kMaxStoredFailures = 50;

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

bool non_increasing(const std::vector<double>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

std::string describe(const Multigraph& g, const std::string& what) { return encode_graph(g) + ": " + what; }

}  // namespace

void InvariantReport::fail(const std::string& check, const std::string& detail) {
  ++tallies[check].failed;
  if (failures.size() < kMaxStoredFailures) failures.push_back(check + " " + detail);
}

void InvariantReport::merge(const InvariantReport& other) {
  for (const auto& [name, t] : other.tallies) {
    tallies[name].checked += t.checked;
    tallies[name].failed += t.failed;
  }
  for (const auto& f : other.failures)
    if (failures.size() < kMaxStoredFailures) failures.push_back(f);
}

std::int64_t InvariantReport::failed() const {
  std::int64_t total = 0;
  for (const auto& [name, t] : tallies) total += t.failed;
  return total;
}

void check_spectral_invariants(const GraphFacts& facts, InvariantReport& report) {
  const auto& s = facts.spectrum;
  const auto& g = facts.graph;
  const double tol = kInvariantTolerance;
  const double trace_tol = tol * std::max<double>(1.0, static_cast<double>(2 * s.m));
  const auto two_m = static_cast<double>(2 * s.m);

  report.record("sorted", non_increasing(s.adjacency) && non_increasing(s.laplacian) && non_increasing(s.signless), [&] { return describe(g, "spectrum not sorted"); });
  report.record("trace-adjacency", std::abs(sum(s.adjacency)) <= trace_tol, [&] { return describe(g, "sum of lambda"); });
  report.record("trace-laplacian", std::abs(sum(s.laplacian) - two_m) <= trace_tol, [&] { return describe(g, "sum of mu"); });
  report.record("trace-signless", std::abs(sum(s.signless) - two_m) <= trace_tol, [&] { return describe(g, "sum of q"); });
  report.record("laplacian-null", std::abs(s.mu(s.n)) <= tol, [&] { return describe(g, "mu_n != 0"); });

  const auto delta = static_cast<double>(s.min_degree);
  const auto big = static_cast<double>(s.max_degree);
  const double q1 = s.q(1);
  report.record("q1-degree-bounds", 2 * delta - tol <= q1 && q1 <= 2 * big + tol, [&] { return describe(g, "q1 outside [2delta, 2Delta]"); });
  if (is_connected(g)) {
    if (s.min_degree == s.max_degree) {
      report.record("q1-regular-equality", std::abs(q1 - 2 * delta) <= tol, [&] { return describe(g, "regular but q1 != 2d"); });
    } else {
      report.record("q1-irregular-strict", q1 > 2 * delta + tol && q1 < 2 * big - tol, [&] { return describe(g, "irregular but q1 meets a bound"); });
    }
  }
  if (s.n >= 3) {
    report.record("mu-lambda2", s.mu(s.n - 1) + s.lambda(2) <= big + tol, [&] { return describe(g, "mu_{n-1} + lambda_2 > Delta"); });
    report.record("delta-lambda2", delta + s.lambda(2) <= s.q(2) + tol, [&] { return describe(g, "delta + lambda_2 > q_2"); });
    report.record("mu-lambda3", s.mu(s.n - 2) + s.lambda(3) <= big + tol, [&] { return describe(g, "mu_{n-2} + lambda_3 > Delta"); });
    report.record("delta-lambda3", delta + s.lambda(3) <= s.q(3) + tol, [&] { return describe(g, "delta + lambda_3 > q_3"); });
  }
}

void check_quotient_invariants(const Multigraph& g, const SpectralSummary& s, const VertexPartition& partition,
                               InvariantReport& report) {
  const auto averages = induced_average_degrees(g, partition);
  const double lo = to_double(*std::min_element(averages.begin(), averages.end()));
  const double hi = to_double(*std::max_element(averages.begin(), averages.end()));
  const double tol = kInvariantTolerance;

  for (auto kind : {QuotientKind::Adjacency, QuotientKind::SignlessLaplacian}) {
    const bool adjacency = kind == QuotientKind::Adjacency;
    const auto qm = quotient_matrix(g, partition, kind);
    const auto eta = quotient_eigenvalues(qm);
    const auto& theta = adjacency ? s.adjacency : s.signless;
    const auto inter = check_interlacing(theta, eta, kInterlacingTolerance);
    std::ostringstream where;
    where << "partition of size " << partition.size() << ", first violation " << inter.first_violation;
    report.record(adjacency ? "interlacing-adjacency" : "interlacing-signless", inter.holds, [&] { return describe(g, where.str()); });

    const double scale = adjacency ? 1.0 : 2.0;
    const double top = eta.front();
    if (is_connected(g)) {
      report.record(adjacency ? "quotient-lambda1-bounds" : "quotient-q1-bounds",
                    scale * lo - tol <= top && top <= scale * hi + tol, [&] { return describe(g, "largest quotient eigenvalue"); });
    }
    report.record("quotient-trace", std::abs(sum(eta) - to_double(qm.trace())) <= 1e-9 * std::max(1.0, std::abs(to_double(qm.trace()))), [&] { return describe(g, "quotient eigenvalue sum"); });
  }
}

void check_cut_size_bounds(const Multigraph& g, InvariantReport& report) {
  const int n = g.order();
  if (n < 2 || n > kMaxCutSizeOrder || !is_connected(g)) return;
  const auto stats = degree_stats(g);
  const std::int64_t delta = stats.min_degree;
  const bool simple = g.simple();
  const std::int64_t need = simple ? delta + 1 : multigraph_l(delta, g.max_multiplicity());
  const auto edges = g.edges();
  const std::uint32_t full = (1U << n) - 1;
  bool ok = true;
  std::uint32_t bad = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::int64_t boundary = 0;
    for (const auto& e : edges)
      if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) boundary += e.count;
    if (boundary <= delta - 1 && std::popcount(mask) < need) {
      ok = false;
      bad = mask;
      break;
    }
  }
  report.record(simple ? "cut-size-simple" : "cut-size-multigraph", ok, [&] { return describe(g, "small side mask " + std::to_string(bad)); });
}

void check_certificates(const GraphFacts& facts, InvariantReport& report) {
  const auto& g = facts.graph;
  const int n = g.order();
  if (n < 2) return;
  const auto& cut = facts.cut;
  report.record("cut-certificate", cut.side.proper() && cut_weight(g, cut.side) == cut.value, [&] { return describe(g, "cut side"); });
  report.record("kappa-le-delta", cut.value <= facts.spectrum.min_degree, [&] { return describe(g, "kappa' > delta"); });

  const auto& p = facts.packing;
  report.record("packing-certificate", validate_packing(g, p), [&] { return describe(g, "forests"); });
  report.record("tau-le-kappa", p.tau <= cut.value, [&] { return describe(g, "tau > kappa'"); });
  report.record("tau-le-edge-ratio", static_cast<std::int64_t>(p.tau) <= g.edge_count() / (n - 1), [&] { return describe(g, "tau > m/(n-1)"); });
  if (p.dual) {
    const auto& d = *p.dual;
    const auto s = static_cast<std::int64_t>(d.parts.size());
    const auto x = crossing_edges(g, d.parts);
    std::int64_t recount = 0;
    for (const auto& e : x) recount += e.count;
    const auto profile = component_cut_profile(g, x);
    const bool ok = s >= 2 && recount == d.crossing && d.bound == d.crossing / (s - 1) && d.bound == p.tau &&
                    profile.components == s && profile.total == 2 * d.crossing &&
                    !check_nash_williams(g, p.tau + 1, x);
    report.record("packing-dual", ok, [&] { return describe(g, "dual partition"); });
  }
  if (facts.membership.witness)
    report.record("class-witness", validate_witness(g, *facts.membership.witness), [&] { return describe(g, "class witness"); });
}

void check_lemma_arith(int b_max, int k_max, InvariantReport& report) {
  for (int b = 3; b <= b_max; ++b)
    for (int k = 1; k <= k_max; ++k)
      report.record("arith-first", lemma_arith_check(ArithLemma::Lemma211, b, k), [&] { return "b=" + std::to_string(b) + " k=" + std::to_string(k); });
  for (int b = 2; b <= b_max; ++b)
    for (int k = 1; k <= k_max; ++k)
      report.record("arith-second", lemma_arith_check(ArithLemma::Lemma212, b, k), [&] { return "b'=" + std::to_string(b) + " k=" + std::to_string(k); });
}

VertexPartition random_partition(int n, Rng& rng) {
  const auto t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
  std::vector<int> labels(static_cast<std::size_t>(n));
  // The first t vertices of a random order seed the blocks; the rest join at random.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (int i = 0; i < n; ++i) {
    const int label = i < t ? i : static_cast<int>(rng.below(static_cast<std::uint64_t>(t)));
    labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = label;
  }
  return VertexPartition::from_labels(labels);
}

InvariantReport run_selftest(const SelftestOptions& options) {
  InvariantReport report;
  Rng rng(options.seed);
  auto full = [&](const Multigraph& g) {
    const auto facts = analyze_graph(g);
    check_spectral_invariants(facts, report);
    check_certificates(facts, report);
    check_cut_size_bounds(g, report);
    for (int i = 0; i < options.partitions_per_graph; ++i)
      check_quotient_invariants(g, facts.spectrum, random_partition(g.order(), rng), report);
  };

  for (int n = 2; n <= options.enumerate_max; ++n) enumerate_connected(n, full);
  for (const auto& name : family_names()) full(named_family(name, 8));
  for (int i = 0; i < options.random_graphs; ++i) {
    const int n = 3 + static_cast<int>(rng.below(10));
    Multigraph g = i % 2 == 0 ? gen_gnp(n, 0.5, rng) : gen_random_multigraph(n, 3, 2.0, rng);
    if (!is_connected(g)) continue;
    full(g);
  }
  check_lemma_arith(100, 100, report);
  return report;
}

}  // namespace spectral_gate
