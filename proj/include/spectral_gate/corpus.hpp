#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spectral_gate/graph.hpp"
#include "spectral_gate/theorems.hpp"

namespace spectral_gate {

inline constexpr const char* kToolName = "spectral_gate";
inline constexpr const char* kToolVersion = "0.1.0";

// Corpus sources. Random sources draw sample i from Rng(Rng::derive(seed, i)).
struct EnumerateSource {
  int n_min = 2;
  int n_max = 2;  // <= 8
};
struct FileSource {
  std::string path;
};
struct FamilySource {
  std::string name;
  int n = 0;
};
struct RandomRegularSource {
  int n_min = 0;  // each sample draws n uniformly from the values in
  int n_max = 0;  // [n_min, n_max] with n*d even
  int d = 3;
  std::int64_t count = 0;
  std::uint64_t seed = 0;
};
struct GnpSource {
  int n = 0;
  double p = 0.5;
  std::int64_t count = 0;
  std::uint64_t seed = 0;
};
struct RandomMultigraphSource {
  int n = 0;
  int max_mult = 2;
  double edge_factor = 2.0;
  std::int64_t count = 0;
  std::uint64_t seed = 0;
};
using CorpusSource =
    std::variant<EnumerateSource, FileSource, FamilySource, RandomRegularSource, GnpSource, RandomMultigraphSource>;

struct CorpusFilters {
  bool connected_only = true;
  std::int64_t min_degree = 0;
  bool class_only = false;
};

struct CorpusSpec {
  std::vector<CorpusSource> sources;
  CorpusFilters filters;
  std::vector<std::string> conditions;  // empty: whole catalog
  std::vector<int> k = {2, 3};
  bool records = true;      // emit one record per evaluated graph
  bool structural = true;   // run the structural checks on the dual partition
};

// Throws DomainError on unknown keys, bad types or out-of-range values.
CorpusSpec parse_corpus_spec(const nlohmann::json& j);
CorpusSpec load_corpus_spec(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const CorpusSpec& spec);

// Per-graph summary row.
struct GraphRecord {
  std::size_t source = 0;
  std::uint64_t index = 0;
  std::string encoding;
  int n = 0;
  std::int64_t m = 0;
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  std::int64_t kappa = 0;
  std::int64_t tau = 0;
  std::optional<double> lambda3;
  std::optional<double> q2;
  std::optional<double> q3;
  std::optional<double> mu_n2;
  std::string in_class;  // "yes", "no", "undecided", "n/a"
};

struct ConditionAggregate {
  std::string id;
  int k = 0;
  std::int64_t evaluated = 0;
  std::int64_t applicable = 0;
  std::int64_t degree_ok = 0;
  std::int64_t fired = 0;
  std::int64_t consistent = 0;
  std::int64_t boundary = 0;
  std::int64_t boundary_explained = 0;
  std::int64_t unexplained_boundary = 0;
  std::int64_t undecided = 0;
  std::optional<double> min_positive_margin;
};

struct StructuralAggregate {
  std::string id;
  int k = 0;
  std::int64_t evaluated = 0;
  std::int64_t fired = 0;
  std::int64_t consistent = 0;
};

// A verdict worth reporting: a counterexample, an unexplained boundary case,
// or (in search mode) a graph outside the class whose hypothesis fired.
struct VerdictEntry {
  std::size_t source = 0;
  std::uint64_t index = 0;
  std::string encoding;
  std::string condition;
  int k = 0;
  std::optional<double> spectral_value;
  std::optional<Rational> threshold;
  std::optional<double> margin;
  std::int64_t kappa = 0;
  std::int64_t tau = 0;
  bool conclusion_holds = false;
};

struct Report {
  std::string mode;  // "sweep" or "search-outside-g"
  CorpusSpec spec;
  std::vector<std::string> conditions;
  std::int64_t graphs_seen = 0;
  std::int64_t graphs_evaluated = 0;
  std::int64_t filtered = 0;
  std::int64_t undecided_graphs = 0;
  std::vector<GraphRecord> records;
  std::vector<ConditionAggregate> aggregates;
  std::vector<StructuralAggregate> structural;
  std::vector<VerdictEntry> counterexamples;
  std::vector<VerdictEntry> unexplained_boundaries;
  std::vector<VerdictEntry> findings;
  std::optional<std::string> timestamp;

  bool success() const { return counterexamples.empty(); }
  std::int64_t never_fired() const;
};

struct SweepOptions {
  int threads = 0;  // 0: SPECTRAL_GATE_THREADS, else hardware concurrency
};

int default_thread_count();

// Evaluates every (graph, condition, k). Graphs with n < 2 and, under
// connected_only, disconnected graphs are counted as filtered.
Report run_sweep(const CorpusSpec& spec, const SweepOptions& options = {});

// Restricts to connected graphs outside the class and evaluates the
// class-requiring conditions with the class requirement dropped. Every
// fired hypothesis is listed as a finding; nothing fails the run.
Report search_outside_g(const CorpusSpec& spec, const SweepOptions& options = {});

nlohmann::ordered_json to_json(const Report& report);
// One line per record, header first.
std::string records_csv(const Report& report);

// Expands the sources into graphs, in report order (small corpora only).
std::vector<Multigraph> materialize(const CorpusSpec& spec);

}  // namespace spectral_gate
