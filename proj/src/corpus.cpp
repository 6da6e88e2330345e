#include "spectral_gate/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "spectral_gate/errors.hpp"
#include "spectral_gate/generators.hpp"
#include "spectral_gate/graph6.hpp"

namespace spectral_gate {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------- config

namespace {

void expect_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw DomainError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw DomainError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
T get_or(const json& obj, const char* key, T fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(where + "." + key + ": " + e.what());
  }
}

template <class T>
T require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw DomainError(where + ": missing '" + key + "'");
  return get_or<T>(obj, key, T{}, where);
}

CorpusSource parse_source(const json& j, std::size_t position) {
  const std::string where = "sources[" + std::to_string(position) + "]";
  if (!j.is_object() || j.size() != 1) throw DomainError(where + ": expected an object with one key");
  const auto& [kind, body] = *j.items().begin();

  if (kind == "enumerate") {
    EnumerateSource s;
    if (body.is_number_integer()) {
      s.n_max = body.get<int>();
    } else {
      expect_keys(body, {"n_min", "n_max"}, where);
      s.n_min = get_or(body, "n_min", 2, where);
      s.n_max = require<int>(body, "n_max", where);
    }
    if (s.n_min < 2 || s.n_max > kMaxEnumerationVertices || s.n_min > s.n_max)
      throw DomainError(where + ": enumerate needs 2 <= n_min <= n_max <= 8");
    return s;
  }
  if (kind == "file") {
    if (!body.is_string()) throw DomainError(where + ": file expects a path string");
    return FileSource{body.get<std::string>()};
  }
  if (kind == "family") {
    FamilySource s;
    if (body.is_string()) {
      s.name = body.get<std::string>();
    } else {
      expect_keys(body, {"name", "n"}, where);
      s.name = require<std::string>(body, "name", where);
      s.n = get_or(body, "n", 0, where);
    }
    const auto names = family_names();
    if (std::find(names.begin(), names.end(), s.name) == names.end()) throw DomainError(where + ": unknown family " + s.name);
    return s;
  }
  if (kind == "random_regular") {
    expect_keys(body, {"n", "d", "count", "seed"}, where);
    RandomRegularSource s;
    const auto& n = body.contains("n") ? body.at("n") : throw DomainError(where + ": missing 'n'");
    if (n.is_array() && n.size() == 2) {
      s.n_min = n[0].get<int>();
      s.n_max = n[1].get<int>();
    } else if (n.is_number_integer()) {
      s.n_min = s.n_max = n.get<int>();
    } else {
      throw DomainError(where + ": n must be an integer or [lo, hi]");
    }
    s.d = require<int>(body, "d", where);
    s.count = require<std::int64_t>(body, "count", where);
    s.seed = require<std::uint64_t>(body, "seed", where);
    if (s.n_min < 1 || s.n_min > s.n_max || s.d < 0 || s.count < 0) throw DomainError(where + ": bad random_regular parameters");
    bool any = false;
    for (int v = s.n_min; v <= s.n_max; ++v) any = any || ((v * s.d) % 2 == 0 && s.d < v);
    if (!any) throw DomainError(where + ": no order in range admits a " + std::to_string(s.d) + "-regular graph");
    return s;
  }
  if (kind == "gnp") {
    expect_keys(body, {"n", "p", "count", "seed"}, where);
    GnpSource s;
    s.n = require<int>(body, "n", where);
    s.p = require<double>(body, "p", where);
    s.count = require<std::int64_t>(body, "count", where);
    s.seed = require<std::uint64_t>(body, "seed", where);
    if (s.n < 1 || !(s.p >= 0 && s.p <= 1) || s.count < 0) throw DomainError(where + ": bad gnp parameters");
    return s;
  }
  if (kind == "random_multigraph") {
    expect_keys(body, {"n", "max_mult", "edge_factor", "count", "seed"}, where);
    RandomMultigraphSource s;
    s.n = require<int>(body, "n", where);
    s.max_mult = require<int>(body, "max_mult", where);
    s.edge_factor = get_or(body, "edge_factor", 2.0, where);
    s.count = require<std::int64_t>(body, "count", where);
    s.seed = require<std::uint64_t>(body, "seed", where);
    if (s.n < 1 || s.max_mult < 1 || s.edge_factor < 0 || s.count < 0)
      throw DomainError(where + ": bad random_multigraph parameters");
    return s;
  }
  throw DomainError(where + ": unknown source kind '" + kind + "'");
}

ordered_json source_to_json(const CorpusSource& source) {
  return std::visit(
      [](const auto& s) -> ordered_json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EnumerateSource>) {
          return {{"enumerate", {{"n_min", s.n_min}, {"n_max", s.n_max}}}};
        } else if constexpr (std::is_same_v<T, FileSource>) {
          return {{"file", s.path}};
        } else if constexpr (std::is_same_v<T, FamilySource>) {
          return {{"family", {{"name", s.name}, {"n", s.n}}}};
        } else if constexpr (std::is_same_v<T, RandomRegularSource>) {
          return {{"random_regular", {{"n", {s.n_min, s.n_max}}, {"d", s.d}, {"count", s.count}, {"seed", s.seed}}}};
        } else if constexpr (std::is_same_v<T, GnpSource>) {
          return {{"gnp", {{"n", s.n}, {"p", s.p}, {"count", s.count}, {"seed", s.seed}}}};
        } else {
          return {{"random_multigraph",
                   {{"n", s.n}, {"max_mult", s.max_mult}, {"edge_factor", s.edge_factor}, {"count", s.count}, {"seed", s.seed}}}};
        }
      },
      source);
}

}  // namespace

CorpusSpec parse_corpus_spec(const json& j) {
  expect_keys(j, {"sources", "filters", "conditions", "k", "records", "structural"}, "spec");
  CorpusSpec spec;
  if (j.contains("sources")) {
    if (!j.at("sources").is_array()) throw DomainError("spec.sources: expected an array");
    std::size_t i = 0;
    for (const auto& s : j.at("sources")) spec.sources.push_back(parse_source(s, i++));
  }
  if (j.contains("filters")) {
    const auto& f = j.at("filters");
    expect_keys(f, {"connected_only", "min_degree", "class_only"}, "filters");
    spec.filters.connected_only = get_or(f, "connected_only", true, "filters");
    spec.filters.min_degree = get_or<std::int64_t>(f, "min_degree", 0, "filters");
    spec.filters.class_only = get_or(f, "class_only", false, "filters");
  }
  spec.conditions = get_or(j, "conditions", std::vector<std::string>{}, "spec");
  for (const auto& id : spec.conditions) (void)find_condition(id);
  spec.k = get_or(j, "k", std::vector<int>{2, 3}, "spec");
  if (spec.k.empty()) throw DomainError("spec.k: empty");
  for (int k : spec.k)
    if (k < 2) throw DomainError("spec.k: values must be >= 2");
  spec.records = get_or(j, "records", true, "spec");
  spec.structural = get_or(j, "structural", true, "spec");
  return spec;
}

CorpusSpec load_corpus_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
  auto spec = parse_corpus_spec(j);
  // Relative graph files are resolved against the config's directory.
  for (auto& s : spec.sources) {
    if (auto* f = std::get_if<FileSource>(&s); f && std::filesystem::path(f->path).is_relative())
      f->path = (path.parent_path() / f->path).lexically_normal().string();
  }
  return spec;
}

ordered_json to_json(const CorpusSpec& spec) {
  ordered_json sources = ordered_json::array();
  for (const auto& s : spec.sources) sources.push_back(source_to_json(s));
  return {{"sources", sources},
          {"filters",
           {{"connected_only", spec.filters.connected_only},
            {"min_degree", spec.filters.min_degree},
            {"class_only", spec.filters.class_only}}},
          {"conditions", spec.conditions},
          {"k", spec.k},
          {"records", spec.records},
          {"structural", spec.structural}};
}

// ---------------------------------------------------------------- sources

namespace {

// Random access view of one source: item(i) is nullopt for slots that hold
// no graph (disconnected enumeration masks).
struct SourcePlan {
  std::uint64_t count = 0;
  std::function<std::optional<Multigraph>(std::uint64_t)> item;
};

int pick_order(const RandomRegularSource& s, Rng& rng) {
  std::vector<int> orders;
  for (int v = s.n_min; v <= s.n_max; ++v)
    if ((v * s.d) % 2 == 0 && s.d < v) orders.push_back(v);
  return orders[rng.below(orders.size())];
}

SourcePlan plan_source(const CorpusSource& source) {
  return std::visit(
      [](const auto& s) -> SourcePlan {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EnumerateSource>) {
          std::vector<std::uint64_t> starts;
          std::uint64_t total = 0;
          for (int n = s.n_min; n <= s.n_max; ++n) {
            starts.push_back(total);
            total += std::uint64_t{1} << pair_count(n);
          }
          const int n_min = s.n_min;
          return {total, [starts, n_min](std::uint64_t i) -> std::optional<Multigraph> {
                    const auto it = std::upper_bound(starts.begin(), starts.end(), i) - 1;
                    const int n = n_min + static_cast<int>(it - starts.begin());
                    const std::uint64_t mask = i - *it;
                    if (!edge_mask_connected(n, mask)) return std::nullopt;
                    return graph_from_edge_mask(n, mask);
                  }};
        } else if constexpr (std::is_same_v<T, FileSource>) {
          auto graphs = std::make_shared<std::vector<Multigraph>>(read_graph_file(s.path));
          return {graphs->size(), [graphs](std::uint64_t i) -> std::optional<Multigraph> { return (*graphs)[i]; }};
        } else if constexpr (std::is_same_v<T, FamilySource>) {
          const auto g = named_family(s.name, s.n);
          return {1, [g](std::uint64_t) -> std::optional<Multigraph> { return g; }};
        } else if constexpr (std::is_same_v<T, RandomRegularSource>) {
          return {static_cast<std::uint64_t>(s.count), [s](std::uint64_t i) -> std::optional<Multigraph> {
                    Rng rng(Rng::derive(s.seed, i));
                    const int n = pick_order(s, rng);
                    return gen_random_regular(n, s.d, rng);
                  }};
        } else if constexpr (std::is_same_v<T, GnpSource>) {
          return {static_cast<std::uint64_t>(s.count), [s](std::uint64_t i) -> std::optional<Multigraph> {
                    Rng rng(Rng::derive(s.seed, i));
                    return gen_gnp(s.n, s.p, rng);
                  }};
        } else {
          return {static_cast<std::uint64_t>(s.count), [s](std::uint64_t i) -> std::optional<Multigraph> {
                    Rng rng(Rng::derive(s.seed, i));
                    return gen_random_multigraph(s.n, s.max_mult, s.edge_factor, rng);
                  }};
        }
      },
      source);
}

// ---------------------------------------------------------------- engine

enum class Mode { Sweep, Search };

struct Accumulator {
  std::int64_t seen = 0;
  std::int64_t evaluated = 0;
  std::int64_t filtered = 0;
  std::int64_t undecided_graphs = 0;
  std::vector<ConditionAggregate> aggregates;
  std::vector<StructuralAggregate> structural;
  std::vector<GraphRecord> records;
  std::vector<VerdictEntry> counterexamples;
  std::vector<VerdictEntry> unexplained;
  std::vector<VerdictEntry> findings;

  void merge(Accumulator&& other) {
    seen += other.seen;
    evaluated += other.evaluated;
    filtered += other.filtered;
    undecided_graphs += other.undecided_graphs;
    for (std::size_t i = 0; i < aggregates.size(); ++i) {
      auto& a = aggregates[i];
      const auto& b = other.aggregates[i];
      a.evaluated += b.evaluated;
      a.applicable += b.applicable;
      a.degree_ok += b.degree_ok;
      a.fired += b.fired;
      a.consistent += b.consistent;
      a.boundary += b.boundary;
      a.boundary_explained += b.boundary_explained;
      a.unexplained_boundary += b.unexplained_boundary;
      a.undecided += b.undecided;
      if (b.min_positive_margin && (!a.min_positive_margin || *b.min_positive_margin < *a.min_positive_margin))
        a.min_positive_margin = b.min_positive_margin;
    }
    for (std::size_t i = 0; i < structural.size(); ++i) {
      structural[i].evaluated += other.structural[i].evaluated;
      structural[i].fired += other.structural[i].fired;
      structural[i].consistent += other.structural[i].consistent;
    }
    auto append = [](auto& into, auto& from) { into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end())); };
    append(records, other.records);
    append(counterexamples, other.counterexamples);
    append(unexplained, other.unexplained);
    append(findings, other.findings);
  }
};

struct Engine {
  Mode mode;
  const CorpusSpec& spec;
  std::vector<const ConditionSpec*> conditions;
  std::vector<std::string> structural_ids;
  std::vector<SourcePlan> plans;
  std::vector<std::uint64_t> offsets;  // first global index of each source
  std::uint64_t total = 0;

  Accumulator fresh() const {
    Accumulator acc;
    for (const auto* c : conditions)
      for (int k : spec.k) {
        ConditionAggregate a;
        a.id = c->id;
        a.k = k;
        acc.aggregates.push_back(std::move(a));
      }
    if (mode == Mode::Sweep && spec.structural)
      for (const auto& id : structural_ids)
        for (int k : spec.k) {
          StructuralAggregate a;
          a.id = id;
          a.k = k;
          acc.structural.push_back(std::move(a));
        }
    return acc;
  }

  static std::optional<double> maybe(bool defined, double value) {
    return defined ? std::optional<double>(value) : std::nullopt;
  }

  GraphRecord record_for(std::size_t source, std::uint64_t index, const GraphFacts& f) const {
    const auto& s = f.spectrum;
    GraphRecord r;
    r.source = source;
    r.index = index;
    r.encoding = encode_graph(f.graph);
    r.n = s.n;
    r.m = s.m;
    r.min_degree = s.min_degree;
    r.max_degree = s.max_degree;
    r.kappa = f.cut.value;
    r.tau = f.packing.tau;
    r.lambda3 = maybe(s.n >= 3, s.n >= 3 ? s.lambda(3) : 0.0);
    r.q2 = maybe(s.n >= 2, s.n >= 2 ? s.q(2) : 0.0);
    r.q3 = maybe(s.n >= 3, s.n >= 3 ? s.q(3) : 0.0);
    r.mu_n2 = maybe(s.n >= 3, s.n >= 3 ? s.mu(s.n - 2) : 0.0);
    switch (f.membership.status) {
      case Membership::InClass: r.in_class = "yes"; break;
      case Membership::NotInClass: r.in_class = s.n >= 3 ? "no" : "n/a"; break;
      case Membership::Undecided: r.in_class = "undecided"; break;
    }
    return r;
  }

  static VerdictEntry entry_for(std::size_t source, std::uint64_t index, const std::string& encoding,
                                const GraphFacts& f, const ConditionVerdict& v) {
    VerdictEntry e;
    e.source = source;
    e.index = index;
    e.encoding = encoding;
    e.condition = v.condition_id;
    e.k = v.k;
    e.spectral_value = v.spectral_value;
    e.threshold = v.threshold;
    e.margin = v.margin;
    e.kappa = f.cut.value;
    e.tau = f.packing.tau;
    e.conclusion_holds = v.conclusion_holds;
    return e;
  }

  GraphRecord disconnected_record(std::size_t source, std::uint64_t index, const Multigraph& g) const {
    const auto s = spectral_summary(g);
    GraphRecord r;
    r.source = source;
    r.index = index;
    r.encoding = encode_graph(g);
    r.n = s.n;
    r.m = s.m;
    r.min_degree = s.min_degree;
    r.max_degree = s.max_degree;
    r.lambda3 = maybe(s.n >= 3, s.n >= 3 ? s.lambda(3) : 0.0);
    r.q2 = maybe(s.n >= 2, s.n >= 2 ? s.q(2) : 0.0);
    r.q3 = maybe(s.n >= 3, s.n >= 3 ? s.q(3) : 0.0);
    r.mu_n2 = maybe(s.n >= 3, s.n >= 3 ? s.mu(s.n - 2) : 0.0);
    r.in_class = "n/a";
    return r;
  }

  void process(std::size_t source, std::uint64_t index, const Multigraph& g, Accumulator& acc) const {
    ++acc.seen;
    if (g.order() < 2) {
      ++acc.filtered;
      return;
    }
    if (!is_connected(g)) {
      ++acc.filtered;
      if (mode == Mode::Sweep && !spec.filters.connected_only && spec.records)
        acc.records.push_back(disconnected_record(source, index, g));
      return;
    }
    if (degree_stats(g).min_degree < spec.filters.min_degree) {
      ++acc.filtered;
      return;
    }
    const GraphFacts facts = analyze_graph(g);
    const auto status = facts.membership.status;
    const bool keep = mode == Mode::Search ? (g.order() >= 3 && status == Membership::NotInClass)
                                           : (!spec.filters.class_only || status == Membership::InClass);
    if (mode == Mode::Search && status == Membership::Undecided) ++acc.undecided_graphs;
    if (!keep) {
      ++acc.filtered;
      return;
    }
    ++acc.evaluated;
    if (mode == Mode::Sweep && status == Membership::Undecided) ++acc.undecided_graphs;

    std::string encoding;
    auto enc = [&]() -> const std::string& {
      if (encoding.empty()) encoding = encode_graph(g);
      return encoding;
    };

    std::size_t slot = 0;
    for (const auto* c : conditions) {
      for (int k : spec.k) {
        auto& agg = acc.aggregates[slot++];
        ++agg.evaluated;
        ConditionVerdict v;
        try {
          v = evaluate(facts, *c, k, mode == Mode::Search);
        } catch (const UndecidedClass&) {
          ++agg.undecided;
          continue;
        }
        if (v.applicable) ++agg.applicable;
        if (v.degree_ok) ++agg.degree_ok;
        if (v.hypothesis_holds) {
          ++agg.fired;
          if (!agg.min_positive_margin || *v.margin < *agg.min_positive_margin) agg.min_positive_margin = v.margin;
        }
        if (v.consistent) ++agg.consistent;
        if (v.boundary) ++agg.boundary;
        if (v.boundary_explained) ++agg.boundary_explained;
        const bool unexplained = v.boundary && !v.boundary_explained && !v.conclusion_holds;
        if (unexplained) {
          ++agg.unexplained_boundary;
          acc.unexplained.push_back(entry_for(source, index, enc(), facts, v));
        }
        if (mode == Mode::Search) {
          if (v.hypothesis_holds) acc.findings.push_back(entry_for(source, index, enc(), facts, v));
        } else if (!v.consistent) {
          acc.counterexamples.push_back(entry_for(source, index, enc(), facts, v));
        }
      }
    }

    if (mode == Mode::Sweep && spec.structural) {
      for (std::size_t ki = 0; ki < spec.k.size(); ++ki) {
        const int k = spec.k[ki];
        for (const auto& sv : structural_checks(facts, k)) {
          const auto pos = static_cast<std::size_t>(std::find(structural_ids.begin(), structural_ids.end(), sv.id) -
                                                    structural_ids.begin());
          auto& agg = acc.structural[pos * spec.k.size() + ki];
          ++agg.evaluated;
          if (sv.hypothesis_holds) ++agg.fired;
          if (sv.consistent) {
            ++agg.consistent;
          } else {
            VerdictEntry e;
            e.source = source;
            e.index = index;
            e.encoding = enc();
            e.condition = sv.id;
            e.k = k;
            e.kappa = facts.cut.value;
            e.tau = facts.packing.tau;
            e.conclusion_holds = sv.conclusion_holds;
            acc.counterexamples.push_back(std::move(e));
          }
        }
      }
    }

    if (spec.records) acc.records.push_back(record_for(source, index, facts));
  }

  void run_range(std::uint64_t begin, std::uint64_t end, Accumulator& acc) const {
    std::size_t src = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), begin) - offsets.begin()) - 1;
    for (std::uint64_t i = begin; i < end; ++i) {
      while (i >= offsets[src] + plans[src].count) ++src;
      const std::uint64_t local = i - offsets[src];
      if (auto g = plans[src].item(local)) process(src, local, *g, acc);
    }
  }
};

Report run(Mode mode, const CorpusSpec& spec, const SweepOptions& options) {
  Engine engine{mode, spec, {}, structural_check_ids(), {}, {}, 0};
  if (spec.conditions.empty()) {
    for (const auto& c : catalog()) engine.conditions.push_back(&c);
  } else {
    for (const auto& id : spec.conditions) engine.conditions.push_back(&find_condition(id));
  }
  if (mode == Mode::Search) {
    std::erase_if(engine.conditions, [](const ConditionSpec* c) { return !c->requires_class; });
  }
  for (const auto& s : spec.sources) {
    engine.offsets.push_back(engine.total);
    engine.plans.push_back(plan_source(s));
    engine.total += engine.plans.back().count;
  }

  const int threads = std::max(1, options.threads > 0 ? options.threads : default_thread_count());
  constexpr std::uint64_t kChunk = 512;
  std::atomic<std::uint64_t> next{0};
  std::vector<Accumulator> partial(static_cast<std::size_t>(threads), engine.fresh());
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto worker = [&](std::size_t w) {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= engine.total) break;
        engine.run_range(begin, std::min(engine.total, begin + kChunk), partial[w]);
      }
    } catch (...) {
      std::lock_guard lock(failure_lock);
      if (!failure) failure = std::current_exception();
      next.store(engine.total);
    }
  };
  if (threads == 1 || engine.total <= kChunk) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, static_cast<std::size_t>(w));
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Accumulator total = engine.fresh();
  for (auto& p : partial) total.merge(std::move(p));

  std::map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < engine.conditions.size(); ++i) order[engine.conditions[i]->id] = i;
  for (std::size_t i = 0; i < engine.structural_ids.size(); ++i) order[engine.structural_ids[i]] = engine.conditions.size() + i;
  auto by_position = [&](const VerdictEntry& a, const VerdictEntry& b) {
    return std::tie(a.source, a.index, order[a.condition], a.k) < std::tie(b.source, b.index, order[b.condition], b.k);
  };
  std::sort(total.records.begin(), total.records.end(),
            [](const GraphRecord& a, const GraphRecord& b) { return std::tie(a.source, a.index) < std::tie(b.source, b.index); });
  std::sort(total.counterexamples.begin(), total.counterexamples.end(), by_position);
  std::sort(total.unexplained.begin(), total.unexplained.end(), by_position);
  std::sort(total.findings.begin(), total.findings.end(), by_position);

  Report report;
  report.mode = mode == Mode::Sweep ? "sweep" : "search-outside-g";
  report.spec = spec;
  for (const auto* c : engine.conditions) report.conditions.push_back(c->id);
  report.graphs_seen = total.seen;
  report.graphs_evaluated = total.evaluated;
  report.filtered = total.filtered;
  report.undecided_graphs = total.undecided_graphs;
  report.records = std::move(total.records);
  report.aggregates = std::move(total.aggregates);
  report.structural = std::move(total.structural);
  report.counterexamples = std::move(total.counterexamples);
  report.unexplained_boundaries = std::move(total.unexplained);
  report.findings = std::move(total.findings);
  return report;
}

ordered_json optional_number(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ordered_json entry_json(const VerdictEntry& e) {
  return {{"source", e.source},
          {"index", e.index},
          {"graph", e.encoding},
          {"condition", e.condition},
          {"k", e.k},
          {"spectral_value", optional_number(e.spectral_value)},
          {"threshold", e.threshold ? ordered_json(rational_text(*e.threshold)) : ordered_json(nullptr)},
          {"margin", optional_number(e.margin)},
          {"kappa", e.kappa},
          {"tau", e.tau},
          {"conclusion_holds", e.conclusion_holds}};
}

std::string number_text(const std::optional<double>& v) {
  if (!v) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, *v);
  return std::string(buf, res.ptr);
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("SPECTRAL_GATE_THREADS")) {
    int value = 0;
    const std::string_view text(env);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec == std::errc() && res.ptr == text.data() + text.size() && value > 0) return value;
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

Report run_sweep(const CorpusSpec& spec, const SweepOptions& options) { return run(Mode::Sweep, spec, options); }

Report search_outside_g(const CorpusSpec& spec, const SweepOptions& options) { return run(Mode::Search, spec, options); }

std::int64_t Report::never_fired() const {
  std::map<std::string, std::int64_t> fired;
  for (const auto& a : aggregates) fired[a.id] += a.fired;
  return std::count_if(fired.begin(), fired.end(), [](const auto& p) { return p.second == 0; });
}

ordered_json to_json(const Report& report) {
  std::map<std::string, std::int64_t> fired_by_id;
  for (const auto& a : report.aggregates) fired_by_id[a.id] += a.fired;

  ordered_json aggregates = ordered_json::array();
  for (const auto& a : report.aggregates) {
    aggregates.push_back({{"condition", a.id},
                          {"k", a.k},
                          {"evaluated", a.evaluated},
                          {"applicable", a.applicable},
                          {"degree_ok", a.degree_ok},
                          {"fired", a.fired},
                          {"consistent", a.consistent},
                          {"boundary", a.boundary},
                          {"boundary_explained", a.boundary_explained},
                          {"unexplained_boundary", a.unexplained_boundary},
                          {"undecided", a.undecided},
                          {"min_positive_margin", optional_number(a.min_positive_margin)},
                          {"never_fired", fired_by_id[a.id] == 0}});
  }
  ordered_json structural = ordered_json::array();
  for (const auto& s : report.structural)
    structural.push_back({{"check", s.id}, {"k", s.k}, {"evaluated", s.evaluated}, {"fired", s.fired}, {"consistent", s.consistent}});

  auto entries = [](const std::vector<VerdictEntry>& list) {
    ordered_json out = ordered_json::array();
    for (const auto& e : list) out.push_back(entry_json(e));
    return out;
  };

  ordered_json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["mode"] = report.mode;
  j["spec"] = to_json(report.spec);
  j["conditions"] = report.conditions;
  j["summary"] = {{"graphs_seen", report.graphs_seen},
                  {"graphs_evaluated", report.graphs_evaluated},
                  {"filtered", report.filtered},
                  {"undecided_graphs", report.undecided_graphs},
                  {"counterexamples", report.counterexamples.size()},
                  {"unexplained_boundaries", report.unexplained_boundaries.size()},
                  {"findings", report.findings.size()},
                  {"never_fired", report.never_fired()},
                  {"success", report.success()}};
  j["aggregates"] = aggregates;
  j["structural"] = structural;
  j["counterexamples"] = entries(report.counterexamples);
  j["unexplained_boundaries"] = entries(report.unexplained_boundaries);
  j["findings"] = entries(report.findings);
  if (report.spec.records) {
    ordered_json records = ordered_json::array();
    for (const auto& r : report.records) {
      records.push_back({{"source", r.source},
                         {"index", r.index},
                         {"graph", r.encoding},
                         {"n", r.n},
                         {"m", r.m},
                         {"min_degree", r.min_degree},
                         {"max_degree", r.max_degree},
                         {"kappa", r.kappa},
                         {"tau", r.tau},
                         {"lambda3", optional_number(r.lambda3)},
                         {"q2", optional_number(r.q2)},
                         {"q3", optional_number(r.q3)},
                         {"mu_n2", optional_number(r.mu_n2)},
                         {"in_class", r.in_class}});
    }
    j["records"] = records;
  }
  if (report.timestamp) j["timestamp"] = *report.timestamp;
  return j;
}

std::string records_csv(const Report& report) {
  std::ostringstream out;
  out << "source,index,graph,n,m,min_degree,max_degree,kappa,tau,lambda3,q2,q3,mu_n2,in_class\n";
  for (const auto& r : report.records) {
    out << r.source << ',' << r.index << ',' << r.encoding << ',' << r.n << ',' << r.m << ',' << r.min_degree << ','
        << r.max_degree << ',' << r.kappa << ',' << r.tau << ',' << number_text(r.lambda3) << ',' << number_text(r.q2)
        << ',' << number_text(r.q3) << ',' << number_text(r.mu_n2) << ',' << r.in_class << '\n';
  }
  return out.str();
}

std::vector<Multigraph> materialize(const CorpusSpec& spec) {
  std::vector<Multigraph> out;
  for (const auto& s : spec.sources) {
    const auto plan = plan_source(s);
    for (std::uint64_t i = 0; i < plan.count; ++i)
      if (auto g = plan.item(i)) out.push_back(std::move(*g));
  }
  return out;
}

}  // namespace spectral_gate
