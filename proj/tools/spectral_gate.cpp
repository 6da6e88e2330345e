// Command-line front end: analyze, certify, sweep, search-outside-g, gen, selftest.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectral_gate/corpus.hpp"
#include "spectral_gate/errors.hpp"
#include "spectral_gate/generators.hpp"
#include "spectral_gate/graph6.hpp"
#include "spectral_gate/invariants.hpp"
#include "spectral_gate/theorems.hpp"

namespace sg = spectral_gate;
using nlohmann::ordered_json;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

ordered_json subset_json(const sg::VertexSubset& s) { return ordered_json(std::vector<int>(s.members().begin(), s.members().end())); }

ordered_json analyze_json(const sg::Multigraph& g, std::size_t index) {
  ordered_json j;
  j["index"] = index;
  j["graph"] = sg::encode_graph(g);
  const auto s = sg::spectral_summary(g);
  j["n"] = s.n;
  j["m"] = s.m;
  j["min_degree"] = s.min_degree;
  j["max_degree"] = s.max_degree;
  j["multiplicity"] = g.max_multiplicity();
  j["adjacency"] = s.adjacency;
  j["laplacian"] = s.laplacian;
  j["signless_laplacian"] = s.signless;
  if (g.order() < 2) return j;
  const bool connected = sg::is_connected(g);
  j["connected"] = connected;
  const auto cut = sg::edge_connectivity(g);
  j["kappa"] = cut.value;
  j["cut_side"] = subset_json(cut.side);
  if (!connected) return j;
  const auto packing = sg::spanning_tree_packing(g);
  j["tau"] = packing.tau;
  if (packing.dual) {
    ordered_json parts = ordered_json::array();
    for (const auto& b : packing.dual->parts.blocks()) parts.push_back(subset_json(b));
    j["tau_dual"] = {{"parts", parts}, {"crossing", packing.dual->crossing}, {"bound", packing.dual->bound}};
  }
  if (g.order() >= 3) {
    const auto cls = sg::g_class_membership(g, cut.value);
    switch (cls.status) {
      case sg::Membership::InClass: j["in_class"] = "yes"; break;
      case sg::Membership::NotInClass: j["in_class"] = "no"; break;
      case sg::Membership::Undecided: j["in_class"] = "undecided"; break;
    }
    if (cls.witness) j["class_witness"] = {subset_json(cls.witness->first), subset_json(cls.witness->second)};
  }
  return j;
}

ordered_json verdict_json(const sg::ConditionVerdict& v, const std::string& graph) {
  ordered_json j;
  j["graph"] = graph;
  j["condition"] = v.condition_id;
  j["k"] = v.k;
  j["min_degree"] = v.min_degree;
  j["max_degree"] = v.max_degree;
  j["l"] = v.l;
  j["spectral_value"] = v.spectral_value ? ordered_json(*v.spectral_value) : ordered_json(nullptr);
  if (v.threshold) {
    const auto& t = *v.threshold;
    j["threshold"] = t.denominator() == 1 ? std::to_string(t.numerator())
                                          : std::to_string(t.numerator()) + "/" + std::to_string(t.denominator());
    j["threshold_value"] = sg::to_double(*v.threshold);
  } else {
    j["threshold"] = nullptr;
  }
  j["margin"] = v.margin ? ordered_json(*v.margin) : ordered_json(nullptr);
  j["applicable"] = v.applicable;
  j["degree_ok"] = v.degree_ok;
  j["class_ok"] = v.class_ok;
  j["hypothesis_holds"] = v.hypothesis_holds;
  j["boundary"] = v.boundary;
  j["boundary_explained"] = v.boundary_explained;
  j["conclusion_holds"] = v.conclusion_holds;
  j["consistent"] = v.consistent;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw sg::Error("cannot write " + path);
  out << text;
}

struct CorpusArgs {
  std::string spec_path;
  std::string out = "-";
  std::string csv;
  bool timestamp = false;
  int threads = 0;
};

void add_corpus_options(CLI::App* cmd, CorpusArgs& a) {
  cmd->add_option("--spec", a.spec_path, "corpus config (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", a.out, "report path, '-' for stdout");
  cmd->add_option("--csv", a.csv, "also write per-graph records as CSV");
  cmd->add_flag("--timestamp", a.timestamp, "add a generation timestamp to the report");
  cmd->add_option("--threads", a.threads, "worker count (default: SPECTRAL_GATE_THREADS or all cores)");
}

int emit(sg::Report report, const CorpusArgs& a) {
  if (a.timestamp) report.timestamp = utc_now();
  write_text(a.out, sg::to_json(report).dump(2) + "\n");
  if (!a.csv.empty()) write_text(a.csv, sg::records_csv(report));
  std::cerr << report.mode << ": " << report.graphs_evaluated << " graphs evaluated, " << report.counterexamples.size()
            << " counterexamples, " << report.unexplained_boundaries.size() << " unexplained boundary cases, "
            << report.findings.size() << " findings\n";
  return report.mode == "sweep" && !report.success() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral sufficient conditions for edge connectivity and spanning tree packing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sg::kToolVersion));

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "spectra, kappa', tau and class membership per graph");
  analyze->add_option("file", analyze_file, "graph6/sparse6 file")->required()->check(CLI::ExistingFile);

  std::string certify_file;
  std::string certify_condition;
  int certify_k = 2;
  auto* certify = app.add_subcommand("certify", "evaluate one catalog condition on every graph of a file");
  certify->add_option("--k", certify_k, "k >= 2")->required();
  certify->add_option("--condition", certify_condition, "catalog id, e.g. THM-3.1")->required();
  certify->add_option("file", certify_file, "graph6/sparse6 file")->required()->check(CLI::ExistingFile);

  CorpusArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "consistency sweep over a corpus");
  add_corpus_options(sweep, sweep_args);

  CorpusArgs search_args;
  auto* search = app.add_subcommand("search-outside-g", "probe class-requiring conditions on graphs outside the class");
  add_corpus_options(search, search_args);

  std::string family;
  int gen_n = 0;
  int gen_d = 3;
  double gen_p = 0.5;
  int gen_max_mult = 2;
  double gen_edge_factor = 2.0;
  std::int64_t gen_count = 1;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "print graphs of a family as graph6/sparse6 lines");
  std::vector<std::string> families = sg::family_names();
  families.insert(families.end(), {"random-regular", "gnp", "random-multigraph"});
  gen->add_option("--family", family, "family name")->required()->check(CLI::IsMember(families));
  gen->add_option("--n", gen_n, "order");
  gen->add_option("--d", gen_d, "degree (random-regular)");
  gen->add_option("--p", gen_p, "edge probability (gnp)");
  gen->add_option("--max-mult", gen_max_mult, "multiplicity cap (random-multigraph)");
  gen->add_option("--edge-factor", gen_edge_factor, "edges per vertex (random-multigraph)");
  gen->add_option("--count", gen_count, "number of graphs (random families)");
  gen->add_option("--seed", gen_seed, "seed (random families)");

  sg::SelftestOptions self_opts;
  auto* selftest = app.add_subcommand("selftest", "run the invariant suite on a small mixed corpus");
  selftest->add_option("--enumerate-max", self_opts.enumerate_max, "exhaustive up to this order")->check(CLI::Range(2, 7));
  selftest->add_option("--random", self_opts.random_graphs, "random graphs");
  selftest->add_option("--seed", self_opts.seed, "seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      const auto graphs = sg::read_graph_file(analyze_file);
      ordered_json out = ordered_json::array();
      for (std::size_t i = 0; i < graphs.size(); ++i) out.push_back(analyze_json(graphs[i], i));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*certify) {
      const auto& spec = sg::find_condition(certify_condition);
      const auto graphs = sg::read_graph_file(certify_file);
      ordered_json out = ordered_json::array();
      bool all_consistent = true;
      for (const auto& g : graphs) {
        if (g.order() < 2 || !sg::is_connected(g)) throw sg::Disconnected();
        const auto v = sg::evaluate(g, spec, certify_k);
        all_consistent = all_consistent && v.consistent;
        out.push_back(verdict_json(v, sg::encode_graph(g)));
      }
      std::cout << out.dump(2) << "\n";
      return all_consistent ? 0 : 1;
    }
    if (*sweep) {
      const auto spec = sg::load_corpus_spec(sweep_args.spec_path);
      return emit(sg::run_sweep(spec, {sweep_args.threads}), sweep_args);
    }
    if (*search) {
      const auto spec = sg::load_corpus_spec(search_args.spec_path);
      return emit(sg::search_outside_g(spec, {search_args.threads}), search_args);
    }
    if (*gen) {
      if (family == "random-regular" || family == "gnp" || family == "random-multigraph") {
        for (std::int64_t i = 0; i < gen_count; ++i) {
          sg::Rng rng(sg::Rng::derive(gen_seed, static_cast<std::uint64_t>(i)));
          sg::Multigraph g;
          if (family == "random-regular") {
            g = sg::gen_random_regular(gen_n, gen_d, rng);
          } else if (family == "gnp") {
            g = sg::gen_gnp(gen_n, gen_p, rng);
          } else {
            g = sg::gen_random_multigraph(gen_n, gen_max_mult, gen_edge_factor, rng);
          }
          std::cout << sg::encode_graph(g) << "\n";
        }
      } else {
        std::cout << sg::encode_graph(sg::named_family(family, gen_n)) << "\n";
      }
      return 0;
    }
    if (*selftest) {
      const auto report = sg::run_selftest(self_opts);
      for (const auto& [name, t] : report.tallies)
        std::cout << (t.failed == 0 ? "PASS " : "FAIL ") << name << " checked=" << t.checked << " failed=" << t.failed << "\n";
      for (const auto& f : report.failures) std::cout << "  " << f << "\n";
      return report.failed() == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
