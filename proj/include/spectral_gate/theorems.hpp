#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectral_gate/connectivity.hpp"
#include "spectral_gate/graph.hpp"
#include "spectral_gate/spectra.hpp"
#include "spectral_gate/tree_packing.hpp"

namespace spectral_gate {

enum class SpectralQuantity { Lambda2, Lambda3, Q2, Q3, MuNMinus2 };
enum class Comparison { Less, Greater };
enum class DegreeRequirement { AtLeastK, AtLeast2kMinus1, AtLeast2k };
enum class GraphKind { Simple, Multigraph };
enum class ConclusionKind { EdgeConnectivity, TreePacking };
// Denominator of the fractional term: delta + 1 (simple graphs) or
// l = max(ceil((delta+1)/multiplicity), 2) (multigraphs).
enum class Denominator { DeltaPlusOne, L };

// threshold = delta_coef*delta + max_degree_coef*Delta
//             + fraction_sign * (k_coef*k + k_offset) / denominator
struct ThresholdFormula {
  int delta_coef = 0;
  int max_degree_coef = 0;
  int fraction_sign = -1;
  int k_coef = 0;
  int k_offset = 0;
  Denominator denominator = Denominator::DeltaPlusOne;
};

struct ConditionSpec {
  std::string id;
  SpectralQuantity quantity = SpectralQuantity::Lambda3;
  Comparison comparison = Comparison::Less;
  ThresholdFormula formula;
  DegreeRequirement degree = DegreeRequirement::AtLeast2kMinus1;
  bool regular = false;  // d-regular variant; delta stands for d
  bool requires_class = false;
  GraphKind kind = GraphKind::Simple;
  ConclusionKind conclusion = ConclusionKind::EdgeConnectivity;
  std::string statement;
};

// The fixed condition catalog, one entry per sub-condition.
const std::vector<ConditionSpec>& catalog();
// Throws DomainError for an unknown id.
const ConditionSpec& find_condition(const std::string& id);

// l = max(ceil((delta+1)/multiplicity), 2).
std::int64_t multigraph_l(std::int64_t min_degree, int multiplicity);

// Exact value of the condition's threshold. Throws DomainError when
// delta < 1, k < 2, l < 2 for multigraph entries, the degree requirement
// fails, or a regular entry gets delta != Delta.
Rational threshold(const ConditionSpec& spec, std::int64_t min_degree, std::int64_t max_degree, int k,
                   std::int64_t l = 2);

bool degree_requirement_met(DegreeRequirement req, std::int64_t min_degree, int k);

// Everything a condition can ask about one graph, computed once.
struct GraphFacts {
  Multigraph graph;
  SpectralSummary spectrum;
  int multiplicity = 1;
  CutCertificate cut;
  PackingCertificate packing;
  GClassResult membership;
};

// Requires a connected graph with n >= 2. Graphs with n < 3 are outside the
// class by definition; n > 24 without a fast-path witness stays Undecided.
GraphFacts analyze_graph(const Multigraph& g);

inline constexpr double kStrictTolerance = 1e-8;

struct ConditionVerdict {
  std::string graph_id;
  std::string condition_id;
  int k = 0;
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  std::int64_t l = 0;
  std::optional<double> spectral_value;
  std::optional<Rational> threshold;
  // Signed slack in the direction of the strict inequality: positive means
  // the spectral inequality holds.
  std::optional<double> margin;
  bool applicable = false;  // graph kind and order admit the condition
  bool degree_ok = false;
  bool class_ok = false;
  bool hypothesis_holds = false;
  bool boundary = false;            // |margin| <= kStrictTolerance
  bool boundary_explained = false;  // value proven exactly equal to an integer threshold
  bool conclusion_holds = false;
  bool consistent = true;
};

// Throws UndecidedClass if the class requirement decides the outcome and
// membership could not be decided. `ignore_class` drops the class
// requirement (used when probing graphs outside the class).
ConditionVerdict evaluate(const GraphFacts& facts, const ConditionSpec& spec, int k, bool ignore_class = false);
ConditionVerdict evaluate(const Multigraph& g, const ConditionSpec& spec, int k);

double spectral_value(const SpectralSummary& s, SpectralQuantity q);

// Structural consequences about the components of G - X, checked on the
// canonical X: the crossing edges of the packing's dual partition.
struct StructuralVerdict {
  std::string id;
  int k = 0;
  bool hypothesis_holds = false;
  bool conclusion_holds = true;
  bool consistent = true;
};

std::vector<std::string> structural_check_ids();
std::vector<StructuralVerdict> structural_checks(const GraphFacts& facts, int k);

enum class ArithLemma { Lemma211, Lemma212 };

// Exact rational check of the two auxiliary inequalities:
//   2(b-1)^2/(b(b-2)) k - 2(b-1)/(b(b-2)) < 3k-1   (b >= 3, k >= 1)
//   (2b'-1)/(b'-1) k - 2/(b'-1) < 3k-1            (b' >= 2, k >= 1)
// Throws DomainError outside those ranges.
bool lemma_arith_check(ArithLemma which, std::int64_t b, std::int64_t k);

std::string to_string(SpectralQuantity q);
std::string to_string(ConclusionKind c);

}  // namespace spectral_gate
