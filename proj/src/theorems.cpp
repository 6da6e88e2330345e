#include "spectral_gate/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spectral_gate/errors.hpp"

namespace spectral_gate {

namespace {

struct KTerm {
  int coef;
  int offset;
};

// Numerators of the fractional terms.
constexpr KTerm kFourKMinusFour{4, -4};   // 4(k-1)
constexpr KTerm kTwoKMinusTwo{2, -2};     // 2(k-1)
constexpr KTerm kSixKMinusTwo{6, -2};     // 2(3k-1)
constexpr KTerm kThreeKMinusOne{3, -1};   // 3k-1
constexpr KTerm kTwoKMinusOne{2, -1};     // 2k-1

using SQ = SpectralQuantity;
using DR = DegreeRequirement;
using CK = ConclusionKind;

std::string term(int coef, const char* symbol, bool first) {
  std::ostringstream out;
  if (coef == 0) return {};
  if (coef < 0) {
    out << (first ? "-" : " - ");
  } else if (!first) {
    out << " + ";
  }
  const int a = std::abs(coef);
  if (a != 1) out << a;
  out << symbol;
  return out.str();
}

std::string describe(const ConditionSpec& s) {
  std::ostringstream out;
  out << to_string(s.quantity) << (s.comparison == Comparison::Less ? " < " : " > ");
  const auto& f = s.formula;
  const char* dsym = s.regular ? "d" : "delta";
  std::string body = term(f.delta_coef, dsym, true);
  body += term(f.max_degree_coef, "Delta", body.empty());
  out << body;
  out << (f.fraction_sign < 0 ? " - " : " + ");
  out << "(" << f.k_coef << "k" << (f.k_offset < 0 ? " - " : " + ") << std::abs(f.k_offset) << ")/";
  out << (f.denominator == Denominator::L ? "l" : (s.regular ? "(d+1)" : "(delta+1)"));
  out << " => " << to_string(s.conclusion) << " >= k";
  return out.str();
}

ConditionSpec make(std::string id, SQ q, Comparison c, int dc, int mc, KTerm kt, Denominator den, DR degree,
                   bool regular, bool requires_class, GraphKind kind, CK conclusion) {
  ConditionSpec s;
  s.id = std::move(id);
  s.quantity = q;
  s.comparison = c;
  s.formula = {dc, mc, c == Comparison::Less ? -1 : +1, kt.coef, kt.offset, den};
  s.degree = degree;
  s.regular = regular;
  s.requires_class = requires_class;
  s.kind = kind;
  s.conclusion = conclusion;
  s.statement = describe(s);
  return s;
}

std::vector<ConditionSpec> build_catalog() {
  constexpr auto lt = Comparison::Less;
  constexpr auto gt = Comparison::Greater;
  constexpr auto d1 = Denominator::DeltaPlusOne;
  constexpr auto dl = Denominator::L;
  constexpr auto simple = GraphKind::Simple;
  constexpr auto multi = GraphKind::Multigraph;
  constexpr auto kappa = CK::EdgeConnectivity;
  constexpr auto tau = CK::TreePacking;
  return {
      // third largest eigenvalues, edge connectivity
      make("THM-3.1", SQ::Lambda3, lt, 2, -1, kFourKMinusFour, d1, DR::AtLeast2kMinus1, false, true, simple, kappa),
      make("COR-3.2", SQ::Lambda3, lt, 1, 0, kFourKMinusFour, d1, DR::AtLeast2kMinus1, true, true, simple, kappa),
      make("THM-3.3", SQ::Q3, lt, 4, -2, kFourKMinusFour, d1, DR::AtLeast2kMinus1, false, true, simple, kappa),
      make("COR-3.4", SQ::Q3, lt, 2, 0, kFourKMinusFour, d1, DR::AtLeast2kMinus1, true, true, simple, kappa),
      make("THM-3.5", SQ::Q2, lt, 2, 0, kTwoKMinusTwo, d1, DR::AtLeastK, false, false, simple, kappa),
      make("COR-3.6", SQ::Q2, lt, 2, 0, kTwoKMinusTwo, d1, DR::AtLeastK, true, false, simple, kappa),
      // spanning tree packing
      make("THM-4.2", SQ::Lambda3, lt, 2, -1, kSixKMinusTwo, d1, DR::AtLeast2k, false, true, simple, tau),
      make("COR-4.3", SQ::Lambda3, lt, 1, 0, kSixKMinusTwo, d1, DR::AtLeast2k, true, true, simple, tau),
      make("THM-4.5", SQ::Q3, lt, 4, -2, kSixKMinusTwo, d1, DR::AtLeast2k, false, true, simple, tau),
      make("COR-4.6", SQ::Q3, lt, 2, 0, kSixKMinusTwo, d1, DR::AtLeast2k, true, true, simple, tau),
      make("THM-4.11", SQ::Q2, lt, 2, 0, kThreeKMinusOne, d1, DR::AtLeast2k, false, false, simple, tau),
      make("COR-4.12", SQ::Q2, lt, 2, 0, kThreeKMinusOne, d1, DR::AtLeast2k, true, false, simple, tau),
      // mixed conditions
      make("THM-5.1(i)", SQ::MuNMinus2, gt, -2, 2, kFourKMinusFour, d1, DR::AtLeast2kMinus1, false, true, simple, kappa),
      make("THM-5.1(ii)", SQ::Q3, lt, 3, -1, kFourKMinusFour, d1, DR::AtLeast2kMinus1, false, true, simple, kappa),
      make("THM-5.2(i)", SQ::MuNMinus2, gt, -2, 2, kSixKMinusTwo, d1, DR::AtLeast2k, false, true, simple, tau),
      make("THM-5.2(ii)", SQ::Q3, lt, 3, -1, kSixKMinusTwo, d1, DR::AtLeast2k, false, true, simple, tau),
      make("THM-5.3(i)", SQ::MuNMinus2, gt, -3, 3, kFourKMinusFour, d1, DR::AtLeast2kMinus1, false, true, simple, kappa),
      make("THM-5.3(ii)", SQ::Lambda3, lt, 3, -2, kFourKMinusFour, d1, DR::AtLeast2kMinus1, false, true, simple, kappa),
      make("THM-5.4(i)", SQ::MuNMinus2, gt, -3, 3, kSixKMinusTwo, d1, DR::AtLeast2k, false, true, simple, tau),
      make("THM-5.4(ii)", SQ::Lambda3, lt, 3, -2, kSixKMinusTwo, d1, DR::AtLeast2k, false, true, simple, tau),
      // multigraphs
      make("THM-6.1", SQ::Lambda3, lt, 2, -1, kFourKMinusFour, dl, DR::AtLeast2kMinus1, false, true, multi, kappa),
      make("THM-6.3", SQ::Lambda3, lt, 2, -1, kSixKMinusTwo, dl, DR::AtLeast2k, false, true, multi, tau),
      make("COR-6.4(i)", SQ::MuNMinus2, gt, -2, 2, kFourKMinusFour, dl, DR::AtLeast2kMinus1, false, true, multi, kappa),
      make("COR-6.4(ii)", SQ::Q3, lt, 3, -1, kFourKMinusFour, dl, DR::AtLeast2kMinus1, false, true, multi, kappa),
      make("COR-6.5(i)", SQ::MuNMinus2, gt, -2, 2, kSixKMinusTwo, dl, DR::AtLeast2k, false, true, multi, tau),
      make("COR-6.5(ii)", SQ::Q3, lt, 3, -1, kSixKMinusTwo, dl, DR::AtLeast2k, false, true, multi, tau),
      make("THM-6.6", SQ::Q3, lt, 4, -2, kFourKMinusFour, dl, DR::AtLeast2kMinus1, false, true, multi, kappa),
      make("THM-6.8", SQ::Q3, lt, 4, -2, kSixKMinusTwo, dl, DR::AtLeast2k, false, true, multi, tau),
      make("COR-6.9(i)", SQ::MuNMinus2, gt, -3, 3, kFourKMinusFour, dl, DR::AtLeast2kMinus1, false, true, multi, kappa),
      make("COR-6.9(ii)", SQ::Lambda3, lt, 3, -2, kFourKMinusFour, dl, DR::AtLeast2kMinus1, false, true, multi, kappa),
      make("COR-6.10(i)", SQ::MuNMinus2, gt, -3, 3, kSixKMinusTwo, dl, DR::AtLeast2k, false, true, multi, tau),
      make("COR-6.10(ii)", SQ::Lambda3, lt, 3, -2, kSixKMinusTwo, dl, DR::AtLeast2k, false, true, multi, tau),
  };
}

Rational fraction(KTerm t, int k, std::int64_t denominator) {
  return Rational(static_cast<std::int64_t>(t.coef) * k + t.offset, denominator);
}

// Spectrum index and matrix kind behind a spectral quantity.
struct QuantitySource {
  MatrixKind kind;
  const std::vector<double>* values;
  int index;  // 1-based
};

QuantitySource source_of(const SpectralSummary& s, SQ q) {
  switch (q) {
    case SQ::Lambda2: return {MatrixKind::Adjacency, &s.adjacency, 2};
    case SQ::Lambda3: return {MatrixKind::Adjacency, &s.adjacency, 3};
    case SQ::Q2: return {MatrixKind::SignlessLaplacian, &s.signless, 2};
    case SQ::Q3: return {MatrixKind::SignlessLaplacian, &s.signless, 3};
    case SQ::MuNMinus2: return {MatrixKind::Laplacian, &s.laplacian, s.n - 2};
  }
  return {MatrixKind::Adjacency, &s.adjacency, 3};
}

bool quantity_defined(const SpectralSummary& s, SQ q) {
  switch (q) {
    case SQ::Lambda2:
    case SQ::Q2: return s.n >= 2;
    case SQ::Lambda3:
    case SQ::Q3:
    case SQ::MuNMinus2: return s.n >= 3;
  }
  return false;
}

// True when `value` provably equals the integer `target`: the eigenvalues
// computed within 1e-6 of target are exactly as many as the exact
// multiplicity of target.
bool proven_integer_tie(const GraphFacts& facts, SQ q, std::int64_t target) {
  const auto src = source_of(facts.spectrum, q);
  int cluster = 0;
  for (double v : *src.values) {
    if (std::abs(v - static_cast<double>(target)) <= 1e-6) ++cluster;
  }
  if (cluster == 0) return false;
  const auto ints = build_integer_matrix(facts.graph, src.kind);
  return exact_integer_eigenvalue_multiplicity(ints, facts.graph.order(), target) == cluster;
}

bool parts_cut_at_least(const CutProfile& p, int k) {
  return std::all_of(p.r.begin(), p.r.end(), [&](std::int64_t r) { return r >= k; });
}

// No two distinct parts with no edge between them and both cuts <= 2k-1.
bool no_small_unlinked_pair(const Multigraph& g, const VertexPartition& parts, int k) {
  const auto s = parts.size();
  std::vector<std::int64_t> r(s, 0);
  std::vector<std::int64_t> between(s * s, 0);
  const auto labels = parts.labels();
  for (const auto& e : g.edges()) {
    const auto a = static_cast<std::size_t>(labels[static_cast<std::size_t>(e.u)]);
    const auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(e.v)]);
    if (a == b) continue;
    r[a] += e.count;
    r[b] += e.count;
    between[a * s + b] += e.count;
    between[b * s + a] += e.count;
  }
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = p + 1; q < s; ++q)
      if (between[p * s + q] == 0 && r[p] <= 2 * k - 1 && r[q] <= 2 * k - 1) return false;
  return true;
}

}  // namespace

const std::vector<ConditionSpec>& catalog() {
  static const std::vector<ConditionSpec> entries = build_catalog();
  return entries;
}

const ConditionSpec& find_condition(const std::string& id) {
  for (const auto& s : catalog())
    if (s.id == id) return s;
  throw DomainError("unknown condition id " + id);
}

std::string to_string(SpectralQuantity q) {
  switch (q) {
    case SQ::Lambda2: return "lambda2";
    case SQ::Lambda3: return "lambda3";
    case SQ::Q2: return "q2";
    case SQ::Q3: return "q3";
    case SQ::MuNMinus2: return "mu_{n-2}";
  }
  return "?";
}

std::string to_string(ConclusionKind c) { return c == CK::EdgeConnectivity ? "kappa'" : "tau"; }

std::int64_t multigraph_l(std::int64_t min_degree, int multiplicity) {
  const std::int64_t m = std::max(multiplicity, 1);
  const std::int64_t ceil = (min_degree + 1 + m - 1) / m;
  return std::max<std::int64_t>(ceil, 2);
}

bool degree_requirement_met(DegreeRequirement req, std::int64_t min_degree, int k) {
  switch (req) {
    case DR::AtLeastK: return min_degree >= k;
    case DR::AtLeast2kMinus1: return min_degree >= 2 * k - 1;
    case DR::AtLeast2k: return min_degree >= 2 * k;
  }
  return false;
}

Rational threshold(const ConditionSpec& spec, std::int64_t min_degree, std::int64_t max_degree, int k,
                   std::int64_t l) {
  if (min_degree < 1) throw DomainError("threshold needs delta >= 1");
  if (k < 2) throw DomainError("threshold needs k >= 2");
  if (spec.formula.denominator == Denominator::L && l < 2) throw DomainError("threshold needs l >= 2");
  if (spec.regular && min_degree != max_degree) throw DomainError(spec.id + " applies to regular graphs only");
  if (!degree_requirement_met(spec.degree, min_degree, k)) throw DomainError(spec.id + " degree requirement not met");
  const auto& f = spec.formula;
  const std::int64_t den = f.denominator == Denominator::L ? l : min_degree + 1;
  Rational t(f.delta_coef * min_degree + f.max_degree_coef * max_degree);
  const Rational frac = fraction({f.k_coef, f.k_offset}, k, den);
  if (f.fraction_sign < 0) {
    t -= frac;
  } else {
    t += frac;
  }
  return t;
}

GraphFacts analyze_graph(const Multigraph& g) {
  GraphFacts f;
  f.graph = g;
  f.spectrum = spectral_summary(g);
  f.multiplicity = g.max_multiplicity();
  f.cut = edge_connectivity(g);
  f.packing = spanning_tree_packing(g);
  if (g.order() >= 3) {
    f.membership = g_class_membership(g, f.cut.value);
  } else {
    f.membership.status = Membership::NotInClass;
    f.membership.kappa = f.cut.value;
  }
  return f;
}

double spectral_value(const SpectralSummary& s, SpectralQuantity q) {
  const auto src = source_of(s, q);
  return src.values->at(static_cast<std::size_t>(src.index - 1));
}

ConditionVerdict evaluate(const GraphFacts& facts, const ConditionSpec& spec, int k, bool ignore_class) {
  ConditionVerdict v;
  v.condition_id = spec.id;
  v.k = k;
  v.min_degree = facts.spectrum.min_degree;
  v.max_degree = facts.spectrum.max_degree;
  v.l = multigraph_l(v.min_degree, facts.multiplicity);

  const std::int64_t achieved =
      spec.conclusion == CK::EdgeConnectivity ? facts.cut.value : static_cast<std::int64_t>(facts.packing.tau);
  v.conclusion_holds = achieved >= k;

  v.applicable = (spec.kind == GraphKind::Multigraph || facts.graph.simple()) &&
                 quantity_defined(facts.spectrum, spec.quantity) && k >= 2;
  if (!v.applicable) return v;
  v.spectral_value = spectral_value(facts.spectrum, spec.quantity);

  v.degree_ok = degree_requirement_met(spec.degree, v.min_degree, k) && v.min_degree >= 1 &&
                (!spec.regular || v.min_degree == v.max_degree);
  if (!v.degree_ok) return v;

  v.threshold = threshold(spec, v.min_degree, v.max_degree, k, v.l);
  const double t = to_double(*v.threshold);
  v.margin = spec.comparison == Comparison::Less ? t - *v.spectral_value : *v.spectral_value - t;

  if (!spec.requires_class || ignore_class) {
    v.class_ok = true;
  } else if (facts.membership.status == Membership::Undecided) {
    throw UndecidedClass();
  } else {
    v.class_ok = facts.membership.status == Membership::InClass;
  }

  if (std::abs(*v.margin) <= kStrictTolerance) {
    v.boundary = true;
    if (v.threshold->denominator() == 1)
      v.boundary_explained = proven_integer_tie(facts, spec.quantity, v.threshold->numerator());
  }
  v.hypothesis_holds = v.class_ok && *v.margin > kStrictTolerance;
  v.consistent = !v.hypothesis_holds || v.conclusion_holds;
  return v;
}

ConditionVerdict evaluate(const Multigraph& g, const ConditionSpec& spec, int k) {
  return evaluate(analyze_graph(g), spec, k);
}

std::vector<std::string> structural_check_ids() {
  return {"THM-4.1", "COR-4.4", "THM-4.7", "COR-4.8", "THM-4.9", "COR-4.10", "THM-6.2", "THM-6.7"};
}

std::vector<StructuralVerdict> structural_checks(const GraphFacts& facts, int k) {
  std::vector<StructuralVerdict> out;
  const auto& s = facts.spectrum;
  const auto& g = facts.graph;
  if (!facts.packing.dual || k < 2 || s.n < 3) return out;

  const auto& dual = *facts.packing.dual;
  const auto& parts = dual.parts;
  // The statements concern an X with |X| <= k(c(G-X)-1)-1.
  const bool x_premise = dual.crossing <= static_cast<std::int64_t>(k) * static_cast<std::int64_t>(parts.size() - 1) - 1;
  const auto profile = component_cut_profile(g, crossing_edges(g, parts));
  const bool cuts_ok = parts_cut_at_least(profile, k);
  const bool pairs_ok = no_small_unlinked_pair(g, parts, k);

  const std::int64_t delta = s.min_degree;
  const std::int64_t big = s.max_degree;
  const bool in_class = facts.membership.status == Membership::InClass;
  const bool degree_ok = delta >= 2 * k;
  const std::int64_t l = multigraph_l(delta, facts.multiplicity);

  auto strictly_below = [](double value, const Rational& bound) { return to_double(bound) - value > kStrictTolerance; };
  auto add = [&](std::string id, bool hypothesis, bool conclusion) {
    StructuralVerdict v;
    v.id = std::move(id);
    v.k = k;
    v.hypothesis_holds = hypothesis && x_premise;
    v.conclusion_holds = conclusion;
    v.consistent = !v.hypothesis_holds || conclusion;
    out.push_back(std::move(v));
  };

  const Rational six(6 * k - 2);
  const Rational two_k_minus_one(2 * k - 1);
  const bool simple = g.simple() && degree_ok;
  const Rational d1(delta + 1);

  add("THM-4.1", simple && in_class && strictly_below(s.lambda(3), Rational(2 * delta - big) - six / d1), cuts_ok);
  add("COR-4.4", simple && in_class && strictly_below(s.q(3), Rational(4 * delta - 2 * big) - six / d1), cuts_ok);
  const bool lambda2_hyp = simple && strictly_below(s.lambda(2), Rational(delta) - two_k_minus_one / d1);
  const bool q2_hyp = simple && strictly_below(s.q(2), Rational(2 * delta) - two_k_minus_one / d1);
  add("THM-4.7", lambda2_hyp, pairs_ok);
  add("COR-4.8", q2_hyp, pairs_ok);
  add("THM-4.9", lambda2_hyp, cuts_ok);
  add("COR-4.10", q2_hyp, cuts_ok);
  add("THM-6.2", degree_ok && in_class && strictly_below(s.lambda(3), Rational(2 * delta - big) - six / Rational(l)),
      cuts_ok);
  add("THM-6.7", degree_ok && in_class && strictly_below(s.q(3), Rational(4 * delta - 2 * big) - six / Rational(l)),
      cuts_ok);
  return out;
}

bool lemma_arith_check(ArithLemma which, std::int64_t b, std::int64_t k) {
  if (k < 1) throw DomainError("lemma check needs k >= 1");
  const Rational rhs(3 * k - 1);
  if (which == ArithLemma::Lemma211) {
    if (b < 3) throw DomainError("first auxiliary inequality needs b >= 3");
    const std::int64_t den = b * (b - 2);
    const Rational lhs = Rational(2 * (b - 1) * (b - 1), den) * k - Rational(2 * (b - 1), den);
    return lhs < rhs;
  }
  if (b < 2) throw DomainError("second auxiliary inequality needs b' >= 2");
  const Rational lhs = Rational(2 * b - 1, b - 1) * k - Rational(2, b - 1);
  return lhs < rhs;
}

}  // namespace spectral_gate
