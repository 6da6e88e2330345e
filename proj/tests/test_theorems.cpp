#include <doctest.h>

#include <set>

#include "spectral_gate/errors.hpp"
#include "spectral_gate/generators.hpp"
#include "spectral_gate/theorems.hpp"

using namespace spectral_gate;

TEST_CASE("catalog contents") {
  const auto& cat = catalog();
  CHECK(cat.size() == 32);
  std::set<std::string> ids;
  for (const auto& s : cat) {
    ids.insert(s.id);
    CHECK_FALSE(s.statement.empty());
  }
  CHECK(ids.size() == cat.size());

  const auto& t31 = find_condition("THM-3.1");
  CHECK(t31.requires_class);
  CHECK(t31.conclusion == ConclusionKind::EdgeConnectivity);
  CHECK(t31.quantity == SpectralQuantity::Lambda3);
  CHECK(t31.kind == GraphKind::Simple);

  const auto& t35 = find_condition("THM-3.5");
  CHECK_FALSE(t35.requires_class);
  CHECK(t35.quantity == SpectralQuantity::Q2);

  CHECK(find_condition("THM-4.2").conclusion == ConclusionKind::TreePacking);
  CHECK(find_condition("THM-6.1").kind == GraphKind::Multigraph);
  CHECK(find_condition("THM-5.1(i)").comparison == Comparison::Greater);
  CHECK_THROWS_AS(find_condition("THM-9.9"), DomainError);
}

TEST_CASE("threshold values") {
  CHECK(threshold(find_condition("THM-3.1"), 3, 3, 2) == Rational(2));
  CHECK(threshold(find_condition("THM-3.3"), 3, 3, 2) == Rational(5));
  CHECK(threshold(find_condition("THM-3.1"), 3, 4, 2) == Rational(1));
  CHECK(threshold(find_condition("THM-3.5"), 2, 2, 2) == Rational(10, 3));
  // 2*4 - 4 - 2*(3*2-1)/5
  CHECK(threshold(find_condition("THM-4.2"), 4, 4, 2) == Rational(2));
  // mu_{n-2} > 2*Delta - 2*delta + 4(k-1)/(delta+1)
  CHECK(threshold(find_condition("THM-5.1(i)"), 3, 4, 2) == Rational(3));
  // multigraph: 2*3 - 3 - 4/l with l = 2
  CHECK(threshold(find_condition("THM-6.1"), 3, 3, 2, 2) == Rational(1));
}

TEST_CASE("threshold domain errors") {
  const auto& t31 = find_condition("THM-3.1");
  CHECK_THROWS_AS(threshold(t31, 0, 3, 2), DomainError);
  CHECK_THROWS_AS(threshold(t31, 3, 3, 1), DomainError);
  CHECK_THROWS_AS(threshold(t31, 2, 3, 2), DomainError);  // delta < 2k-1
  CHECK_THROWS_AS(threshold(find_condition("COR-3.2"), 3, 4, 2), DomainError);
  CHECK_THROWS_AS(threshold(find_condition("THM-6.1"), 3, 3, 2, 1), DomainError);
  CHECK_THROWS_AS(threshold(find_condition("THM-4.2"), 3, 3, 2), DomainError);  // delta < 2k
}

TEST_CASE("multigraph_l") {
  CHECK(multigraph_l(3, 1) == 4);
  CHECK(multigraph_l(3, 2) == 2);
  CHECK(multigraph_l(5, 2) == 3);
  CHECK(multigraph_l(5, 3) == 2);
  CHECK(multigraph_l(1, 1) == 2);
  CHECK(multigraph_l(10, 4) == 3);
}

TEST_CASE("property: thresholds move monotonically in k and Delta") {
  for (const auto& spec : catalog()) {
    for (int k = 2; k <= 6; ++k)
      for (std::int64_t delta = 2 * k; delta <= 12; ++delta)
        for (std::int64_t big = delta; big <= (spec.regular ? delta : delta + 4); ++big) {
          const std::int64_t l = 2 + (delta % 3);
          const auto t = threshold(spec, delta, big, k, l);
          const auto t_next = threshold(spec, delta, big, k + 1 <= delta / 2 ? k + 1 : k, l);
          if (k + 1 <= delta / 2) {
            if (spec.comparison == Comparison::Less) {
              CHECK(t_next < t);
            } else {
              CHECK(t_next > t);
            }
          }
          if (!spec.regular && big < delta + 4) {
            const auto t_big = threshold(spec, delta, big + 1, k, l);
            if (spec.formula.max_degree_coef < 0) CHECK(t_big < t);
            if (spec.formula.max_degree_coef > 0) CHECK(t_big > t);
            if (spec.formula.max_degree_coef == 0) CHECK(t_big == t);
          }
        }
  }
}

TEST_CASE("evaluate: Pappus and THM-3.1") {
  const auto v = evaluate(pappus_graph(), find_condition("THM-3.1"), 2);
  CHECK(v.applicable);
  CHECK(v.degree_ok);
  CHECK(v.class_ok);
  REQUIRE(v.threshold);
  CHECK(*v.threshold == Rational(2));
  REQUIRE(v.spectral_value);
  CHECK(std::abs(*v.spectral_value - std::sqrt(3.0)) < 1e-9);
  CHECK(v.hypothesis_holds);
  CHECK(v.conclusion_holds);
  CHECK(v.consistent);
  CHECK_FALSE(v.boundary);
}

TEST_CASE("evaluate: failing degree requirement is vacuous") {
  const auto v = evaluate(cycle_graph(6), find_condition("THM-3.1"), 2);
  CHECK(v.applicable);
  CHECK_FALSE(v.degree_ok);
  CHECK_FALSE(v.hypothesis_holds);
  CHECK(v.consistent);
  CHECK_FALSE(v.threshold.has_value());
}

TEST_CASE("evaluate: C6 and THM-3.5") {
  const auto v = evaluate(cycle_graph(6), find_condition("THM-3.5"), 2);
  REQUIRE(v.threshold);
  CHECK(*v.threshold == Rational(10, 3));
  CHECK(std::abs(*v.spectral_value - 3.0) < 1e-9);
  CHECK(std::abs(*v.margin - 1.0 / 3) < 1e-9);
  CHECK(v.hypothesis_holds);
  CHECK(v.conclusion_holds);
  CHECK(v.consistent);
}

TEST_CASE("evaluate: dumbbell is outside the class") {
  const auto facts = analyze_graph(dumbbell_graph());
  CHECK(facts.membership.status == Membership::NotInClass);
  const auto v = evaluate(facts, find_condition("THM-3.1"), 2);
  REQUIRE(v.threshold);
  CHECK(*v.threshold == Rational(1));
  CHECK_FALSE(v.class_ok);
  CHECK_FALSE(v.hypothesis_holds);
  CHECK(v.consistent);
  // dropping the class requirement only changes class_ok
  const auto probe = evaluate(facts, find_condition("THM-3.1"), 2, true);
  CHECK(probe.class_ok);
  CHECK(probe.margin == v.margin);
  CHECK(probe.hypothesis_holds);
  CHECK_FALSE(probe.conclusion_holds);
}

TEST_CASE("evaluate: simple-only entries skip multigraphs, n < 3 has no third eigenvalue") {
  const auto dbl = Multigraph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}});
  CHECK_FALSE(evaluate(dbl, find_condition("THM-3.1"), 2).applicable);
  CHECK(evaluate(dbl, find_condition("THM-6.1"), 2).applicable);
  CHECK_FALSE(evaluate(complete_graph(2), find_condition("THM-3.1"), 2).applicable);
  CHECK(evaluate(complete_graph(2), find_condition("THM-3.5"), 2).applicable);
}

TEST_CASE("evaluate: undecided membership throws only when it matters") {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int b = 0; b < 2; ++b)
    for (int u = 0; u < 14; ++u)
      for (int v = u + 1; v < 14; ++v) e.emplace_back(14 * b + u, 14 * b + v);
  e.emplace_back(0, 14);
  const auto facts = analyze_graph(Multigraph::from_edge_list(28, e));
  REQUIRE(facts.membership.status == Membership::Undecided);
  CHECK_NOTHROW(evaluate(facts, find_condition("THM-3.5"), 2));
  CHECK_THROWS_AS(evaluate(facts, find_condition("THM-3.1"), 2), UndecidedClass);
  CHECK_NOTHROW(evaluate(facts, find_condition("THM-3.1"), 2, true));
}

TEST_CASE("property: every verdict consistent on connected graphs n <= 6, boundaries proven") {
  std::int64_t fired = 0, boundary = 0;
  for (int n = 2; n <= 6; ++n) {
    enumerate_connected(n, [&](const Multigraph& g) {
      const auto facts = analyze_graph(g);
      for (const auto& spec : catalog())
        for (int k : {2, 3}) {
          const auto v = evaluate(facts, spec, k);
          fired += v.hypothesis_holds;
          if (!v.consistent) FAIL_CHECK(spec.id << " k=" << k << " inconsistent");
          if (v.boundary) {
            ++boundary;
            if (!v.boundary_explained && !v.conclusion_holds) FAIL_CHECK(spec.id << " unexplained boundary");
          }
        }
      for (int k : {2, 3})
        for (const auto& sv : structural_checks(facts, k))
          if (!sv.consistent) FAIL_CHECK(sv.id << " structural inconsistent");
    });
  }
  CHECK(fired > 0);
  CHECK(boundary > 0);
}

TEST_CASE("property: multigraph verdicts consistent") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const auto facts = analyze_graph(gen_random_multigraph(n, 3, 3.0, rng));
    for (const auto& spec : catalog())
      for (int k : {2, 3}) CHECK(evaluate(facts, spec, k).consistent);
  }
}

TEST_CASE("structural checks") {
  CHECK(structural_check_ids().size() == 8);
  const auto facts = analyze_graph(pappus_graph());
  const auto out = structural_checks(facts, 2);
  CHECK(out.size() == 8);
  for (const auto& v : out) CHECK(v.consistent);
}

TEST_CASE("auxiliary inequalities") {
  CHECK(lemma_arith_check(ArithLemma::Lemma211, 3, 1));
  CHECK(lemma_arith_check(ArithLemma::Lemma212, 2, 1));
  CHECK_THROWS_AS(lemma_arith_check(ArithLemma::Lemma211, 2, 1), DomainError);
  CHECK_THROWS_AS(lemma_arith_check(ArithLemma::Lemma212, 1, 1), DomainError);
  CHECK_THROWS_AS(lemma_arith_check(ArithLemma::Lemma212, 2, 0), DomainError);
  for (int b = 3; b <= 100; ++b)
    for (int k = 1; k <= 100; ++k) CHECK(lemma_arith_check(ArithLemma::Lemma211, b, k));
  for (int b = 2; b <= 100; ++b)
    for (int k = 1; k <= 100; ++k) CHECK(lemma_arith_check(ArithLemma::Lemma212, b, k));
}
