#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "spectral_gate/errors.hpp"
#include "spectral_gate/generators.hpp"
#include "spectral_gate/invariants.hpp"
#include "spectral_gate/spectra.hpp"

using namespace spectral_gate;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    INFO("index " << i << " got " << got[i] << " want " << want[i]);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

std::vector<double> repeat(std::initializer_list<std::pair<double, int>> parts) {
  std::vector<double> out;
  for (const auto& [v, m] : parts) out.insert(out.end(), static_cast<std::size_t>(m), v);
  return out;
}

SymmetricMatrix random_symmetric(int n, Rng& rng) {
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, rng.unit() * 4.0 - 2.0);
  return m;
}

VertexSubset subset(int n, std::vector<Vertex> members) { return VertexSubset(n, std::move(members)); }

}  // namespace

TEST_CASE("build_matrix small cases") {
  const auto k2 = complete_graph(2);
  auto a = build_matrix(k2, MatrixKind::Adjacency);
  CHECK(a(0, 0) == 0);
  CHECK(a(0, 1) == 1);
  CHECK(a(1, 0) == 1);
  auto q = build_matrix(k2, MatrixKind::SignlessLaplacian);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(q(i, j) == 1);
  auto l = build_matrix(k2, MatrixKind::Laplacian);
  CHECK(l(0, 1) == -1);
  CHECK(l(1, 1) == 1);

  const auto dbl = Multigraph::from_edge_list(2, {{0, 1}, {0, 1}});
  a = build_matrix(dbl, MatrixKind::Adjacency);
  CHECK(a(0, 1) == 2);
  CHECK(a(0, 0) == 0);
  CHECK(build_matrix(dbl, MatrixKind::Degree)(1, 1) == 2);
  CHECK(build_integer_matrix(dbl, MatrixKind::Laplacian) == std::vector<std::int64_t>{2, -2, -2, 2});
}

TEST_CASE("spectral_summary closed forms") {
  auto s = spectral_summary(complete_graph(4));
  check_close(s.adjacency, {3, -1, -1, -1}, 1e-12);
  check_close(s.laplacian, {4, 4, 4, 0}, 1e-12);
  check_close(s.signless, {6, 2, 2, 2}, 1e-12);

  s = spectral_summary(complete_graph(1));
  check_close(s.adjacency, {0}, 0);
  check_close(s.laplacian, {0}, 0);
  check_close(s.signless, {0}, 0);

  s = spectral_summary(cycle_graph(5));
  const double a = 2 * std::cos(2 * M_PI / 5);
  const double b = 2 * std::cos(4 * M_PI / 5);
  check_close(s.adjacency, {2, a, a, b, b}, 1e-12);
  CHECK(std::abs(s.lambda(2) - 0.6180339887) < 1e-9);

  s = spectral_summary(cycle_graph(6));
  check_close(s.signless, {4, 3, 3, 1, 1, 0}, 1e-12);
}

TEST_CASE("Petersen spectrum agrees with its characteristic polynomial") {
  const auto g = petersen_graph();
  const auto cp = oracle::characteristic_polynomial(oracle::adjacency(g), 10);
  CHECK(cp == oracle::poly_from_roots({{3, 1}, {1, 5}, {-2, 4}}));
  check_close(spectral_summary(g).adjacency, repeat({{3, 1}, {1, 5}, {-2, 4}}), 1e-9);
}

TEST_CASE("Pappus spectrum agrees with its characteristic polynomial") {
  const auto g = pappus_graph();
  REQUIRE(g.order() == 18);
  for (int v = 0; v < 18; ++v) CHECK(g.degree(v) == 3);
  // (x^2 - 9)(x^2 - 3)^6 x^4
  using oracle::Poly;
  const auto want = oracle::poly_mul(oracle::poly_mul(Poly{-9, 0, 1}, oracle::poly_pow(Poly{-3, 0, 1}, 6)), Poly{0, 0, 0, 0, 1});
  CHECK(oracle::characteristic_polynomial(oracle::adjacency(g), 18) == want);
  const double r3 = std::sqrt(3.0);
  const auto s = spectral_summary(g);
  check_close(s.adjacency, repeat({{3, 1}, {r3, 6}, {0, 4}, {-r3, 6}, {-3, 1}}), 1e-9);
  // regular: q = d + lambda
  check_close(s.signless, repeat({{6, 1}, {3 + r3, 6}, {3, 4}, {3 - r3, 6}, {0, 1}}), 1e-9);
}

TEST_CASE("closed-form families to 1e-9") {
  for (int n = 2; n <= 50; ++n) check_close(spectral_summary(complete_graph(n)).adjacency, oracle::complete_spectrum(n), 1e-9);
  for (int n = 3; n <= 50; ++n) check_close(spectral_summary(cycle_graph(n)).adjacency, oracle::cycle_spectrum(n), 1e-9);
  for (int n = 2; n <= 30; ++n) check_close(spectral_summary(path_graph(n)).adjacency, oracle::path_spectrum(n), 1e-9);
  for (int l = 1; l <= 30; ++l) check_close(spectral_summary(star_graph(l)).adjacency, oracle::star_spectrum(l), 1e-9);
}

TEST_CASE("eigensolver: 2x2 closed form and symmetry properties") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    SymmetricMatrix m(2);
    const double a = rng.unit() * 10 - 5, b = rng.unit() * 10 - 5, c = rng.unit() * 10 - 5;
    m.set(0, 0, a);
    m.set(1, 1, c);
    m.set(0, 1, b);
    const double mid = (a + c) / 2, rad = std::hypot((a - c) / 2, b);
    check_close(symmetric_eigenvalues(m), {mid + rad, mid - rad}, 1e-12);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const auto m = random_symmetric(n, rng);
    const auto ev = symmetric_eigenvalues(m);
    CHECK(std::is_sorted(ev.begin(), ev.end(), std::greater<>()));
    double trace = 0;
    for (int i = 0; i < n; ++i) trace += m(i, i);
    CHECK(std::abs(std::accumulate(ev.begin(), ev.end(), 0.0) - trace) < 1e-9);
    const double sq = std::inner_product(ev.begin(), ev.end(), ev.begin(), 0.0);
    CHECK(std::abs(sq - m.frobenius_norm() * m.frobenius_norm()) < 1e-8);

    auto neg = symmetric_eigenvalues(-m);
    std::reverse(neg.begin(), neg.end());
    for (auto& x : neg) x = -x;
    check_close(neg, ev, 1e-9);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    SymmetricMatrix p(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) p.set(i, j, m(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
    check_close(symmetric_eigenvalues(p), ev, 1e-9);
  }
}

TEST_CASE("eigensolver reports non-convergence") {
  Rng rng(3);
  const auto m = random_symmetric(8, rng);
  CHECK_THROWS_AS(symmetric_eigenvalues(m, JacobiOptions{1e-300, 1}), NoConvergence);
}

TEST_CASE("quotient matrices") {
  const auto k4 = complete_graph(4);
  const VertexPartition split({subset(4, {0}), subset(4, {1, 2, 3})});
  auto qm = quotient_matrix(k4, split, QuotientKind::Adjacency);
  CHECK(qm.at(0, 0) == Rational(0));
  CHECK(qm.at(0, 1) == Rational(3));
  CHECK(qm.at(1, 0) == Rational(1));
  CHECK(qm.at(1, 1) == Rational(2));
  check_close(quotient_eigenvalues(qm), {3, -1}, 1e-12);

  const auto c6 = cycle_graph(6);
  const VertexPartition halves({subset(6, {0, 1, 2}), subset(6, {3, 4, 5})});
  qm = quotient_matrix(c6, halves, QuotientKind::Adjacency);
  CHECK(qm.at(0, 0) == Rational(4, 3));
  CHECK(qm.at(0, 1) == Rational(2, 3));
  CHECK(qm.at(1, 0) == Rational(2, 3));
  CHECK(qm.at(1, 1) == Rational(4, 3));
  check_close(quotient_eigenvalues(qm), {2, 2.0 / 3}, 1e-12);

  // single block: [d] and [2d]
  const auto pet = petersen_graph();
  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), 0);
  const VertexPartition whole({subset(10, all)});
  CHECK(quotient_matrix(pet, whole, QuotientKind::Adjacency).at(0, 0) == Rational(3));
  CHECK(quotient_matrix(pet, whole, QuotientKind::SignlessLaplacian).at(0, 0) == Rational(6));
  check_close(quotient_eigenvalues(quotient_matrix(pet, whole, QuotientKind::Adjacency)), {3}, 1e-12);
}

TEST_CASE("quotient rows sum to the block average degree") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(10));
    const auto g = gen_random_multigraph(n, 3, 2.0, rng);
    const auto p = random_partition(n, rng);
    const auto avg = induced_average_degrees(g, p);
    for (auto kind : {QuotientKind::Adjacency, QuotientKind::SignlessLaplacian}) {
      const auto qm = quotient_matrix(g, p, kind);
      for (int i = 0; i < qm.order(); ++i) {
        Rational row = 0;
        for (int j = 0; j < qm.order(); ++j) row += qm.at(i, j);
        CHECK(row == (kind == QuotientKind::Adjacency ? avg[static_cast<std::size_t>(i)] : 2 * avg[static_cast<std::size_t>(i)]));
      }
    }
  }
}

TEST_CASE("check_interlacing") {
  const std::vector<double> k4{3, -1, -1, -1};
  CHECK(check_interlacing(k4, std::vector<double>{3, -1}, 1e-8).holds);
  const auto bad = check_interlacing(std::vector<double>{3, 1, 0}, std::vector<double>{5}, 1.0);
  CHECK_FALSE(bad.holds);
  CHECK(bad.first_violation == 1);
  CHECK(check_interlacing(k4, k4, 0).holds);
  CHECK_THROWS_AS(check_interlacing(std::vector<double>{1}, std::vector<double>{1, 0}, 1e-8), LengthMismatch);
}

TEST_CASE("property: interlacing on random partitions") {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const auto g = trial % 2 ? gen_gnp(n, 0.5, rng) : gen_random_multigraph(n, 3, 2.0, rng);
    const auto s = spectral_summary(g);
    const auto p = random_partition(n, rng);
    CHECK(check_interlacing(s.adjacency, quotient_eigenvalues(quotient_matrix(g, p, QuotientKind::Adjacency)), 1e-7).holds);
    CHECK(check_interlacing(s.signless, quotient_eigenvalues(quotient_matrix(g, p, QuotientKind::SignlessLaplacian)), 1e-7).holds);
  }
}

TEST_CASE("weyl_check") {
  SymmetricMatrix zero(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(weyl_check(zero, zero, i, j));

  // delta + lambda_3 <= q_3 from D + A = Q
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(9));
    const auto g = gen_random_multigraph(n, 2, 2.0, rng);
    const auto d = build_matrix(g, MatrixKind::Degree);
    const auto a = build_matrix(g, MatrixKind::Adjacency);
    const auto l = build_matrix(g, MatrixKind::Laplacian);
    CHECK(weyl_check(d, a, n, 3));
    CHECK(weyl_check(l, a, n - 2, 3));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(weyl_check(d, a, i, j));
  }

  const auto k4 = complete_graph(4);
  CHECK(weyl_check(build_matrix(k4, MatrixKind::Laplacian), build_matrix(k4, MatrixKind::Adjacency), 2, 3));
  CHECK_THROWS_AS(weyl_check(SymmetricMatrix(3), SymmetricMatrix(4), 1, 1), OrderMismatch);
}

TEST_CASE("property: Weyl on random symmetric pairs") {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const auto b = random_symmetric(n, rng);
    const auto c = random_symmetric(n, rng);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(weyl_check(b, c, i, j));
  }
}

TEST_CASE("exact integer eigenvalue multiplicity") {
  const auto pet = oracle::adjacency(petersen_graph());
  CHECK(exact_integer_eigenvalue_multiplicity(pet, 10, 3) == 1);
  CHECK(exact_integer_eigenvalue_multiplicity(pet, 10, 1) == 5);
  CHECK(exact_integer_eigenvalue_multiplicity(pet, 10, -2) == 4);
  CHECK(exact_integer_eigenvalue_multiplicity(pet, 10, 0) == 0);
  const auto pap = oracle::adjacency(pappus_graph());
  CHECK(exact_integer_eigenvalue_multiplicity(pap, 18, 0) == 4);
  CHECK(exact_integer_eigenvalue_multiplicity(pap, 18, 2) == 0);
  CHECK(exact_integer_eigenvalue_multiplicity(pap, 18, -3) == 1);
}
