#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spectral_gate/graph.hpp"

namespace spectral_gate {

// Dense real symmetric matrix. Writes go through set(), which stores both
// (i,j) and (j,i), so the storage is exactly symmetric at all times.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int order)
      : order_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {}

  int order() const noexcept { return order_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double value) {
    data_[index(i, j)] = value;
    data_[index(j, i)] = value;
  }
  double frobenius_norm() const;

  friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
  friend SymmetricMatrix operator-(const SymmetricMatrix& a);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
  }

  int order_ = 0;
  std::vector<double> data_;
};

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian, Degree };

SymmetricMatrix build_matrix(const Multigraph& g, MatrixKind kind);

// Integer entries of the same matrices, for exact arithmetic.
std::vector<std::int64_t> build_integer_matrix(const Multigraph& g, MatrixKind kind);

struct JacobiOptions {
  double relative_tolerance = 1e-12;
  int max_sweeps = 60;
};

// Eigenvalues in non-increasing order, by cyclic Jacobi rotations.
// Throws NoConvergence if the off-diagonal norm does not fall below
// relative_tolerance * (1 + ||M||_F) within max_sweeps sweeps.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix m, const JacobiOptions& options = {});

// Spectra of A, L and Q, each sorted non-increasing. Accessors are 1-based to
// match the usual lambda_1 >= ... >= lambda_n indexing.
struct SpectralSummary {
  int n = 0;
  std::int64_t m = 0;
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  std::vector<double> adjacency;
  std::vector<double> laplacian;
  std::vector<double> signless;

  double lambda(int i) const { return adjacency.at(static_cast<std::size_t>(i - 1)); }
  double mu(int i) const { return laplacian.at(static_cast<std::size_t>(i - 1)); }
  double q(int i) const { return signless.at(static_cast<std::size_t>(i - 1)); }
};

SpectralSummary spectral_summary(const Multigraph& g);

enum class QuotientKind { Adjacency, SignlessLaplacian };

// t x t quotient matrix of A or Q with respect to a vertex partition. Entries
// are exact: e(V_i,V_j)/|V_i| off the diagonal, and the diagonal makes row i
// sum to dbar_i (adjacency) or 2*dbar_i (signless Laplacian).
class QuotientMatrix {
 public:
  QuotientMatrix(QuotientKind kind, std::vector<std::int64_t> block_sizes, std::vector<Rational> entries);

  QuotientKind kind() const noexcept { return kind_; }
  int order() const noexcept { return static_cast<int>(block_sizes_.size()); }
  std::span<const std::int64_t> block_sizes() const noexcept { return block_sizes_; }
  const Rational& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * block_sizes_.size() + static_cast<std::size_t>(j)];
  }
  Rational trace() const;

 private:
  QuotientKind kind_;
  std::vector<std::int64_t> block_sizes_;
  std::vector<Rational> entries_;
};

QuotientMatrix quotient_matrix(const Multigraph& g, const VertexPartition& partition, QuotientKind kind);

// Real spectrum of a quotient matrix via the similarity diag(sqrt|V_i|),
// which makes it exactly symmetric before eigensolving.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& qm);

struct InterlacingResult {
  bool holds = true;
  int first_violation = 0;  // 1-based index i of the first failing pair, 0 if none
};

// theta_i + tol >= eta_i >= theta_{n-t+i} - tol for 1 <= i <= t. Throws LengthMismatch if t > n.
InterlacingResult check_interlacing(std::span<const double> outer, std::span<const double> inner, double tol);

// Weyl's inequalities for lambda_i(B) + lambda_j(C) (1-based, non-increasing):
// (i)  <= lambda_{i+j-n}(B+C) when i+j >= n+1,
// (ii) >= lambda_{i+j-1}(B+C) when i+j <= n+1.
// Returns true iff every applicable inequality holds within tol.
bool weyl_check(const SymmetricMatrix& b, const SymmetricMatrix& c, int i, int j, double tol = 1e-8);

// Exact multiplicity of the integer `value` as an eigenvalue of the integer
// symmetric matrix (order x order, row-major): order - rank(M - value*I),
// rank computed by fraction-free elimination over big integers.
int exact_integer_eigenvalue_multiplicity(std::span<const std::int64_t> matrix, int order, std::int64_t value);

}  // namespace spectral_gate
