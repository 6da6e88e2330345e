#include "spectral_gate/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "spectral_gate/errors.hpp"

namespace spectral_gate {

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order_ != b.order_) throw OrderMismatch("matrix orders differ");
  SymmetricMatrix out(a.order_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

SymmetricMatrix operator-(const SymmetricMatrix& a) {
  SymmetricMatrix out(a.order_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = -a.data_[i];
  return out;
}

std::vector<std::int64_t> build_integer_matrix(const Multigraph& g, MatrixKind kind) {
  const int n = g.order();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  const std::int64_t sign = kind == MatrixKind::Laplacian ? -1 : 1;
  for (Vertex u = 0; u < n; ++u) {
    const auto row = static_cast<std::size_t>(u) * static_cast<std::size_t>(n);
    if (kind != MatrixKind::Adjacency) out[row + static_cast<std::size_t>(u)] = g.degree(u);
    if (kind == MatrixKind::Degree) continue;
    for (Vertex v : g.neighbors(u)) out[row + static_cast<std::size_t>(v)] = sign * g.multiplicity(u, v);
  }
  return out;
}

SymmetricMatrix build_matrix(const Multigraph& g, MatrixKind kind) {
  const int n = g.order();
  const auto ints = build_integer_matrix(g, kind);
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m.set(i, j, static_cast<double>(ints[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                           static_cast<std::size_t>(j)]));
    }
  }
  return m;
}

std::vector<double> symmetric_eigenvalues(SymmetricMatrix m, const JacobiOptions& options) {
  const int n = m.order();
  // Work on a plain row-major copy; rotations keep it symmetric.
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = m(i, j);
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };

  const double limit = options.relative_tolerance * (1.0 + m.frobenius_norm());
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_norm() < limit) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double nrp = c * arp - s * arq;
          const double nrq = s * arp + c * arq;
          at(r, p) = nrp;
          at(p, r) = nrp;
          at(r, q) = nrq;
          at(q, r) = nrq;
        }
      }
    }
  }
  if (!converged) throw NoConvergence("Jacobi sweep cap reached");

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

SpectralSummary spectral_summary(const Multigraph& g) {
  SpectralSummary s;
  const auto stats = degree_stats(g);
  s.n = g.order();
  s.m = g.edge_count();
  s.min_degree = stats.min_degree;
  s.max_degree = stats.max_degree;
  s.adjacency = symmetric_eigenvalues(build_matrix(g, MatrixKind::Adjacency));
  s.laplacian = symmetric_eigenvalues(build_matrix(g, MatrixKind::Laplacian));
  s.signless = symmetric_eigenvalues(build_matrix(g, MatrixKind::SignlessLaplacian));
  return s;
}

QuotientMatrix::QuotientMatrix(QuotientKind kind, std::vector<std::int64_t> block_sizes,
                               std::vector<Rational> entries)
    : kind_(kind), block_sizes_(std::move(block_sizes)), entries_(std::move(entries)) {
  if (entries_.size() != block_sizes_.size() * block_sizes_.size())
    throw OrderMismatch("quotient entries do not match block count");
}

Rational QuotientMatrix::trace() const {
  Rational t{0};
  for (int i = 0; i < order(); ++i) t += at(i, i);
  return t;
}

QuotientMatrix quotient_matrix(const Multigraph& g, const VertexPartition& partition, QuotientKind kind) {
  if (partition.universe_size() != g.order()) throw InvalidPartition("partition universe differs from graph order");
  const auto t = partition.size();
  const auto labels = partition.labels();
  // crossing[i*t+j] = e(V_i, V_j) for i != j.
  std::vector<std::int64_t> crossing(t * t, 0);
  for (const auto& e : g.edges()) {
    const auto a = static_cast<std::size_t>(labels[static_cast<std::size_t>(e.u)]);
    const auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(e.v)]);
    if (a == b) continue;
    crossing[a * t + b] += e.count;
    crossing[b * t + a] += e.count;
  }
  const auto dbar = induced_average_degrees(g, partition);
  std::vector<std::int64_t> sizes(t);
  for (std::size_t i = 0; i < t; ++i) sizes[i] = static_cast<std::int64_t>(partition.block(i).size());

  std::vector<Rational> entries(t * t);
  const std::int64_t diagonal_scale = kind == QuotientKind::Adjacency ? 1 : 2;
  for (std::size_t i = 0; i < t; ++i) {
    Rational off_sum{0};
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      entries[i * t + j] = Rational(crossing[i * t + j], sizes[i]);
      off_sum += entries[i * t + j];
    }
    entries[i * t + i] = dbar[i] * diagonal_scale - off_sum;
  }
  return QuotientMatrix(kind, std::move(sizes), std::move(entries));
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& qm) {
  // S M S^-1 with S = diag(sqrt|V_i|): entry (i,j) becomes
  // M_ij * sqrt(|V_i|/|V_j|) = e(V_i,V_j) / sqrt(|V_i||V_j|), symmetric.
  const int t = qm.order();
  SymmetricMatrix sym(t);
  const auto sizes = qm.block_sizes();
  for (int i = 0; i < t; ++i) {
    sym.set(i, i, to_double(qm.at(i, i)));
    for (int j = i + 1; j < t; ++j) {
      const Rational shared = qm.at(i, j) * sizes[static_cast<std::size_t>(i)];
      const double scale = std::sqrt(static_cast<double>(sizes[static_cast<std::size_t>(i)]) *
                                     static_cast<double>(sizes[static_cast<std::size_t>(j)]));
      sym.set(i, j, to_double(shared) / scale);
    }
  }
  return symmetric_eigenvalues(std::move(sym));
}

InterlacingResult check_interlacing(std::span<const double> outer, std::span<const double> inner, double tol) {
  const auto n = outer.size();
  const auto t = inner.size();
  if (t > n) throw LengthMismatch("inner sequence longer than outer");
  for (std::size_t i = 0; i < t; ++i) {
    const bool upper = outer[i] + tol >= inner[i];
    const bool lower = inner[i] >= outer[n - t + i] - tol;
    if (!upper || !lower) return {false, static_cast<int>(i + 1)};
  }
  return {};
}

bool weyl_check(const SymmetricMatrix& b, const SymmetricMatrix& c, int i, int j, double tol) {
  const int n = b.order();
  if (c.order() != n) throw OrderMismatch("Weyl check needs equal orders");
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("Weyl indices out of range");
  const auto eb = symmetric_eigenvalues(b);
  const auto ec = symmetric_eigenvalues(c);
  const auto es = symmetric_eigenvalues(b + c);
  const double lhs = eb[static_cast<std::size_t>(i - 1)] + ec[static_cast<std::size_t>(j - 1)];
  bool ok = true;
  if (i + j >= n + 1) ok = ok && lhs <= es[static_cast<std::size_t>(i + j - n - 1)] + tol;
  if (i + j <= n + 1) ok = ok && lhs >= es[static_cast<std::size_t>(i + j - 2)] - tol;
  return ok;
}

int exact_integer_eigenvalue_multiplicity(std::span<const std::int64_t> matrix, int order, std::int64_t value) {
  using boost::multiprecision::cpp_int;
  const auto n = static_cast<std::size_t>(order);
  if (matrix.size() != n * n) throw OrderMismatch("matrix storage does not match order");
  std::vector<cpp_int> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = matrix[i];
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] -= value;

  // Bareiss fraction-free elimination with row pivoting; rank = pivots found.
  std::size_t rank = 0;
  cpp_int previous = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[rank * n + k]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      for (std::size_t k = col + 1; k < n; ++k) {
        a[r * n + k] = (a[rank * n + col] * a[r * n + k] - a[r * n + col] * a[rank * n + k]) / previous;
      }
      a[r * n + col] = 0;
    }
    previous = a[rank * n + col];
    ++rank;
  }
  return order - static_cast<int>(rank);
}

}  // namespace spectral_gate
