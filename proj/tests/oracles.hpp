#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library beyond reading a Multigraph's multiplicities.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spectral_gate/graph.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
// Coefficients c_0..c_n of a polynomial, c_i multiplies x^i.
using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b);
// prod (x - r)^mult over the given integer roots.
Poly poly_from_roots(const std::vector<std::pair<std::int64_t, int>>& roots);
Poly poly_pow(const Poly& p, int e);

// det(xI - M) by Faddeev-LeVerrier over big integers (exact division by k).
Poly characteristic_polynomial(const std::vector<std::int64_t>& m, int n);

std::vector<std::int64_t> adjacency(const spectral_gate::Multigraph& g);

// 2^C(n,2) minus the graphs whose vertex 1 lies in a component of size k < n.
std::int64_t connected_labelled_count(int n);

// Plain loop over every bipartition mask.
std::int64_t brute_min_cut(const spectral_gate::Multigraph& g);

// Literal reading of the class definition over all pairs of cut sides.
bool brute_in_class(const spectral_gate::Multigraph& g);

// Largest k for which k edge-disjoint spanning trees exist, by backtracking
// over assignments of edge copies to trees. Tiny graphs only.
int brute_tree_packing(const spectral_gate::Multigraph& g);

// Closed-form spectra, non-increasing.
std::vector<double> complete_spectrum(int n);
std::vector<double> cycle_spectrum(int n);
std::vector<double> path_spectrum(int n);
std::vector<double> star_spectrum(int leaves);

}  // namespace oracle
