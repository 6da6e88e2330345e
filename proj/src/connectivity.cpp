#include "spectral_gate/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "spectral_gate/errors.hpp"

namespace spectral_gate {

namespace {

// Calls visit(mask, boundary) for every mask over vertices [0, bits) in Gray
// code order except the empty set; vertices >= bits stay outside S.
template <class Visit>
void gray_walk(const Multigraph& g, int bits, Visit&& visit) {
  std::uint32_t mask = 0;
  std::int64_t boundary = 0;
  const std::uint64_t steps = std::uint64_t{1} << bits;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const int v = std::countr_zero(step);
    const std::uint32_t bit = std::uint32_t{1} << v;
    std::int64_t into_s = 0;
    for (Vertex u : g.neighbors(v)) {
      if (mask & (std::uint32_t{1} << u)) into_s += g.multiplicity(u, v);
    }
    if (mask & bit) {
      boundary -= g.degree(v) - 2 * into_s;
    } else {
      boundary += g.degree(v) - 2 * into_s;
    }
    mask ^= bit;
    visit(mask, boundary);
  }
}

}  // namespace

CutCertificate edge_connectivity(const Multigraph& g) {
  const int n = g.order();
  if (n < 2) throw SingleVertex();

  const auto comps = components(g);
  if (comps.count > 1) {
    std::vector<Vertex> side;
    for (Vertex v = 0; v < n; ++v)
      if (comps.label[static_cast<std::size_t>(v)] == 0) side.push_back(v);
    return {0, VertexSubset(n, std::move(side))};
  }

  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int64_t> w(un * un, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) w[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)] = g.multiplicity(u, v);

  std::vector<std::vector<Vertex>> group(un);
  for (Vertex v = 0; v < n; ++v) group[static_cast<std::size_t>(v)] = {v};
  std::vector<Vertex> active(un);
  for (Vertex v = 0; v < n; ++v) active[static_cast<std::size_t>(v)] = v;

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Vertex> best_side;
  std::vector<std::int64_t> key(un);
  std::vector<char> added(un);

  while (active.size() > 1) {
    for (Vertex v : active) {
      key[static_cast<std::size_t>(v)] = 0;
      added[static_cast<std::size_t>(v)] = 0;
    }
    Vertex prev = -1;
    Vertex last = active.front();
    for (std::size_t round = 0; round < active.size(); ++round) {
      std::size_t pick = un;
      for (Vertex v : active) {  // active is kept sorted, so ties pick the lowest index
        const auto sv = static_cast<std::size_t>(v);
        if (added[sv]) continue;
        if (pick == un || key[sv] > key[pick]) pick = sv;
      }
      added.at(pick) = 1;
      prev = last;
      last = static_cast<Vertex>(pick);
      for (Vertex v : active) {
        if (!added[static_cast<std::size_t>(v)])
          key[static_cast<std::size_t>(v)] += w[pick * un + static_cast<std::size_t>(v)];
      }
    }
    const std::int64_t phase_cut = key[static_cast<std::size_t>(last)];
    if (phase_cut < best) {
      best = phase_cut;
      best_side = group[static_cast<std::size_t>(last)];
    }
    // Merge `last` into `prev`.
    auto& into = group[static_cast<std::size_t>(prev)];
    auto& from = group[static_cast<std::size_t>(last)];
    into.insert(into.end(), from.begin(), from.end());
    from.clear();
    for (Vertex v : active) {
      const auto pv = static_cast<std::size_t>(prev) * un + static_cast<std::size_t>(v);
      const auto lv = static_cast<std::size_t>(last) * un + static_cast<std::size_t>(v);
      w[pv] += w[lv];
      w[static_cast<std::size_t>(v) * un + static_cast<std::size_t>(prev)] = w[pv];
    }
    w[static_cast<std::size_t>(prev) * un + static_cast<std::size_t>(prev)] = 0;
    active.erase(std::find(active.begin(), active.end(), last));
  }
  return {best, VertexSubset(n, std::move(best_side))};
}

std::int64_t min_cut_oracle(const Multigraph& g) {
  const int n = g.order();
  if (n < 2) throw SingleVertex();
  if (n > kMaxEnumerationOrder) throw TooLarge("min_cut_oracle needs n <= 24");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  // Vertex n-1 stays outside S, so each bipartition is visited once.
  gray_walk(g, n - 1, [&](std::uint32_t, std::int64_t boundary) { best = std::min(best, boundary); });
  return best;
}

std::vector<std::uint32_t> cut_sides_with_value(const Multigraph& g, std::int64_t value) {
  const int n = g.order();
  if (n > kMaxEnumerationOrder) throw TooLarge("cut side enumeration needs n <= 24");
  if (n < 2) return {};
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> sides;
  gray_walk(g, n, [&](std::uint32_t mask, std::int64_t boundary) {
    if (mask != full && boundary == value) sides.push_back(mask);
  });
  std::sort(sides.begin(), sides.end());
  return sides;
}

GClassResult g_class_membership(const Multigraph& g) {
  if (g.order() < 3) throw TooSmall("class membership needs n >= 3");
  return g_class_membership(g, edge_connectivity(g).value);
}

GClassResult g_class_membership(const Multigraph& g, std::int64_t kappa) {
  const int n = g.order();
  if (n < 3) throw TooSmall("class membership needs n >= 3");
  GClassResult result;
  result.kappa = kappa;

  Vertex first = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != kappa) continue;
    if (first < 0) {
      first = v;
      continue;
    }
    result.status = Membership::InClass;
    result.witness = GClassWitness{VertexSubset(n, {first}), VertexSubset(n, {v}), kappa};
    return result;
  }

  if (n > kMaxEnumerationOrder) {
    result.status = Membership::Undecided;
    return result;
  }

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const auto sides = cut_sides_with_value(g, kappa);
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      if ((sides[i] & sides[j]) != 0) continue;
      if ((sides[i] | sides[j]) == full) continue;
      result.status = Membership::InClass;
      result.witness = GClassWitness{VertexSubset::from_mask(n, sides[i]), VertexSubset::from_mask(n, sides[j]), kappa};
      return result;
    }
  }
  result.status = Membership::NotInClass;
  return result;
}

bool validate_witness(const Multigraph& g, const GClassWitness& w) {
  const int n = g.order();
  if (w.first.universe_size() != n || w.second.universe_size() != n) return false;
  if (!w.first.proper() || !w.second.proper()) return false;
  if (!w.first.disjoint_from(w.second)) return false;
  if (w.first.size() + w.second.size() >= static_cast<std::size_t>(n)) return false;
  return cut_weight(g, w.first) == w.kappa && cut_weight(g, w.second) == w.kappa;
}

}  // namespace spectral_gate
