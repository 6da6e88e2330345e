#include "spectral_gate/tree_packing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "spectral_gate/errors.hpp"

namespace spectral_gate {

namespace {

// k forests over the edge slots of G, grown by augmenting paths in the
// exchange graph of the union of k graphic matroids.
class ForestUnion {
 public:
  explicit ForestUnion(const Multigraph& g) : n_(g.order()) {
    for (const auto& e : g.edges())
      for (int c = 0; c < e.count; ++c) slots_.push_back({e.u, e.v, c});
    owner_.assign(slots_.size(), -1);
  }

  std::size_t slot_count() const { return slots_.size(); }
  const EdgeSlot& slot(std::size_t s) const { return slots_[s]; }
  int owner(std::size_t s) const { return owner_[s]; }
  int forest_count() const { return static_cast<int>(forests_.size()); }
  std::size_t forest_size(int f) const { return sizes_[static_cast<std::size_t>(f)]; }

  void add_forest() {
    forests_.emplace_back(static_cast<std::size_t>(n_));
    sizes_.push_back(0);
  }

  bool all_spanning() const {
    return std::all_of(sizes_.begin(), sizes_.end(),
                       [&](std::size_t s) { return s == static_cast<std::size_t>(n_ - 1); });
  }

  // Tries to add an unused slot to the union, rerouting along a shortest
  // exchange path. Lowest forest index is tried first at every step.
  bool insert(int x) {
    const auto count = slots_.size();
    label_.assign(count, -1);
    label_forest_.assign(count, -1);
    visited_.assign(count, 0);
    std::deque<int> queue{x};
    visited_[static_cast<std::size_t>(x)] = 1;
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      const auto& e = slots_[static_cast<std::size_t>(y)];
      for (int f = 0; f < forest_count(); ++f) {
        if (f == owner_[static_cast<std::size_t>(y)]) continue;
        if (!forest_path(f, e.u, e.v)) {
          augment(y, f);
          return true;
        }
        for (int z : path_) {
          if (visited_[static_cast<std::size_t>(z)]) continue;
          visited_[static_cast<std::size_t>(z)] = 1;
          label_[static_cast<std::size_t>(z)] = y;
          label_forest_[static_cast<std::size_t>(z)] = f;
          queue.push_back(z);
        }
      }
    }
    return false;
  }

  // Slots reachable in the exchange graph from every unused slot. Every
  // member is spanned inside each forest by members of that forest.
  std::vector<char> closure_of_unused() {
    const auto count = slots_.size();
    std::vector<char> reach(count, 0);
    std::deque<int> queue;
    for (std::size_t s = 0; s < count; ++s) {
      if (owner_[s] < 0) {
        reach[s] = 1;
        queue.push_back(static_cast<int>(s));
      }
    }
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      const auto& e = slots_[static_cast<std::size_t>(y)];
      for (int f = 0; f < forest_count(); ++f) {
        if (f == owner_[static_cast<std::size_t>(y)]) continue;
        if (!forest_path(f, e.u, e.v)) throw std::logic_error("augmenting path left after packing stalled");
        for (int z : path_) {
          if (reach[static_cast<std::size_t>(z)]) continue;
          reach[static_cast<std::size_t>(z)] = 1;
          queue.push_back(z);
        }
      }
    }
    return reach;
  }

  std::vector<std::vector<EdgeSlot>> forests() const {
    std::vector<std::vector<EdgeSlot>> out(forests_.size());
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      if (owner_[s] >= 0) out[static_cast<std::size_t>(owner_[s])].push_back(slots_[s]);
    }
    return out;
  }

 private:
  using Adjacency = std::vector<std::vector<std::pair<Vertex, int>>>;

  // Fills path_ with the slots on the a-b path of forest f; false if a and b
  // lie in different trees.
  bool forest_path(int f, Vertex a, Vertex b) {
    const auto& adj = forests_[static_cast<std::size_t>(f)];
    parent_vertex_.assign(static_cast<std::size_t>(n_), -1);
    parent_slot_.assign(static_cast<std::size_t>(n_), -1);
    path_.clear();
    bfs_.clear();
    bfs_.push_back(a);
    parent_vertex_[static_cast<std::size_t>(a)] = a;
    for (std::size_t head = 0; head < bfs_.size(); ++head) {
      const Vertex u = bfs_[head];
      if (u == b) break;
      for (const auto& [v, s] : adj[static_cast<std::size_t>(u)]) {
        if (parent_vertex_[static_cast<std::size_t>(v)] >= 0) continue;
        parent_vertex_[static_cast<std::size_t>(v)] = u;
        parent_slot_[static_cast<std::size_t>(v)] = s;
        bfs_.push_back(v);
      }
    }
    if (parent_vertex_[static_cast<std::size_t>(b)] < 0) return false;
    for (Vertex v = b; v != a; v = parent_vertex_[static_cast<std::size_t>(v)])
      path_.push_back(parent_slot_[static_cast<std::size_t>(v)]);
    std::sort(path_.begin(), path_.end());
    return true;
  }

  void attach(int s, int f) {
    const auto& e = slots_[static_cast<std::size_t>(s)];
    auto& adj = forests_[static_cast<std::size_t>(f)];
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, s);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, s);
    owner_[static_cast<std::size_t>(s)] = f;
    ++sizes_[static_cast<std::size_t>(f)];
  }

  void detach(int s) {
    const int f = owner_[static_cast<std::size_t>(s)];
    if (f < 0) return;
    const auto& e = slots_[static_cast<std::size_t>(s)];
    auto& adj = forests_[static_cast<std::size_t>(f)];
    for (Vertex end : {e.u, e.v}) {
      auto& list = adj[static_cast<std::size_t>(end)];
      list.erase(std::find_if(list.begin(), list.end(), [&](const auto& p) { return p.second == s; }));
    }
    owner_[static_cast<std::size_t>(s)] = -1;
    --sizes_[static_cast<std::size_t>(f)];
  }

  // y enters forest f; each predecessor on the exchange path takes the place
  // vacated by its successor.
  void augment(int y, int f) {
    int current = y;
    int target = f;
    while (true) {
      detach(current);
      attach(current, target);
      const int previous = label_[static_cast<std::size_t>(current)];
      if (previous < 0) break;
      target = label_forest_[static_cast<std::size_t>(current)];
      current = previous;
    }
  }

  int n_;
  std::vector<EdgeSlot> slots_;
  std::vector<int> owner_;
  std::vector<Adjacency> forests_;
  std::vector<std::size_t> sizes_;

  std::vector<int> label_;
  std::vector<int> label_forest_;
  std::vector<char> visited_;
  std::vector<Vertex> parent_vertex_;
  std::vector<int> parent_slot_;
  std::vector<Vertex> bfs_;
  std::vector<int> path_;
};

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

std::int64_t removed_size(const EdgeMultiset& removed) {
  std::int64_t total = 0;
  for (const auto& e : removed) total += e.count;
  return total;
}

}  // namespace

PartitionWitness make_partition_witness(const Multigraph& g, VertexPartition parts) {
  PartitionWitness w;
  const auto labels = parts.labels();
  for (const auto& e : g.edges()) {
    if (labels[static_cast<std::size_t>(e.u)] != labels[static_cast<std::size_t>(e.v)]) w.crossing += e.count;
  }
  const auto s = static_cast<std::int64_t>(parts.size());
  w.bound = s >= 2 ? w.crossing / (s - 1) : 0;
  w.parts = std::move(parts);
  return w;
}

PackingCertificate spanning_tree_packing(const Multigraph& g) {
  const int n = g.order();
  PackingCertificate cert;
  if (n == 1) {
    cert.tau = kUnboundedPacking;
    return cert;
  }
  if (n == 0 || !is_connected(g)) throw Disconnected();

  ForestUnion packing(g);
  for (int level = 1;; ++level) {
    packing.add_forest();
    const auto needed = static_cast<std::int64_t>(level) * (n - 1);
    if (needed <= g.edge_count()) {
      for (std::size_t s = 0; s < packing.slot_count(); ++s) {
        if (packing.owner(s) < 0) packing.insert(static_cast<int>(s));
        if (packing.all_spanning()) break;
      }
    }
    if (packing.all_spanning()) {
      cert.tau = level;
      cert.forests = packing.forests();
      continue;
    }
    // The closure spans itself in every forest; its components form a
    // partition whose crossing edges are too few for `level` trees.
    const auto closure = needed <= g.edge_count() ? packing.closure_of_unused()
                                                  : std::vector<char>(packing.slot_count(), 0);
    UnionFind uf(n);
    for (std::size_t s = 0; s < packing.slot_count(); ++s) {
      if (closure[s]) uf.unite(packing.slot(s).u, packing.slot(s).v);
    }
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<int> root_label(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
      auto& rl = root_label[static_cast<std::size_t>(uf.find(v))];
      if (rl < 0) rl = next++;
      labels[static_cast<std::size_t>(v)] = rl;
    }
    cert.dual = make_partition_witness(g, VertexPartition::from_labels(labels));
    if (cert.dual->parts.size() < 2 || cert.dual->bound != level - 1)
      throw std::logic_error("packing dual does not certify the packing number");
    return cert;
  }
}

PartitionOracleResult tau_partition_oracle(const Multigraph& g) {
  const int n = g.order();
  if (n < 2) throw SingleVertex();
  if (n > kMaxPartitionOracleOrder) throw TooLarge("partition oracle needs n <= 10");
  if (!is_connected(g)) throw Disconnected();

  const auto edges = g.edges();
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_labels;
  while (true) {
    const int parts = prefix_max[static_cast<std::size_t>(n - 1)] + 1;
    if (parts >= 2) {
      std::int64_t crossing = 0;
      for (const auto& e : edges) {
        if (a[static_cast<std::size_t>(e.u)] != a[static_cast<std::size_t>(e.v)]) crossing += e.count;
      }
      const std::int64_t bound = crossing / (parts - 1);
      if (bound < best) {
        best = bound;
        best_labels = a;
      }
    }
    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(j - 1)];
    }
  }
  PartitionOracleResult out;
  out.tau = static_cast<int>(best);
  out.witness = make_partition_witness(g, VertexPartition::from_labels(best_labels));
  return out;
}

bool check_nash_williams(const Multigraph& g, int k, const EdgeMultiset& removed) {
  const auto comps = components_after_deletion(g, removed);
  return removed_size(removed) >= static_cast<std::int64_t>(k) * (comps.count - 1);
}

CutProfile component_cut_profile(const Multigraph& g, const EdgeMultiset& removed) {
  const auto comps = components_after_deletion(g, removed);
  CutProfile p;
  p.components = comps.count;
  p.labels = comps.label;
  p.r.assign(static_cast<std::size_t>(comps.count), 0);
  for (const auto& e : g.edges()) {
    const int a = comps.label[static_cast<std::size_t>(e.u)];
    const int b = comps.label[static_cast<std::size_t>(e.v)];
    if (a == b) continue;
    p.r[static_cast<std::size_t>(a)] += e.count;
    p.r[static_cast<std::size_t>(b)] += e.count;
  }
  std::sort(p.r.begin(), p.r.end());
  p.total = std::accumulate(p.r.begin(), p.r.end(), std::int64_t{0});
  return p;
}

EdgeMultiset crossing_edges(const Multigraph& g, const VertexPartition& parts) {
  const auto labels = parts.labels();
  EdgeMultiset out;
  for (const auto& e : g.edges()) {
    if (labels[static_cast<std::size_t>(e.u)] != labels[static_cast<std::size_t>(e.v)]) out.push_back(e);
  }
  return out;
}

bool validate_packing(const Multigraph& g, const PackingCertificate& cert) {
  const int n = g.order();
  if (static_cast<int>(cert.forests.size()) != cert.tau) return false;
  std::vector<EdgeSlot> all;
  for (const auto& forest : cert.forests) {
    if (static_cast<int>(forest.size()) != n - 1) return false;
    UnionFind uf(n);
    for (const auto& s : forest) {
      if (s.u < 0 || s.v < 0 || s.u >= n || s.v >= n || s.u >= s.v) return false;
      if (s.copy < 0 || s.copy >= g.multiplicity(s.u, s.v)) return false;
      if (!uf.unite(s.u, s.v)) return false;
      all.push_back(s);
    }
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace spectral_gate
