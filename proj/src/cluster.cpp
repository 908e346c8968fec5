#include "evotopo/cluster.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace evotopo {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // Attaches b's root under a's root.
  void attach(std::size_t a, std::size_t b) { parent_[find(b)] = find(a); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Dendrogram single_linkage(const DistanceMatrix& m) {
  const auto n = m.size();
  Dendrogram out;
  out.items = m.ids();
  if (n < 2) return out;

  // Prim over the complete distance graph.
  struct TreeEdge {
    double height;
    std::size_t lo;
    std::size_t hi;
  };
  std::vector<TreeEdge> tree;
  tree.reserve(n - 1);
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> via(n, 0);
  std::size_t current = 0;
  in_tree[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double d = m(current, v);
      if (d < best[v] || (d == best[v] && current < via[v])) {
        best[v] = d;
        via[v] = current;
      }
      if (next == n || best[v] < best[next]) next = v;
    }
    in_tree[next] = true;
    tree.push_back({best[next], std::min(next, via[next]), std::max(next, via[next])});
    current = next;
  }
  std::sort(tree.begin(), tree.end(), [](const TreeEdge& a, const TreeEdge& b) {
    return std::tie(a.height, a.lo, a.hi) < std::tie(b.height, b.lo, b.hi);
  });

  // Replay the tree edges as merges, tracking each root's cluster id.
  DisjointSets sets(n);
  std::vector<std::size_t> cluster_of(n);
  std::iota(cluster_of.begin(), cluster_of.end(), 0);
  for (const auto& e : tree) {
    const auto ra = sets.find(e.lo);
    const auto rb = sets.find(e.hi);
    const auto ca = cluster_of[ra];
    const auto cb = cluster_of[rb];
    out.merges.push_back({std::min(ca, cb), std::max(ca, cb), e.height});
    sets.attach(ra, rb);
    cluster_of[ra] = n + out.merges.size() - 1;
  }
  return out;
}

std::vector<std::size_t> cut(const Dendrogram& dendrogram, double height) {
  const auto n = dendrogram.items.size();
  if (height < 0.0) throw std::invalid_argument("cut height must be non-negative");
  // Cluster id -> a representative item.
  std::vector<std::size_t> representative(n + dendrogram.merges.size());
  std::iota(representative.begin(), representative.begin() + static_cast<std::ptrdiff_t>(n), 0);
  DisjointSets sets(n);
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const auto& mg = dendrogram.merges[k];
    if (mg.a >= n + k || mg.b >= n + k) throw std::invalid_argument("dendrogram references a future cluster");
    const auto ra = representative[mg.a];
    const auto rb = representative[mg.b];
    representative[n + k] = ra;
    if (mg.height <= height) sets.attach(ra, rb);
  }
  std::vector<std::size_t> labels(n);
  std::vector<std::size_t> label_of_root(n, std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& l = label_of_root[sets.find(i)];
    if (l == std::numeric_limits<std::size_t>::max()) l = next++;
    labels[i] = l;
  }
  return labels;
}

}  // namespace evotopo
