#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evotopo/types.hpp"

namespace evotopo {

inline constexpr int kDefaultMaxDim = 2;

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;

  bool operator==(const WeightedEdge&) const = default;
};

// Undirected graph with finite positive edge weights and no self-loops or
// repeated edges. Checked on construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::vector<std::string> node_labels, std::vector<WeightedEdge> edges);

  const std::vector<std::string>& node_labels() const noexcept { return labels_; }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::vector<WeightedEdge> edges_;
};

// "u,v,w" per line; '#' starts a comment line. Nodes are indexed by first
// appearance. Throws ParseError.
WeightedGraph parse_weighted_edge_list(std::string_view text);

// Inclusion-maximal cliques of the graph on nodes 0..n-1 (isolated nodes are
// singleton cliques), sorted lexicographically. Bron–Kerbosch with Tomita
// pivoting over a degeneracy ordering.
std::vector<Simplex> maximal_cliques(std::span<const Edge> edges, std::size_t node_count);

// Flag complex of the last snapshot, up to dimension max_dim, each simplex
// born at the first phase where all its vertices and edges exist.
// Throws ValidationError on non-monotone input or negative max_dim.
Filtration build_clique_filtration(const EvolvingNetwork& net, int max_dim = kDefaultMaxDim);

enum class WeightDirection { kAscending, kDescending };

// Ascending: edges born at their weight, vertices at the minimum incident
// weight (isolated vertices at 0), higher simplices at their largest edge.
// Descending: weights are first replaced by dense descending ranks
// (largest weight -> 1), then treated as ascending.
Filtration build_weight_threshold_filtration(const WeightedGraph& g, int max_dim = kDefaultMaxDim,
                                             WeightDirection direction = WeightDirection::kAscending);

// Vietoris–Rips over hop distance. Vertices at 0; an edge (u,v) at the BFS
// distance between u and v; node pairs in different components at
// node_count, a cap larger than any hop distance.
Filtration build_geodesic_rips_filtration(std::span<const Edge> edges, std::size_t node_count,
                                          int max_dim = kDefaultMaxDim);

}  // namespace evotopo
