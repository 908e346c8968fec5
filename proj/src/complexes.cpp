#include "evotopo/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "evotopo/errors.hpp"
#include "evotopo/ingest.hpp"
#include "text_util.hpp"

namespace evotopo {
namespace {

using NodeSet = std::vector<NodeId>;  // sorted

NodeSet intersect(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<NodeSet> adjacency(std::span<const Edge> edges, std::size_t n) {
  std::vector<NodeSet> adj(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge references a node outside 0..n-1");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const std::vector<NodeSet>& adj) : adj_(adj) {}

  void expand(NodeSet& r, NodeSet p, NodeSet x) {
    if (p.empty()) {
      if (x.empty()) found.emplace_back(sorted(r));
      return;
    }
    // Pivot: vertex of P ∪ X with the most neighbours in P.
    NodeId pivot = p.front();
    std::size_t best = 0;
    for (const NodeSet* s : {&p, &x}) {
      for (NodeId u : *s) {
        const auto hits = intersect(p, adj_[u]).size();
        if (hits > best || (hits == best && u < pivot)) {
          best = hits;
          pivot = u;
        }
      }
    }
    NodeSet candidates;
    std::set_difference(p.begin(), p.end(), adj_[pivot].begin(), adj_[pivot].end(),
                        std::back_inserter(candidates));
    for (NodeId v : candidates) {
      r.push_back(v);
      expand(r, intersect(p, adj_[v]), intersect(x, adj_[v]));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  std::vector<Simplex> found;

 private:
  static Simplex sorted(NodeSet r) {
    std::sort(r.begin(), r.end());
    return Simplex(std::move(r));
  }

  const std::vector<NodeSet>& adj_;
};

std::vector<NodeId> degeneracy_order(const std::vector<NodeSet>& adj) {
  const auto n = adj.size();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, NodeId>> queue;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    queue.emplace(degree[v], v);
  }
  std::vector<bool> removed(n, false);
  std::vector<NodeId> order;
  order.reserve(n);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    order.push_back(v);
    for (NodeId u : adj[v]) {
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      queue.emplace(--degree[u], u);
    }
  }
  return order;
}

// Graph whose vertices and edges carry filtration values. Simplex values
// are the maximum over their vertices and edges.
struct ValuedGraph {
  struct Neighbor {
    NodeId id;
    double value;
  };
  std::vector<bool> present;
  std::vector<double> vertex_value;
  std::vector<std::vector<Neighbor>> higher;  // neighbours with larger index, sorted

  explicit ValuedGraph(std::size_t n) : present(n, false), vertex_value(n, 0.0), higher(n) {}

  void add_edge(NodeId a, NodeId b, double value) {
    const Edge e = make_edge(a, b);
    higher[e.u].push_back({e.v, value});
  }

  void finish() {
    for (auto& h : higher) {
      std::sort(h.begin(), h.end(), [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    }
  }
};

void extend_cliques(const ValuedGraph& g, std::vector<NodeId>& clique, double value,
                    const std::vector<ValuedGraph::Neighbor>& candidates, std::size_t max_size,
                    std::vector<Cell>& out) {
  out.push_back({Simplex(clique), value});
  if (clique.size() == max_size) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& [w, edge_value] = candidates[i];
    // Candidates after w that are also adjacent to w; carry the largest
    // edge value seen from any clique member.
    std::vector<ValuedGraph::Neighbor> next;
    const auto& hw = g.higher[w];
    auto it = hw.begin();
    for (std::size_t j = i + 1; j < candidates.size() && it != hw.end(); ++j) {
      while (it != hw.end() && it->id < candidates[j].id) ++it;
      if (it != hw.end() && it->id == candidates[j].id) {
        next.push_back({candidates[j].id, std::max(candidates[j].value, it->value)});
      }
    }
    clique.push_back(w);
    extend_cliques(g, clique, std::max({value, edge_value, g.vertex_value[w]}), next, max_size, out);
    clique.pop_back();
  }
}

Filtration flag_filtration(const ValuedGraph& g, int max_dim) {
  if (max_dim < 0) throw ValidationError("max_dim must be non-negative");
  std::vector<Cell> cells;
  std::vector<NodeId> clique;
  const auto max_size = static_cast<std::size_t>(max_dim) + 1;
  for (NodeId v = 0; v < g.present.size(); ++v) {
    if (!g.present[v]) continue;
    clique.assign(1, v);
    extend_cliques(g, clique, g.vertex_value[v], g.higher[v], max_size, cells);
  }
  return Filtration::canonical(std::move(cells));
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<std::string> node_labels, std::vector<WeightedEdge> edges)
    : labels_(std::move(node_labels)), edges_(std::move(edges)) {
  std::set<Edge> seen;
  for (auto& e : edges_) {
    const Edge key = make_edge(e.u, e.v);
    if (key.v >= labels_.size()) throw std::invalid_argument("weighted edge references unknown node");
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw std::invalid_argument("edge weights must be finite and positive");
    }
    if (!seen.insert(key).second) throw std::invalid_argument("repeated weighted edge");
    e.u = key.u;
    e.v = key.v;
  }
}

WeightedGraph parse_weighted_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<WeightedEdge> edges;
  std::set<Edge> seen;
  auto node = [&](std::string_view name) {
    auto [it, inserted] = index.try_emplace(std::string(name), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(name);
    return it->second;
  };
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto t = detail::trim(lines[i]);
    if (t.empty() || t.front() == '#') continue;
    const auto c1 = t.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : t.find(',', c1 + 1);
    if (c2 == std::string_view::npos || t.find(',', c2 + 1) != std::string_view::npos) {
      throw ParseError({i + 1, 0, "malformed line: expected u,v,w"});
    }
    const auto u = detail::trim(t.substr(0, c1));
    const auto v = detail::trim(t.substr(c1 + 1, c2 - c1 - 1));
    const auto w = detail::parse_real(detail::trim(t.substr(c2 + 1)));
    if (u.empty() || v.empty()) throw ParseError({i + 1, 0, "missing node name"});
    if (u == v) throw ParseError({i + 1, 0, "self-loop on node '" + std::string(u) + "'"});
    if (!w || !std::isfinite(*w) || *w <= 0.0) {
      throw ParseError({i + 1, 0, "weight must be a finite positive number"});
    }
    const NodeId a = node(u);
    const NodeId b = node(v);
    if (!seen.insert(make_edge(a, b)).second) throw ParseError({i + 1, 0, "repeated edge"});
    edges.push_back({a, b, *w});
  }
  return WeightedGraph(std::move(labels), std::move(edges));
}

std::vector<Simplex> maximal_cliques(std::span<const Edge> edges, std::size_t node_count) {
  const auto adj = adjacency(edges, node_count);
  BronKerbosch bk(adj);
  const auto order = degeneracy_order(adj);
  std::vector<std::size_t> position(node_count);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  for (NodeId v : order) {
    NodeSet later;
    NodeSet earlier;
    for (NodeId u : adj[v]) (position[u] > position[v] ? later : earlier).push_back(u);
    NodeSet r{v};
    bk.expand(r, std::move(later), std::move(earlier));
  }
  auto cliques = std::move(bk.found);
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

Filtration build_clique_filtration(const EvolvingNetwork& net, int max_dim) {
  if (auto violation = validate_monotone(net)) {
    throw ValidationError("monotonicity violation at phase " + std::to_string(violation->phase) + ": " +
                          violation->message);
  }
  if (max_dim < 0) throw ValidationError("max_dim must be non-negative");
  ValuedGraph g(net.node_count());
  if (net.phase_count() == 0) return {};

  std::set<Edge> seen;
  for (std::size_t k = 0; k < net.phase_count(); ++k) {
    const double value = net.phase_value(k);
    const auto& snap = net.phases()[k];
    for (NodeId v : snap.nodes) {
      if (!g.present[v]) {
        g.present[v] = true;
        g.vertex_value[v] = value;
      }
    }
    for (const Edge& e : snap.edges) {
      if (seen.insert(e).second) g.add_edge(e.u, e.v, value);
    }
  }
  g.finish();
  return flag_filtration(g, max_dim);
}

Filtration build_weight_threshold_filtration(const WeightedGraph& graph, int max_dim,
                                             WeightDirection direction) {
  const auto n = graph.node_count();
  std::vector<double> values;
  values.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) values.push_back(e.weight);

  if (direction == WeightDirection::kDescending) {
    std::vector<double> distinct = values;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (auto& w : values) {
      const auto rank = std::lower_bound(distinct.begin(), distinct.end(), w, std::greater<>()) - distinct.begin();
      w = static_cast<double>(rank + 1);
    }
  }

  ValuedGraph g(n);
  std::vector<double> min_incident(n, kInfinity);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& e = graph.edges()[i];
    g.add_edge(e.u, e.v, values[i]);
    min_incident[e.u] = std::min(min_incident[e.u], values[i]);
    min_incident[e.v] = std::min(min_incident[e.v], values[i]);
  }
  for (NodeId v = 0; v < n; ++v) {
    g.present[v] = true;
    g.vertex_value[v] = std::isinf(min_incident[v]) ? 0.0 : min_incident[v];
  }
  g.finish();
  return flag_filtration(g, max_dim);
}

Filtration build_geodesic_rips_filtration(std::span<const Edge> edges, std::size_t node_count,
                                          int max_dim) {
  const auto adj = adjacency(edges, node_count);
  const auto cap = static_cast<double>(node_count);
  ValuedGraph g(node_count);
  std::vector<std::size_t> dist(node_count);
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  for (NodeId s = 0; s < node_count; ++s) {
    g.present[s] = true;
    std::fill(dist.begin(), dist.end(), unreached);
    dist[s] = 0;
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
      const NodeId u = q.front();
      q.pop();
      for (NodeId w : adj[u]) {
        if (dist[w] == unreached) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    for (NodeId t = s + 1; t < node_count; ++t) {
      g.add_edge(s, t, dist[t] == unreached ? cap : static_cast<double>(dist[t]));
    }
  }
  g.finish();
  return flag_filtration(g, max_dim);
}

}  // namespace evotopo
