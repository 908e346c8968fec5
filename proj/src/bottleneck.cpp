#include "evotopo/bottleneck.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>

#include "evotopo/errors.hpp"

namespace evotopo {
namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

// Hopcroft–Karp on a bipartite graph with equal sides.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(std::vector<std::vector<std::size_t>> adj)
      : adj_(std::move(adj)), match_left_(adj_.size(), kFree), match_right_(adj_.size(), kFree),
        layer_(adj_.size()) {}

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kFree && dfs(u)) ++size;
      }
    }
    return size;
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool reached_free = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        layer_[u] = 0;
        q.push(u);
      } else {
        layer_[u] = kFree;
      }
    }
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (std::size_t v : adj_[u]) {
        const auto w = match_right_[v];
        if (w == kFree) {
          reached_free = true;
        } else if (layer_[w] == kFree) {
          layer_[w] = layer_[u] + 1;
          q.push(w);
        }
      }
    }
    return reached_free;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const auto w = match_right_[v];
      if (w == kFree || (layer_[w] == layer_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    layer_[u] = kFree;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> layer_;
};

// Left side: X points then diagonal copies of Y. Right side: Y points then
// diagonal copies of X. Diagonal copies match each other for free.
class AugmentedDiagrams {
 public:
  AugmentedDiagrams(std::vector<DiagramPoint> x, std::vector<DiagramPoint> y)
      : x_(std::move(x)), y_(std::move(y)) {}

  std::size_t side() const { return x_.size() + y_.size(); }

  std::vector<double> candidates() const {
    std::vector<double> c{0.0};
    c.reserve(1 + x_.size() * y_.size() + side());
    for (const auto& p : x_) {
      c.push_back(diagonal_cost(p));
      for (const auto& q : y_) c.push_back(linf_cost(p, q));
    }
    for (const auto& q : y_) c.push_back(diagonal_cost(q));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  BipartiteMatcher matcher(double delta) const {
    const auto a = x_.size();
    const auto b = y_.size();
    std::vector<std::vector<std::size_t>> adj(a + b);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        if (linf_cost(x_[i], y_[j]) <= delta) adj[i].push_back(j);
      }
      if (diagonal_cost(x_[i]) <= delta) adj[i].push_back(b + i);
    }
    for (std::size_t j = 0; j < b; ++j) {
      auto& row = adj[a + j];
      if (diagonal_cost(y_[j]) <= delta) row.push_back(j);
      for (std::size_t i = 0; i < a; ++i) row.push_back(b + i);
    }
    return BipartiteMatcher(std::move(adj));
  }

  bool feasible(double delta) const { return matcher(delta).run() == side(); }

  Matching realize(double delta) const {
    auto m = matcher(delta);
    m.run();
    const auto a = x_.size();
    const auto b = y_.size();
    Matching out;
    for (std::size_t u = 0; u < a + b; ++u) {
      const auto v = m.match_left()[u];
      MatchedPair pair;
      if (u < a && v < b) {
        pair = {x_[u], y_[v], linf_cost(x_[u], y_[v])};
      } else if (u < a) {
        pair = {x_[u], std::nullopt, diagonal_cost(x_[u])};
      } else if (v < b) {
        pair = {std::nullopt, y_[v], diagonal_cost(y_[v])};
      } else {
        continue;
      }
      out.cost = std::max(out.cost, pair.cost);
      out.pairs.push_back(pair);
    }
    return out;
  }

 private:
  std::vector<DiagramPoint> x_;
  std::vector<DiagramPoint> y_;
};

std::vector<double> essential_births(const PersistenceDiagram& d) {
  std::vector<double> births;
  for (const auto& p : d.essential_points()) births.insert(births.end(), p.multiplicity, p.birth);
  return births;  // already sorted
}

}  // namespace

double linf_cost(const DiagramPoint& p, const DiagramPoint& q) {
  return std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death));
}

double diagonal_cost(const DiagramPoint& p) { return (p.death - p.birth) / 2.0; }

BottleneckResult bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y,
                            bool include_essential) {
  if (x.dimension() != y.dimension()) {
    throw ValidationError("diagram dimensions differ: " + std::to_string(x.dimension()) + " vs " +
                          std::to_string(y.dimension()));
  }
  const AugmentedDiagrams augmented(x.expanded_finite(), y.expanded_finite());
  const auto candidates = augmented.candidates();
  // The largest candidate is always feasible: everything to the diagonal.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    if (augmented.feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  BottleneckResult result;
  result.distance = candidates[lo];
  result.matching = augmented.realize(result.distance);

  if (include_essential) {
    const auto bx = essential_births(x);
    const auto by = essential_births(y);
    if (bx.size() != by.size()) {
      result.distance = kInfinity;
      result.matching.cost = kInfinity;
      return result;
    }
    // Sorted order is optimal for a bottleneck matching on the line.
    for (std::size_t i = 0; i < bx.size(); ++i) {
      const double cost = std::abs(bx[i] - by[i]);
      result.matching.pairs.push_back({DiagramPoint{bx[i], kInfinity, 1}, DiagramPoint{by[i], kInfinity, 1}, cost});
      result.distance = std::max(result.distance, cost);
      result.matching.cost = std::max(result.matching.cost, cost);
    }
  }
  return result;
}

DistanceMatrix pairwise_matrix(std::span<const PersistenceDiagram> diagrams, int dimension,
                               std::vector<std::string> ids, bool include_essential, unsigned threads) {
  const auto n = diagrams.size();
  for (const auto& d : diagrams) {
    if (d.dimension() != dimension) {
      throw ValidationError("diagram of dimension " + std::to_string(d.dimension()) +
                            " in a dimension-" + std::to_string(dimension) + " collection");
    }
  }
  if (ids.empty()) {
    for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  }
  if (ids.size() != n) throw std::invalid_argument("one id per diagram required");

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) jobs.emplace_back(i, j);
  }
  std::vector<double> values(n * n, 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto k = next++; k < jobs.size(); k = next++) {
      const auto [i, j] = jobs[k];
      const double d = bottleneck(diagrams[i], diagrams[j], include_essential).distance;
      values[i * n + j] = values[j * n + i] = d;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return DistanceMatrix(std::move(ids), std::move(values));
}

}  // namespace evotopo
