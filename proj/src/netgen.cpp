#include "evotopo/netgen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "evotopo/errors.hpp"

namespace evotopo {
namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    // Reject the 2^64 mod bound lowest draws so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x < threshold);
    return x % bound;
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t key(const Edge& e) { return (static_cast<std::uint64_t>(e.u) << 32) | e.v; }

}  // namespace

EvolvingNetwork generate(const GrowthParams& p) {
  if (p.phases < 1) throw ValidationError("phases must be at least 1");
  if (!(p.attachment_bias >= 0.0 && p.attachment_bias <= 1.0)) {
    throw ValidationError("attachment_bias must lie in [0, 1]");
  }
  const std::size_t total_nodes = p.initial_nodes + (p.phases - 1) * p.nodes_per_phase;
  if (total_nodes > std::numeric_limits<NodeId>::max()) throw ValidationError("too many nodes");

  Draw draw(p.seed);
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> present;
  std::vector<NodeId> pool;  // node v appears degree(v) + 1 times
  std::vector<Snapshot> phases;
  std::size_t n = 0;

  auto pick = [&]() -> NodeId {
    if (draw.unit() < p.attachment_bias) return pool[draw.below(pool.size())];
    return static_cast<NodeId>(draw.below(n));
  };
  auto add = [&](const Edge& e) {
    edges.push_back(e);
    present.insert(key(e));
    pool.push_back(e.u);
    pool.push_back(e.v);
  };

  for (std::size_t k = 0; k < p.phases; ++k) {
    const std::size_t grow = k == 0 ? p.initial_nodes : p.nodes_per_phase;
    for (std::size_t i = 0; i < grow; ++i) pool.push_back(static_cast<NodeId>(n++));

    const std::size_t free_pairs = n * (n - (n > 0 ? 1 : 0)) / 2 - edges.size();
    if (p.edges_per_phase > free_pairs) {
      throw ValidationError("phase " + std::to_string(p.phase_offset + static_cast<int>(k)) + " requests " +
                            std::to_string(p.edges_per_phase) + " new edges but only " +
                            std::to_string(free_pairs) + " node pairs are free");
    }
    for (std::size_t added = 0; added < p.edges_per_phase; ++added) {
      bool done = false;
      for (int attempt = 0; attempt < 64 && !done; ++attempt) {
        const NodeId a = pick();
        const NodeId b = pick();
        if (a == b) continue;
        const Edge e = make_edge(a, b);
        if (present.count(key(e))) continue;
        add(e);
        done = true;
      }
      if (done) continue;
      // Dense graph: choose uniformly among the remaining free pairs.
      std::vector<Edge> free;
      for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
          if (!present.count(key({a, b}))) free.push_back({a, b});
        }
      }
      add(free[draw.below(free.size())]);
    }

    Snapshot snap;
    snap.nodes.resize(n);
    std::iota(snap.nodes.begin(), snap.nodes.end(), NodeId{0});
    snap.edges = edges;
    std::sort(snap.edges.begin(), snap.edges.end());
    phases.push_back(std::move(snap));
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v) labels.push_back("n" + std::to_string(v));
  return EvolvingNetwork(std::move(labels), std::move(phases), p.phase_offset);
}

}  // namespace evotopo
