#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evotopo/types.hpp"

namespace evotopo {

// max(|p.birth - q.birth|, |p.death - q.death|) for finite points.
double linf_cost(const DiagramPoint& p, const DiagramPoint& q);

// L-infinity distance from p to the nearest diagonal point.
double diagonal_cost(const DiagramPoint& p);

// One assignment of a bottleneck matching. An empty side means the point is
// matched to the diagonal.
struct MatchedPair {
  std::optional<DiagramPoint> x;
  std::optional<DiagramPoint> y;
  double cost = 0.0;

  bool operator==(const MatchedPair&) const = default;
};

struct Matching {
  std::vector<MatchedPair> pairs;
  double cost = 0.0;  // max over pairs, 0 when empty
};

struct BottleneckResult {
  double distance = 0.0;
  Matching matching;
};

// Exact bottleneck distance between diagrams of the same dimension.
//
// The value is always one of the pairwise or diagonal costs of the input,
// found by binary search over the sorted candidates with a Hopcroft–Karp
// perfect-matching test at each threshold. Essential points are ignored
// unless include_essential is set; then they match only each other, at the
// difference of their births, and unequal essential counts give +inf.
// Throws ValidationError on a dimension mismatch.
BottleneckResult bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y,
                            bool include_essential = false);

// Pairwise bottleneck distances, computed in parallel. ids default to
// "0", "1", ...; threads = 0 uses the hardware concurrency.
DistanceMatrix pairwise_matrix(std::span<const PersistenceDiagram> diagrams, int dimension,
                               std::vector<std::string> ids = {}, bool include_essential = false,
                               unsigned threads = 0);

}  // namespace evotopo
