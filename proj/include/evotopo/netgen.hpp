#pragma once

#include <cstdint>

#include "evotopo/types.hpp"

namespace evotopo {

struct GrowthParams {
  std::uint64_t seed = 1;
  std::size_t phases = 1;
  std::size_t initial_nodes = 10;
  std::size_t nodes_per_phase = 0;
  std::size_t edges_per_phase = 10;
  // 0 picks endpoints uniformly, 1 proportionally to (degree + 1).
  double attachment_bias = 0.0;
  int phase_offset = 1;
};

// Monotone evolving network. Phase 1 has initial_nodes nodes; each later
// phase appends nodes_per_phase nodes. Every phase adds exactly
// edges_per_phase new edges. Nodes are labeled "n0", "n1", ...
//
// Randomness comes from std::mt19937_64 seeded with `seed`, reduced to
// ranges by rejection sampling, so output is identical across platforms.
// Throws ValidationError when params are out of range or a phase has fewer
// free node pairs than requested edges.
EvolvingNetwork generate(const GrowthParams& params);

}  // namespace evotopo
