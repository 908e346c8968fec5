#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

#include "evotopo/types.hpp"

namespace evotopo::detail {

// Hash/equality over vertex spans, for lookups keyed by a simplex's vertices.
// The spans must outlive the container.
struct VertexSpanHash {
  std::size_t operator()(std::span<const NodeId> vs) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (NodeId v : vs) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct VertexSpanEqual {
  bool operator()(std::span<const NodeId> a, std::span<const NodeId> b) const noexcept {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace evotopo::detail
