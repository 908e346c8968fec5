#pragma once

#include <cstddef>
#include <vector>

#include "evotopo/types.hpp"

namespace evotopo {

// Single-linkage agglomeration: n-1 merges, each joining the two clusters
// with the smallest minimum cross distance. Built from a minimum spanning
// tree (Prim), whose edges sorted by weight are exactly the merge heights.
// Ties go to the edge with the smaller item indices. Each merge lists the
// smaller cluster id first.
Dendrogram single_linkage(const DistanceMatrix& m);

// Flat clustering after applying every merge with height <= `height`.
// Returns one label per item; labels are numbered 0, 1, ... in order of
// each cluster's smallest item.
std::vector<std::size_t> cut(const Dendrogram& dendrogram, double height);

}  // namespace evotopo
