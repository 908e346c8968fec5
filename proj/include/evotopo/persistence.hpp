#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "evotopo/types.hpp"

namespace evotopo {

// Sparse Z2 boundary matrix. Column j holds the sorted filtration positions
// of the codimension-1 faces of cell j.
struct BoundaryMatrix {
  using Column = std::vector<std::uint32_t>;

  std::vector<Column> columns;
  std::vector<int> dimensions;
  std::vector<double> births;

  std::size_t size() const noexcept { return columns.size(); }
};

// Throws ValidationError if a face is missing or appears after its coface.
BoundaryMatrix build_boundary_matrix(const Filtration& f);

struct ReduceOptions {
  // Process dimensions top-down and zero columns already known to be
  // positive. Produces the same pairing as the plain reduction.
  bool clearing = false;
};

struct PersistencePair {
  std::size_t birth;  // cell creating the class
  std::size_t death;  // cell whose reduced column has low() == birth

  bool operator==(const PersistencePair&) const = default;
};

struct Pairing {
  std::vector<PersistencePair> pairs;   // sorted by death cell
  std::vector<std::size_t> essential;  // ascending cell positions
};

struct Reduction {
  BoundaryMatrix reduced;
  Pairing pairing;
};

// Standard column reduction over Z2: a column absorbs the earlier column
// sharing its lowest row until every nonzero column has a distinct low.
Reduction reduce(BoundaryMatrix matrix, ReduceOptions options = {});

// One diagram per dimension 0..max_dim. Zero-persistence pairs are dropped
// here, not during reduction.
std::vector<PersistenceDiagram> extract_diagrams(const Pairing& pairing, const Filtration& f,
                                                 int max_dim);

// Filtration -> diagrams in dimensions 0..max_dim. A negative max_dim means
// the filtration's own top dimension.
std::vector<PersistenceDiagram> compute_persistence(const Filtration& f, int max_dim = -1,
                                                    ReduceOptions options = {});

// beta(t) = total multiplicity of points with birth <= t < death, with one
// step per distinct birth or finite death value.
BettiCurve betti_curve(const PersistenceDiagram& d);

}  // namespace evotopo
