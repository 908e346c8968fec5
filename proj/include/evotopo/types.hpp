#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evotopo {

using NodeId = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Undirected edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Orders the endpoints; throws std::invalid_argument on a self-loop.
Edge make_edge(NodeId a, NodeId b);

// One phase of an evolving network: the nodes alive and the edges among them.
struct Snapshot {
  std::vector<NodeId> nodes;  // sorted, unique
  std::vector<Edge> edges;    // sorted, unique

  bool operator==(const Snapshot&) const = default;
};

// Labeled undirected graph observed at consecutive integer phases.
//
// Construction normalizes every snapshot (sorts, removes duplicates, adds
// edge endpoints to the node set) and rejects out-of-range indices and
// self-loops. Monotone growth is *not* enforced here; see validate_monotone.
class EvolvingNetwork {
 public:
  EvolvingNetwork() = default;
  EvolvingNetwork(std::vector<std::string> node_labels,
                  std::vector<Snapshot> phases, int phase_offset = 1);

  const std::vector<std::string>& node_labels() const noexcept { return labels_; }
  const std::vector<Snapshot>& phases() const noexcept { return phases_; }
  int phase_offset() const noexcept { return offset_; }

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t phase_count() const noexcept { return phases_.size(); }

  // Filtration value of the phase stored at position `index`.
  double phase_value(std::size_t index) const noexcept {
    return static_cast<double>(offset_) + static_cast<double>(index);
  }

  bool operator==(const EvolvingNetwork&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Snapshot> phases_;
  int offset_ = 1;
};

// A nonempty, strictly ascending vertex set.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<NodeId> vertices);
  Simplex(std::initializer_list<NodeId> vertices)
      : Simplex(std::vector<NodeId>(vertices)) {}

  std::span<const NodeId> vertices() const noexcept { return vertices_; }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  // Codimension-1 faces, in the order obtained by dropping vertex 0, 1, ...
  std::vector<Simplex> facets() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<NodeId> vertices_;
};

struct Cell {
  Simplex simplex;
  double birth = 0.0;

  bool operator==(const Cell&) const = default;
};

// Canonical cell order: birth, then dimension, then vertex sequence.
bool canonical_less(const Cell& a, const Cell& b);

// Ordered sequence of cells; sublevel sets of birth give the nested complexes.
class Filtration {
 public:
  Filtration() = default;
  explicit Filtration(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  // Sorts the cells into canonical order first.
  static Filtration canonical(std::vector<Cell> cells);

  std::span<const Cell> cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }

  // -1 for an empty filtration.
  int max_dimension() const noexcept;

  bool operator==(const Filtration&) const = default;

 private:
  std::vector<Cell> cells_;
};

enum class FiltrationViolationKind {
  kDecreasingBirth,
  kFaceAfterCoface,
  kMissingFace,
  kFaceBornLater,
  kDuplicateSimplex,
};

struct FiltrationViolation {
  FiltrationViolationKind kind;
  std::size_t position;  // index of the offending cell
  std::string message;
};

// Returns the first violated invariant, scanning cells in order.
std::optional<FiltrationViolation> validate_filtration(const Filtration& f);

struct DiagramPoint {
  double birth = 0.0;
  double death = kInfinity;
  std::uint32_t multiplicity = 1;

  bool essential() const noexcept { return death == kInfinity; }
  bool operator==(const DiagramPoint&) const = default;
};

// Multiset of (birth, death) pairs in one homology degree. Points with
// death = +inf live in essential_points(); zero-lifetime pairs are dropped
// and equal points merge into one entry with summed multiplicity.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  explicit PersistenceDiagram(int dimension, std::vector<DiagramPoint> points = {});

  int dimension() const noexcept { return dimension_; }
  std::span<const DiagramPoint> finite_points() const noexcept { return finite_; }
  std::span<const DiagramPoint> essential_points() const noexcept { return essential_; }

  // Point counts with multiplicity.
  std::size_t finite_count() const noexcept;
  std::size_t essential_count() const noexcept;

  // Finite points repeated by multiplicity, each with multiplicity 1.
  std::vector<DiagramPoint> expanded_finite() const;

  bool operator==(const PersistenceDiagram&) const = default;

 private:
  int dimension_ = 0;
  std::vector<DiagramPoint> finite_;
  std::vector<DiagramPoint> essential_;
};

// Piecewise-constant Betti number: value of step k holds on
// [steps[k].threshold, steps[k+1].threshold); zero before the first step.
struct BettiCurve {
  struct Step {
    double threshold;
    std::uint64_t value;
    bool operator==(const Step&) const = default;
  };

  int dimension = 0;
  std::vector<Step> steps;

  std::uint64_t value_at(double t) const;
  bool operator==(const BettiCurve&) const = default;
};

struct ComplexVector {
  int dimension = 0;
  std::vector<std::complex<double>> coefficients;

  std::size_t k() const noexcept { return coefficients.size(); }
  bool operator==(const ComplexVector&) const = default;
};

// Symmetric non-negative matrix with zero diagonal; checked on construction.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<std::string> ids, std::vector<double> row_major);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * ids_.size() + j]; }
  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::vector<std::string> ids_;
  std::vector<double> values_;
};

// Merge tree over n items. Leaves are clusters 0..n-1; merge m creates
// cluster n+m. Heights are non-decreasing.
struct Dendrogram {
  struct Merge {
    std::size_t a;
    std::size_t b;
    double height;
    bool operator==(const Merge&) const = default;
  };

  std::vector<std::string> items;
  std::vector<Merge> merges;

  bool operator==(const Dendrogram&) const = default;
};

}  // namespace evotopo
