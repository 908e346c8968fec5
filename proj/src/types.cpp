#include "evotopo/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "simplex_hash.hpp"

namespace evotopo {

Edge make_edge(NodeId a, NodeId b) {
  if (a == b) throw std::invalid_argument("self-loop on node " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

EvolvingNetwork::EvolvingNetwork(std::vector<std::string> node_labels,
                                 std::vector<Snapshot> phases, int phase_offset)
    : labels_(std::move(node_labels)), phases_(std::move(phases)), offset_(phase_offset) {
  const auto n = labels_.size();
  for (auto& snap : phases_) {
    for (auto& e : snap.edges) {
      e = make_edge(e.u, e.v);
      if (e.v >= n) throw std::invalid_argument("edge references unknown node " + std::to_string(e.v));
      snap.nodes.push_back(e.u);
      snap.nodes.push_back(e.v);
    }
    std::sort(snap.nodes.begin(), snap.nodes.end());
    snap.nodes.erase(std::unique(snap.nodes.begin(), snap.nodes.end()), snap.nodes.end());
    if (!snap.nodes.empty() && snap.nodes.back() >= n) {
      throw std::invalid_argument("snapshot references unknown node " + std::to_string(snap.nodes.back()));
    }
    std::sort(snap.edges.begin(), snap.edges.end());
    snap.edges.erase(std::unique(snap.edges.begin(), snap.edges.end()), snap.edges.end());
  }
}

Simplex::Simplex(std::vector<NodeId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex must have at least one vertex");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i - 1] >= vertices_[i]) {
      throw std::invalid_argument("simplex vertices must be strictly ascending");
    }
  }
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<NodeId> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i != skip) face.push_back(vertices_[i]);
    }
    out.emplace_back(std::move(face));
  }
  return out;
}

bool canonical_less(const Cell& a, const Cell& b) {
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.simplex.dimension() != b.simplex.dimension()) {
    return a.simplex.dimension() < b.simplex.dimension();
  }
  return a.simplex < b.simplex;
}

Filtration Filtration::canonical(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end(), canonical_less);
  return Filtration(std::move(cells));
}

int Filtration::max_dimension() const noexcept {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, c.simplex.dimension());
  return d;
}

std::optional<FiltrationViolation> validate_filtration(const Filtration& f) {
  const auto cells = f.cells();
  std::unordered_map<std::span<const NodeId>, std::size_t, detail::VertexSpanHash,
                     detail::VertexSpanEqual>
      first_position;
  first_position.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    first_position.try_emplace(cells[i].simplex.vertices(), i);
  }

  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& cell = cells[j];
    if (j > 0 && cell.birth < cells[j - 1].birth) {
      return FiltrationViolation{FiltrationViolationKind::kDecreasingBirth, j,
                                 "birth values decrease along the order"};
    }
    if (first_position.at(cell.simplex.vertices()) != j) {
      return FiltrationViolation{FiltrationViolationKind::kDuplicateSimplex, j,
                                 "duplicate simplex"};
    }
    for (const auto& face : cell.simplex.facets()) {
      auto it = first_position.find(face.vertices());
      if (it == first_position.end()) {
        return FiltrationViolation{FiltrationViolationKind::kMissingFace, j,
                                   "a face is missing from the filtration"};
      }
      if (it->second > j) {
        return FiltrationViolation{FiltrationViolationKind::kFaceAfterCoface, j,
                                   "face appears after its coface"};
      }
    }
  }
  return std::nullopt;
}

PersistenceDiagram::PersistenceDiagram(int dimension, std::vector<DiagramPoint> points)
    : dimension_(dimension) {
  if (dimension < 0) throw std::invalid_argument("diagram dimension must be non-negative");
  for (const auto& p : points) {
    if (std::isnan(p.birth) || std::isnan(p.death) || std::isinf(p.birth)) {
      throw std::invalid_argument("diagram point has a non-finite birth or NaN death");
    }
    if (p.multiplicity == 0) throw std::invalid_argument("multiplicity must be positive");
    if (p.death < p.birth) throw std::invalid_argument("diagram point dies before it is born");
    if (p.death == p.birth) continue;
    (p.essential() ? essential_ : finite_).push_back(p);
  }
  auto merge = [](std::vector<DiagramPoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
      return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
    });
    std::vector<DiagramPoint> merged;
    for (const auto& p : pts) {
      if (!merged.empty() && merged.back().birth == p.birth && merged.back().death == p.death) {
        merged.back().multiplicity += p.multiplicity;
      } else {
        merged.push_back(p);
      }
    }
    pts = std::move(merged);
  };
  merge(finite_);
  merge(essential_);
}

std::size_t PersistenceDiagram::finite_count() const noexcept {
  std::size_t n = 0;
  for (const auto& p : finite_) n += p.multiplicity;
  return n;
}

std::size_t PersistenceDiagram::essential_count() const noexcept {
  std::size_t n = 0;
  for (const auto& p : essential_) n += p.multiplicity;
  return n;
}

std::vector<DiagramPoint> PersistenceDiagram::expanded_finite() const {
  std::vector<DiagramPoint> out;
  out.reserve(finite_count());
  for (const auto& p : finite_) {
    for (std::uint32_t r = 0; r < p.multiplicity; ++r) out.push_back({p.birth, p.death, 1});
  }
  return out;
}

std::uint64_t BettiCurve::value_at(double t) const {
  auto it = std::upper_bound(steps.begin(), steps.end(), t,
                             [](double x, const Step& s) { return x < s.threshold; });
  if (it == steps.begin()) return 0;
  return std::prev(it)->value;
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> ids, std::vector<double> row_major)
    : ids_(std::move(ids)), values_(std::move(row_major)) {
  const auto n = ids_.size();
  if (values_.size() != n * n) throw std::invalid_argument("distance matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (values_[i * n + i] != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = values_[i * n + j];
      if (std::isnan(d) || d < 0.0) throw std::invalid_argument("distances must be non-negative");
      if (d != values_[j * n + i]) throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
}

}  // namespace evotopo
