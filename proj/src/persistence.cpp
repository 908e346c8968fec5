#include "evotopo/persistence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "evotopo/errors.hpp"
#include "simplex_hash.hpp"

namespace evotopo {
namespace {

constexpr auto kNoColumn = std::numeric_limits<std::size_t>::max();

// col ^= other, both sorted.
void add_column(BoundaryMatrix::Column& col, const BoundaryMatrix::Column& other,
                BoundaryMatrix::Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                std::back_inserter(scratch));
  col.swap(scratch);
}

void reduce_column(std::size_t j, BoundaryMatrix& m, std::vector<std::size_t>& column_with_low,
                   BoundaryMatrix::Column& scratch) {
  auto& col = m.columns[j];
  while (!col.empty()) {
    const auto owner = column_with_low[col.back()];
    if (owner == kNoColumn) break;
    add_column(col, m.columns[owner], scratch);
  }
  if (!col.empty()) column_with_low[col.back()] = j;
}

}  // namespace

BoundaryMatrix build_boundary_matrix(const Filtration& f) {
  const auto cells = f.cells();
  std::unordered_map<std::span<const NodeId>, std::uint32_t, detail::VertexSpanHash,
                     detail::VertexSpanEqual>
      position;
  position.reserve(cells.size());

  BoundaryMatrix m;
  m.columns.resize(cells.size());
  m.dimensions.reserve(cells.size());
  m.births.reserve(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& s = cells[j].simplex;
    m.dimensions.push_back(s.dimension());
    m.births.push_back(cells[j].birth);
    auto& col = m.columns[j];
    if (s.dimension() > 0) {
      const auto verts = s.vertices();
      std::vector<NodeId> face(verts.size() - 1);
      for (std::size_t skip = 0; skip < verts.size(); ++skip) {
        std::copy(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(skip), face.begin());
        std::copy(verts.begin() + static_cast<std::ptrdiff_t>(skip) + 1, verts.end(),
                  face.begin() + static_cast<std::ptrdiff_t>(skip));
        auto it = position.find(std::span<const NodeId>(face));
        if (it == position.end()) {
          throw ValidationError("cell " + std::to_string(j) + " has a face that does not precede it");
        }
        col.push_back(it->second);
      }
      std::sort(col.begin(), col.end());
    }
    position.emplace(s.vertices(), static_cast<std::uint32_t>(j));
  }
  return m;
}

Reduction reduce(BoundaryMatrix m, ReduceOptions options) {
  const auto n = m.size();
  std::vector<std::size_t> column_with_low(n, kNoColumn);
  BoundaryMatrix::Column scratch;

  if (options.clearing) {
    int top = -1;
    for (int d : m.dimensions) top = std::max(top, d);
    std::vector<bool> cleared(n, false);
    for (int d = top; d >= 1; --d) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.dimensions[j] != d) continue;
        if (cleared[j]) {
          m.columns[j].clear();
          continue;
        }
        reduce_column(j, m, column_with_low, scratch);
        if (!m.columns[j].empty()) cleared[m.columns[j].back()] = true;
      }
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) reduce_column(j, m, column_with_low, scratch);
  }

  Pairing pairing;
  std::vector<bool> paired(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (m.columns[j].empty()) continue;
    const std::size_t i = m.columns[j].back();
    pairing.pairs.push_back({i, j});
    paired[i] = paired[j] = true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!paired[j]) pairing.essential.push_back(j);
  }
  return {std::move(m), std::move(pairing)};
}

std::vector<PersistenceDiagram> extract_diagrams(const Pairing& pairing, const Filtration& f,
                                                 int max_dim) {
  std::vector<std::vector<DiagramPoint>> points(static_cast<std::size_t>(std::max(max_dim + 1, 0)));
  auto add = [&](int dim, double birth, double death) {
    if (dim < 0 || dim > max_dim || birth == death) return;
    points[static_cast<std::size_t>(dim)].push_back({birth, death, 1});
  };
  for (const auto& [b, d] : pairing.pairs) {
    add(f[b].simplex.dimension(), f[b].birth, f[d].birth);
  }
  for (std::size_t e : pairing.essential) add(f[e].simplex.dimension(), f[e].birth, kInfinity);

  std::vector<PersistenceDiagram> out;
  out.reserve(points.size());
  for (std::size_t d = 0; d < points.size(); ++d) {
    out.emplace_back(static_cast<int>(d), std::move(points[d]));
  }
  return out;
}

std::vector<PersistenceDiagram> compute_persistence(const Filtration& f, int max_dim,
                                                    ReduceOptions options) {
  if (max_dim < 0) max_dim = std::max(f.max_dimension(), 0);
  auto reduction = reduce(build_boundary_matrix(f), options);
  return extract_diagrams(reduction.pairing, f, max_dim);
}

BettiCurve betti_curve(const PersistenceDiagram& d) {
  std::map<double, long long> delta;
  auto record = [&](const DiagramPoint& p) {
    delta[p.birth] += p.multiplicity;
    if (!p.essential()) delta[p.death] -= p.multiplicity;
  };
  for (const auto& p : d.finite_points()) record(p);
  for (const auto& p : d.essential_points()) record(p);

  BettiCurve curve;
  curve.dimension = d.dimension();
  long long running = 0;
  for (const auto& [t, change] : delta) {
    running += change;
    curve.steps.push_back({t, static_cast<std::uint64_t>(running)});
  }
  return curve;
}

}  // namespace evotopo
