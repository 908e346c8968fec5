#include <random>
#include <set>

#include "doctest.h"
#include "evotopo/complexes.hpp"
#include "evotopo/errors.hpp"
#include "evotopo/persistence.hpp"
#include "oracles.hpp"

using namespace evotopo;

namespace {

Filtration filled_triangle_listed() {
  return Filtration({{Simplex{0}, 1},
                     {Simplex{1}, 1},
                     {Simplex{2}, 1},
                     {Simplex{0, 1}, 1},
                     {Simplex{1, 2}, 1},
                     {Simplex{0, 2}, 1},
                     {Simplex{0, 1, 2}, 1}});
}

Filtration four_cycle() {
  return Filtration::canonical({{Simplex{0}, 1},
                                {Simplex{1}, 1},
                                {Simplex{2}, 1},
                                {Simplex{3}, 1},
                                {Simplex{0, 1}, 1},
                                {Simplex{1, 2}, 1},
                                {Simplex{2, 3}, 1},
                                {Simplex{0, 3}, 1}});
}

}  // namespace

TEST_CASE("boundary matrix columns") {
  auto m = build_boundary_matrix(Filtration({{Simplex{0}, 0}, {Simplex{1}, 0}, {Simplex{0, 1}, 0}}));
  REQUIRE(m.size() == 3);
  CHECK(m.columns[0].empty());
  CHECK(m.columns[1].empty());
  CHECK(m.columns[2] == BoundaryMatrix::Column{0, 1});

  m = build_boundary_matrix(filled_triangle_listed());
  CHECK(m.columns[6] == BoundaryMatrix::Column{3, 4, 5});
  CHECK(m.dimensions[6] == 2);

  CHECK(build_boundary_matrix(Filtration{}).size() == 0);
  CHECK_THROWS_AS(build_boundary_matrix(Filtration({{Simplex{0, 1}, 0}, {Simplex{0}, 0}})), ValidationError);
}

TEST_CASE("boundary matrix invariants on random filtrations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_filtration(rng, 30, 3);
    const auto m = build_boundary_matrix(f);
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto& col = m.columns[j];
      CHECK(col.size() == (m.dimensions[j] == 0 ? 0u : static_cast<std::size_t>(m.dimensions[j]) + 1));
      for (auto i : col) CHECK(i < j);
    }
  }
}

TEST_CASE("reduce pairs the filled triangle") {
  const auto r = reduce(build_boundary_matrix(filled_triangle_listed()));
  const std::vector<PersistencePair> expected{{1, 3}, {2, 4}, {5, 6}};
  CHECK(r.pairing.pairs == expected);
  CHECK(r.pairing.essential == std::vector<std::size_t>{0});
}

TEST_CASE("reduce on the 4-cycle and a single vertex") {
  const auto f = four_cycle();
  const auto r = reduce(build_boundary_matrix(f));
  CHECK(r.pairing.pairs.size() == 3);
  for (const auto& [b, d] : r.pairing.pairs) {
    CHECK(f[b].simplex.dimension() == 0);
    CHECK(f[d].simplex.dimension() == 1);
  }
  REQUIRE(r.pairing.essential.size() == 2);
  CHECK(f[r.pairing.essential[0]].simplex.dimension() == 0);
  CHECK(f[r.pairing.essential[1]].simplex.dimension() == 1);

  const auto single = reduce(build_boundary_matrix(Filtration({{Simplex{0}, 1}})));
  CHECK(single.pairing.pairs.empty());
  CHECK(single.pairing.essential == std::vector<std::size_t>{0});
}

TEST_CASE("diagrams of small evolving complexes") {
  const EvolvingNetwork triangle({"0", "1", "2"},
                                 {Snapshot{{}, {{0, 1}, {1, 2}}}, Snapshot{{}, {{0, 1}, {1, 2}, {0, 2}}}});
  auto dgms = compute_persistence(build_clique_filtration(triangle, 2), 2);
  REQUIRE(dgms.size() == 3);
  CHECK(dgms[0] == PersistenceDiagram(0, {{1, kInfinity, 1}}));
  CHECK(dgms[1] == PersistenceDiagram(1));
  CHECK(dgms[2] == PersistenceDiagram(2));

  dgms = compute_persistence(four_cycle(), 1);
  CHECK(dgms[1] == PersistenceDiagram(1, {{1, kInfinity, 1}}));

  const Filtration joined({{Simplex{0}, 1}, {Simplex{1}, 1}, {Simplex{0, 1}, 2}});
  dgms = compute_persistence(joined);
  REQUIRE(dgms.size() == 2);
  CHECK(dgms[0] == PersistenceDiagram(0, {{1, 2, 1}, {1, kInfinity, 1}}));
}

TEST_CASE("betti curve examples") {
  auto c = betti_curve(PersistenceDiagram(1, {{1, kInfinity, 1}}));
  CHECK(c.value_at(0.999) == 0);
  CHECK(c.value_at(1) == 1);
  CHECK(c.value_at(1e9) == 1);

  c = betti_curve(PersistenceDiagram(1));
  CHECK(c.steps.empty());
  CHECK(c.value_at(3) == 0);

  c = betti_curve(PersistenceDiagram(1, {{1, 3, 1}, {2, 4, 1}, {3, 4, 1}}));
  const std::vector<BettiCurve::Step> expected{{1, 1}, {2, 2}, {3, 2}, {4, 0}};
  CHECK(c.steps == expected);
  CHECK(c.dimension == 1);
}

TEST_CASE("betti curve equals the interval-cover count") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<DiagramPoint> pts;
    const int n = static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      const double b = rng() % 6;
      const double d = (rng() % 4 == 0) ? kInfinity : b + 1 + rng() % 4;
      pts.push_back({b, d, 1 + static_cast<std::uint32_t>(rng() % 3)});
    }
    const PersistenceDiagram dgm(0, pts);
    const auto curve = betti_curve(dgm);
    for (double t = -1; t <= 12; t += 0.5) {
      std::uint64_t count = 0;
      for (const auto& p : pts) {
        if (p.birth <= t && t < p.death && p.birth != p.death) count += p.multiplicity;
      }
      CHECK(curve.value_at(t) == count);
    }
  }
}

TEST_CASE("reduction matches dense GF(2) rank-nullity on random filtrations") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int max_dim = static_cast<int>(rng() % 3);
    const auto f = oracle::random_filtration(rng, 30, max_dim);
    REQUIRE_FALSE(validate_filtration(f).has_value());
    for (bool clearing : {false, true}) {
      const auto dgms = compute_persistence(f, max_dim, {clearing});
      for (int d = 0; d <= max_dim; ++d) {
        const auto curve = betti_curve(dgms[static_cast<std::size_t>(d)]);
        for (double t : oracle::thresholds(f)) {
          CHECK(curve.value_at(t) == oracle::betti_at(f, d, t));
        }
      }
    }
  }
}

TEST_CASE("reduced matrix has injective lows and a dimension-respecting partial matching") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_filtration(rng, 30, 2);
    const auto r = reduce(build_boundary_matrix(f));
    std::set<std::uint32_t> lows;
    for (const auto& col : r.reduced.columns) {
      if (!col.empty()) CHECK(lows.insert(col.back()).second);
    }
    std::set<std::size_t> used;
    for (const auto& [b, d] : r.pairing.pairs) {
      CHECK(used.insert(b).second);
      CHECK(used.insert(d).second);
      CHECK(f[d].simplex.dimension() == f[b].simplex.dimension() + 1);
    }
    for (auto e : r.pairing.essential) CHECK(used.insert(e).second);
    CHECK(used.size() == f.size());
  }
}

TEST_CASE("clearing gives the same pairing as the plain reduction") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_filtration(rng, 30, 3);
    const auto plain = reduce(build_boundary_matrix(f));
    const auto cleared = reduce(build_boundary_matrix(f), {true});
    CHECK(plain.pairing.pairs == cleared.pairing.pairs);
    CHECK(plain.pairing.essential == cleared.pairing.essential);
  }
}

TEST_CASE("diagrams are invariant under reordering cells with equal birth") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_filtration(rng, 30, 2);
    std::vector<Cell> cells(f.cells().begin(), f.cells().end());
    std::shuffle(cells.begin(), cells.end(), rng);
    std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
      return a.birth != b.birth ? a.birth < b.birth : a.simplex.dimension() < b.simplex.dimension();
    });
    const Filtration g(std::move(cells));
    REQUIRE_FALSE(validate_filtration(g).has_value());
    CHECK(compute_persistence(f, 2) == compute_persistence(g, 2));
  }
}
