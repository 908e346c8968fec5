#include "doctest.h"
#include "evotopo/bottleneck.hpp"
#include "evotopo/cluster.hpp"
#include "evotopo/complex_vectors.hpp"
#include "evotopo/complexes.hpp"
#include "evotopo/errors.hpp"
#include "evotopo/ingest.hpp"
#include "evotopo/netgen.hpp"
#include "evotopo/persistence.hpp"

using namespace evotopo;

TEST_CASE("generator is deterministic in the seed") {
  GrowthParams p;
  p.seed = 42;
  p.phases = 4;
  p.initial_nodes = 12;
  p.nodes_per_phase = 3;
  p.edges_per_phase = 9;
  p.attachment_bias = 0.7;
  const auto a = generate(p);
  CHECK(a == generate(p));
  p.seed = 43;
  CHECK_FALSE(a == generate(p));
}

TEST_CASE("generator produces the requested counts") {
  for (double bias : {0.0, 0.5, 1.0}) {
    GrowthParams p;
    p.seed = 3;
    p.phases = 5;
    p.initial_nodes = 20;
    p.nodes_per_phase = 4;
    p.edges_per_phase = 15;
    p.attachment_bias = bias;
    p.phase_offset = 0;
    const auto net = generate(p);
    REQUIRE(net.phase_count() == 5);
    CHECK(net.phase_value(0) == 0);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(net.phases()[k].nodes.size() == 20 + 4 * k);
      CHECK(net.phases()[k].edges.size() == 15 * (k + 1));
    }
    CHECK(net.node_labels().front() == "n0");
    CHECK(net.node_labels().back() == "n35");
    CHECK_FALSE(validate_monotone(net).has_value());
  }
}

TEST_CASE("generator fills a complete graph exactly") {
  GrowthParams p;
  p.initial_nodes = 5;
  p.edges_per_phase = 10;
  p.attachment_bias = 1.0;
  const auto net = generate(p);
  CHECK(net.phases()[0].edges.size() == 10);
}

TEST_CASE("generator rejects infeasible parameters") {
  GrowthParams p;
  p.initial_nodes = 4;
  p.edges_per_phase = 7;
  CHECK_THROWS_AS(generate(p), ValidationError);
  p.edges_per_phase = 1;
  p.phases = 0;
  CHECK_THROWS_AS(generate(p), ValidationError);
  p.phases = 1;
  p.attachment_bias = 1.5;
  CHECK_THROWS_AS(generate(p), ValidationError);
  p.attachment_bias = -0.1;
  CHECK_THROWS_AS(generate(p), ValidationError);
}

TEST_CASE("generated networks run through the whole pipeline") {
  std::vector<PersistenceDiagram> h1;
  std::vector<ComplexVector> vectors;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GrowthParams p;
    p.seed = seed;
    p.phases = 3;
    p.initial_nodes = 15;
    p.nodes_per_phase = 5;
    p.edges_per_phase = 12;
    p.attachment_bias = 0.25 * static_cast<double>(seed % 5);
    const auto f = build_clique_filtration(generate(p), 2);
    REQUIRE_FALSE(validate_filtration(f).has_value());
    const auto dgms = compute_persistence(f, 2);
    REQUIRE(dgms.size() == 3);
    for (const auto& d : dgms) {
      for (const auto& pt : d.finite_points()) {
        CHECK(pt.birth < pt.death);
        CHECK(pt.birth >= 1);
        CHECK(pt.death <= 3);
      }
    }
    h1.push_back(dgms[1]);
    vectors.push_back(vectorize(dgms[1], 4));
  }
  const auto m = pairwise_matrix(h1, 1);
  CHECK(m.size() == 8);
  const auto dg = single_linkage(m);
  CHECK(dg.merges.size() == 7);
  CHECK(cut(dg, kInfinity) == std::vector<std::size_t>(8, 0));
  CHECK(prefilter(vectors, vectors[0], 3).size() == 3);
}
