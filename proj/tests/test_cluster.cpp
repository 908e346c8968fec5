#include <random>

#include "doctest.h"
#include "evotopo/cluster.hpp"
#include "oracles.hpp"

using namespace evotopo;

namespace {

DistanceMatrix abc() { return DistanceMatrix({"A", "B", "C"}, {0, 0, 1, 0, 0, 1, 1, 1, 0}); }

// Naive O(n^3) agglomeration; returns merge heights and the partition
// (as smallest-item-first labels) obtained after each merge.
struct NaiveResult {
  std::vector<double> heights;
  std::vector<std::vector<std::size_t>> partitions;
};

std::vector<std::size_t> relabel(const std::vector<std::size_t>& owner) {
  std::vector<std::size_t> map(owner.size(), SIZE_MAX), out(owner.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (map[owner[i]] == SIZE_MAX) map[owner[i]] = next++;
    out[i] = map[owner[i]];
  }
  return out;
}

NaiveResult naive_single_linkage(const std::vector<std::vector<double>>& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < n; ++i) owner[i] = i;
  NaiveResult r;
  for (std::size_t step = 1; step < n; ++step) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t ca = 0, cb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (owner[i] != owner[j] && d[i][j] < best) {
          best = d[i][j];
          ca = owner[i];
          cb = owner[j];
        }
      }
    }
    for (auto& o : owner) {
      if (o == cb) o = ca;
    }
    r.heights.push_back(best);
    r.partitions.push_back(relabel(owner));
  }
  return r;
}

std::vector<std::vector<double>> random_metric(std::mt19937& rng, std::size_t n, bool integer) {
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0));
  std::uniform_real_distribution<double> u(0.1, 10);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = integer ? static_cast<double>(rng() % 4) : u(rng);
  }
  return d;
}

DistanceMatrix to_matrix(const std::vector<std::vector<double>>& d) {
  std::vector<std::string> ids;
  std::vector<double> flat;
  for (std::size_t i = 0; i < d.size(); ++i) {
    ids.push_back("x" + std::to_string(i));
    flat.insert(flat.end(), d[i].begin(), d[i].end());
  }
  return DistanceMatrix(ids, flat);
}

}  // namespace

TEST_CASE("single linkage on the running example") {
  const auto dg = single_linkage(abc());
  CHECK(dg.items == std::vector<std::string>{"A", "B", "C"});
  REQUIRE(dg.merges.size() == 2);
  CHECK(dg.merges[0] == Dendrogram::Merge{0, 1, 0});
  CHECK(dg.merges[1] == Dendrogram::Merge{2, 3, 1});

  CHECK(cut(dg, 0.5) == std::vector<std::size_t>{0, 0, 1});
  CHECK(cut(dg, 0) == std::vector<std::size_t>{0, 0, 1});
  CHECK(cut(dg, 2) == std::vector<std::size_t>{0, 0, 0});
  CHECK(cut(dg, 1) == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS_AS(cut(dg, -1), std::invalid_argument);
}

TEST_CASE("single linkage on trivial inputs") {
  CHECK(single_linkage(DistanceMatrix()).merges.empty());
  const auto one = single_linkage(DistanceMatrix({"a"}, {0}));
  CHECK(one.merges.empty());
  CHECK(cut(one, 0) == std::vector<std::size_t>{0});
}

TEST_CASE("merge heights equal the sorted MST weights") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_metric(rng, 1 + rng() % 12, trial % 2 == 0);
    const auto dg = single_linkage(to_matrix(d));
    std::vector<double> heights;
    for (const auto& m : dg.merges) heights.push_back(m.height);
    CHECK(heights == oracle::mst_weights(d));
  }
}

TEST_CASE("merges form a valid tree with non-decreasing heights") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const auto dg = single_linkage(to_matrix(random_metric(rng, n, true)));
    REQUIRE(dg.merges.size() == n - 1);
    std::vector<bool> used(2 * n - 1, false);
    for (std::size_t m = 0; m < dg.merges.size(); ++m) {
      const auto& mg = dg.merges[m];
      CHECK(mg.a < mg.b);
      CHECK(mg.b < n + m);
      CHECK_FALSE(used[mg.a]);
      CHECK_FALSE(used[mg.b]);
      used[mg.a] = used[mg.b] = true;
      if (m > 0) CHECK(dg.merges[m - 1].height <= mg.height);
    }
  }
}

TEST_CASE("cuts agree with naive agglomeration at distinct heights") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const auto d = random_metric(rng, 2 + rng() % 9, false);
    const auto naive = naive_single_linkage(d);
    const auto dg = single_linkage(to_matrix(d));
    for (std::size_t m = 0; m < naive.heights.size(); ++m) {
      // Continuous weights: heights are distinct with probability 1.
      CHECK(cut(dg, naive.heights[m]) == naive.partitions[m]);
    }
  }
}

TEST_CASE("cut partitions are connected components of the threshold graph") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto d = random_metric(rng, n, true);
    const auto dg = single_linkage(to_matrix(d));
    for (double h : {0.0, 0.5, 1.0, 2.0, 3.0}) {
      // Flood fill over edges with d <= h.
      std::vector<std::size_t> owner(n, SIZE_MAX);
      for (std::size_t s = 0; s < n; ++s) {
        if (owner[s] != SIZE_MAX) continue;
        std::vector<std::size_t> stack{s};
        owner[s] = s;
        while (!stack.empty()) {
          const auto v = stack.back();
          stack.pop_back();
          for (std::size_t w = 0; w < n; ++w) {
            if (owner[w] == SIZE_MAX && d[v][w] <= h) {
              owner[w] = s;
              stack.push_back(w);
            }
          }
        }
      }
      CHECK(cut(dg, h) == relabel(owner));
    }
  }
}
