#include <random>

#include "doctest.h"
#include "evotopo/complex_vectors.hpp"
#include "evotopo/errors.hpp"
#include "oracles.hpp"

using namespace evotopo;
using cd = std::complex<double>;

namespace {

const PersistenceDiagram kA(1, {{1, 3, 1}, {2, 4, 1}, {3, 4, 1}});
const PersistenceDiagram kC(1, {{1, 3, 1}, {2, 4, 2}});

bool close(cd a, cd b, double rel = 1e-9) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

// Monic polynomial coefficients from e_m: c[m] = (-1)^m e_m, c[0] = 1.
cd evaluate(const Coefficients& e, cd t) {
  cd value = 1.0;
  for (std::size_t m = 0; m < e.size(); ++m) value = value * t + ((m % 2 == 0) ? -e[m] : e[m]);
  return value;
}

}  // namespace

TEST_CASE("coefficients of the running example") {
  const auto ea = diagram_to_polynomial(kA);
  const auto expected_a = oracle::elementary_symmetric({{1, 3}, {2, 4}, {3, 4}});
  REQUIRE(ea.size() == 3);
  for (std::size_t m = 0; m < 3; ++m) CHECK(close(ea[m], expected_a[m]));

  const auto ec = diagram_to_polynomial(kC);
  REQUIRE(ec.size() == 3);
  CHECK(close(ec[0], {5, 11}));
  CHECK(close(ec[1], {-32, 36}));
  CHECK(close(ec[2], {-60, -20}));

  CHECK(diagram_to_polynomial(PersistenceDiagram(1)).empty());
  CHECK(diagram_to_polynomial(PersistenceDiagram(0, {{0, kInfinity, 1}})).empty());
}

TEST_CASE("truncate pads and cuts") {
  const auto ea = diagram_to_polynomial(kA);
  const auto v2 = truncate(ea, 2, 1);
  CHECK(v2.k() == 2);
  CHECK(v2.coefficients[0] == ea[0]);
  CHECK(v2.coefficients[1] == ea[1]);
  CHECK(truncate(Coefficients{}, 3).coefficients == Coefficients(3, 0.0));
  CHECK(truncate(ea, 3).coefficients == ea);
  CHECK_THROWS_AS(truncate(ea, 0), std::invalid_argument);
}

TEST_CASE("vector distance") {
  const auto va = vectorize(kA, 3);
  const auto vc = vectorize(kC, 3);
  CHECK(vector_distance(va, vectorize(PersistenceDiagram(1, {{3, 4, 1}, {1, 3, 1}, {2, 4, 1}}), 3)) == 0);
  CHECK(vector_distance(vc, vc) == 0);

  const auto oa = oracle::elementary_symmetric({{1, 3}, {2, 4}, {3, 4}});
  const auto oc = oracle::elementary_symmetric({{1, 3}, {2, 4}, {2, 4}});
  double sum = 0;
  for (std::size_t m = 0; m < 3; ++m) sum += std::norm(oa[m] - oc[m]);
  CHECK(vector_distance(va, vc) == doctest::Approx(std::sqrt(sum)).epsilon(1e-12));
  CHECK(vector_distance(va, vc) > 0);

  // Shorter vectors are zero-padded.
  CHECK(vector_distance(vectorize(kA, 1), vectorize(kA, 3)) == doctest::Approx(std::hypot(std::abs(oa[1]), std::abs(oa[2]))));
  CHECK_THROWS_AS(vector_distance(vectorize(kA, 2), vectorize(PersistenceDiagram(0), 2)), ValidationError);
}

TEST_CASE("coefficients are symmetric in the points and respect multiplicity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DiagramPoint> pts;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      const double b = rng() % 10;
      pts.push_back({b, b + 1 + rng() % 5, 1 + static_cast<std::uint32_t>(rng() % 2)});
    }
    const PersistenceDiagram d(0, pts);
    const auto e = diagram_to_polynomial(d);
    std::vector<cd> roots;
    for (const auto& p : d.expanded_finite()) roots.emplace_back(p.birth, p.death);
    std::shuffle(roots.begin(), roots.end(), rng);
    const auto expected = oracle::elementary_symmetric(roots);
    REQUIRE(e.size() == expected.size());
    for (std::size_t m = 0; m < e.size(); ++m) CHECK(close(e[m], expected[m]));
    CHECK(diagram_to_polynomial(PersistenceDiagram(0, d.expanded_finite())) == e);
  }
}

TEST_CASE("reconstructed polynomial vanishes at every embedded point") {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> coord(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DiagramPoint> pts;
    const int n = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < n; ++i) {
      double a = coord(rng), b = coord(rng);
      if (a > b) std::swap(a, b);
      if (a == b) continue;
      pts.push_back({a, b, 1});
    }
    const PersistenceDiagram d(0, pts);
    const auto e = diagram_to_polynomial(d);
    // Scale: the largest term of the expansion at z.
    for (const auto& p : d.finite_points()) {
      const cd z(p.birth, p.death);
      double scale = std::pow(std::abs(z), static_cast<double>(e.size()));
      for (std::size_t m = 0; m < e.size(); ++m) {
        scale = std::max(scale, std::abs(e[m]) * std::pow(std::abs(z), static_cast<double>(e.size() - m - 1)));
      }
      CHECK(std::abs(evaluate(e, z)) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("vector distance is a metric on random vectors") {
  std::mt19937 rng(9);
  std::normal_distribution<double> g;
  auto random_vector = [&] {
    ComplexVector v;
    v.dimension = 1;
    for (int i = 0; i < 4; ++i) v.coefficients.emplace_back(g(rng), g(rng));
    return v;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_vector(), b = random_vector(), c = random_vector();
    CHECK(vector_distance(a, b) == vector_distance(b, a));
    CHECK(vector_distance(a, c) <= vector_distance(a, b) + vector_distance(b, c) + 1e-12);
  }
}

TEST_CASE("prefilter ranks by vector distance") {
  const std::vector<ComplexVector> collection{vectorize(kA, 3), vectorize(kA, 3), vectorize(kC, 3)};
  auto ranked = prefilter(collection, collection[0], 2);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0] == Candidate{0, 0});
  CHECK(ranked[1] == Candidate{1, 0});

  ranked = prefilter(collection, collection[2], 10);
  REQUIRE(ranked.size() == 3);
  CHECK(ranked[0].index == 2);
  CHECK(ranked[1].distance <= ranked[2].distance);

  CHECK(prefilter({}, collection[0], 3).empty());
}
