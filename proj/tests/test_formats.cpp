#include <random>

#include "doctest.h"
#include "evotopo/cluster.hpp"
#include "evotopo/complex_vectors.hpp"
#include "evotopo/errors.hpp"
#include "evotopo/formats.hpp"
#include "evotopo/plot.hpp"
#include "oracles.hpp"

using namespace evotopo;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("diagram file text") {
  const std::vector<PersistenceDiagram> dgms{PersistenceDiagram(0, {{1, kInfinity, 1}, {1, 2, 1}}),
                                             PersistenceDiagram(1, {{1.5, 3, 2}})};
  const auto text = write_diagrams(dgms);
  CHECK(text ==
        "evotopo-diagrams 1\n"
        "dimension 0\n"
        "point 1 2 1\n"
        "essential 1 1\n"
        "dimension 1\n"
        "point 1.5 3 2\n");
  CHECK(read_diagrams(text) == dgms);
  CHECK(find_dimension(dgms, 1) == dgms[1]);
  CHECK_THROWS_AS(find_dimension(dgms, 2), ValidationError);
}

TEST_CASE("diagram files round trip random diagrams exactly") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PersistenceDiagram> dgms;
    for (int d = 0; d < 3; ++d) {
      auto pts = oracle::random_points(rng, 6);
      if (rng() % 2) pts.push_back({0.1 * (rng() % 50), kInfinity, 1});
      dgms.emplace_back(d, pts);
    }
    CHECK(read_diagrams(write_diagrams(dgms)) == dgms);
  }
}

TEST_CASE("diagram file errors") {
  CHECK_THROWS_AS(read_diagrams(""), ParseError);
  CHECK_THROWS_AS(read_diagrams("evotopo-diagrams 2\n"), ParseError);
  CHECK_THROWS_AS(read_diagrams("evotopo-diagrams 1\npoint 1 2 1\n"), ParseError);
  CHECK_THROWS_AS(read_diagrams("evotopo-diagrams 1\ndimension 0\npoint 1 x 1\n"), ParseError);
  CHECK_THROWS_AS(read_diagrams("evotopo-diagrams 1\ndimension 0\ndimension 0\n"), ParseError);
  try {
    read_diagrams("evotopo-diagrams 1\n# note\ndimension 0\nbogus\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.report().line == 4);
  }
  CHECK(read_diagrams("evotopo-diagrams 1\n\n# only comments\n").empty());
}

TEST_CASE("vector files round trip") {
  const PersistenceDiagram d(1, {{1, 3, 1}, {2, 4, 2}});
  const std::vector<ComplexVector> vs{vectorize(d, 2), vectorize(d, 5), vectorize(PersistenceDiagram(0), 1)};
  CHECK(read_vectors(write_vectors(vs)) == vs);
  CHECK_THROWS_AS(read_vectors("evotopo-vectors 1\nvector 0 2\n1 2\n"), ParseError);
}

TEST_CASE("matrix files round trip") {
  const DistanceMatrix m({"A", "B", "C"}, {0, 0, 1, 0, 0, 1, 1, 1, 0});
  const auto text = write_matrix(m);
  CHECK(text == "evotopo-matrix 1\nids A B C\n0 0 1\n0 0 1\n1 1 0\n");
  CHECK(read_matrix(text) == m);
  CHECK_THROWS_AS(read_matrix("evotopo-matrix 1\nids A B\n0 1\n2 0\n"), ValidationError);
  CHECK_THROWS_AS(read_matrix("evotopo-matrix 1\nids A B\n0 1\n"), ParseError);
}

TEST_CASE("dendrogram files and partitions") {
  const auto dg = single_linkage(DistanceMatrix({"A", "B", "C"}, {0, 0, 1, 0, 0, 1, 1, 1, 0}));
  const auto text = write_dendrogram(dg);
  CHECK(text == "evotopo-dendrogram 1\nitems A B C\n0 1 0\n2 3 1\n");
  CHECK(read_dendrogram(text) == dg);
  const auto labels = cut(dg, 0.5);
  CHECK(write_partition(dg.items, labels) == "A,0\nB,0\nC,1\n");
}

TEST_CASE("diagram plot has one marker per distinct point") {
  const PersistenceDiagram d(1, {{1, 3, 1}, {2, 4, 2}, {0, kInfinity, 1}});
  const auto svg = plot_svg(d, PlotStyle::kDiagram);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "class=\"point\"") == 2);
  CHECK(count(svg, "class=\"essential\"") == 1);
  CHECK(count(svg, ">x2<") == 1);
  CHECK(count(svg, "class=\"diagonal\"") == 1);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("barcode plot has one bar per class") {
  const PersistenceDiagram d(1, {{1, 3, 1}, {2, 4, 2}, {0, kInfinity, 2}});
  const auto svg = plot_svg(d, PlotStyle::kBarcode);
  CHECK(count(svg, "class=\"bar\"") == 3);
  CHECK(count(svg, "class=\"essential\"") == 2);
  CHECK(count(svg, "class=\"arrow\"") == 2);

  const auto empty = plot_svg(PersistenceDiagram(0), PlotStyle::kBarcode);
  CHECK(count(empty, "class=\"bar\"") == 0);
  CHECK(count(plot_svg(PersistenceDiagram(0), PlotStyle::kDiagram), "class=\"point\"") == 0);
}
