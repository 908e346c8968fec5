#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evotopo/types.hpp"

namespace evotopo {

// Canonical diagram file.
//
//   evotopo-diagrams 1
//   dimension <d>
//   point <birth> <death> <multiplicity>
//   essential <birth> <multiplicity>
//   dimension <d'>
//   ...
//
// Numbers use the shortest exact decimal form. Blank lines and lines
// starting with '#' are ignored.
std::string write_diagrams(std::span<const PersistenceDiagram> diagrams);
std::vector<PersistenceDiagram> read_diagrams(std::string_view text);

// Record of the given dimension; throws ValidationError if absent.
const PersistenceDiagram& find_dimension(std::span<const PersistenceDiagram> diagrams, int dimension);

// Vector file: one record per vector.
//
//   evotopo-vectors 1
//   vector <dimension> <k>
//   <re> <im>        (k lines)
std::string write_vectors(std::span<const ComplexVector> vectors);
std::vector<ComplexVector> read_vectors(std::string_view text);

//   evotopo-matrix 1
//   ids <id> <id> ...
//   <n rows of n numbers>
std::string write_matrix(const DistanceMatrix& m);
DistanceMatrix read_matrix(std::string_view text);

//   evotopo-dendrogram 1
//   items <id> <id> ...
//   <cluster-a> <cluster-b> <height>     (one line per merge)
std::string write_dendrogram(const Dendrogram& d);
Dendrogram read_dendrogram(std::string_view text);

// "item,cluster" per line.
std::string write_partition(std::span<const std::string> items, std::span<const std::size_t> labels);

}  // namespace evotopo
