#pragma once

#include <complex>
#include <span>
#include <vector>

#include "evotopo/types.hpp"

namespace evotopo {

using Coefficients = std::vector<std::complex<double>>;

// Elementary symmetric sums e_1..e_n of the finite points embedded as
// birth + i*death, each repeated by its multiplicity. The monic polynomial
// with these roots has coefficient (-1)^m e_m on t^(n-m). Essential points
// are ignored.
Coefficients diagram_to_polynomial(const PersistenceDiagram& d);

// First k of e_1..e_n, zero-padded to length k. Throws
// std::invalid_argument if k < 1.
ComplexVector truncate(std::span<const std::complex<double>> coefficients, std::size_t k,
                       int dimension = 0);

// Convenience for truncate(diagram_to_polynomial(d), k, d.dimension()).
ComplexVector vectorize(const PersistenceDiagram& d, std::size_t k);

// Euclidean norm of the coefficient-wise difference, the shorter vector
// zero-padded. Throws ValidationError on a dimension mismatch.
double vector_distance(const ComplexVector& a, const ComplexVector& b);

struct Candidate {
  std::size_t index;  // position in the collection
  double distance;

  bool operator==(const Candidate&) const = default;
};

// Collection ranked by vector_distance to the query (ties by index), cut to
// the first `budget` entries. A ranking only: a large distance suggests the
// diagrams are far apart, a small one proves nothing.
std::vector<Candidate> prefilter(std::span<const ComplexVector> collection, const ComplexVector& query,
                                 std::size_t budget);

}  // namespace evotopo
