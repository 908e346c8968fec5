#include "evotopo/complex_vectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evotopo/errors.hpp"

namespace evotopo {

Coefficients diagram_to_polynomial(const PersistenceDiagram& d) {
  // e[m] after processing roots z_1..z_j: e_m(z_1..z_j) = e_m(z_1..z_{j-1}) + z_j e_{m-1}(...).
  Coefficients e{1.0};
  for (const auto& p : d.finite_points()) {
    const std::complex<double> z(p.birth, p.death);
    for (std::uint32_t r = 0; r < p.multiplicity; ++r) {
      e.push_back(0.0);
      for (std::size_t m = e.size() - 1; m >= 1; --m) e[m] += z * e[m - 1];
    }
  }
  return Coefficients(e.begin() + 1, e.end());
}

ComplexVector truncate(std::span<const std::complex<double>> coefficients, std::size_t k, int dimension) {
  if (k < 1) throw std::invalid_argument("truncation length k must be at least 1");
  ComplexVector v;
  v.dimension = dimension;
  v.coefficients.assign(k, 0.0);
  std::copy_n(coefficients.begin(), std::min(k, coefficients.size()), v.coefficients.begin());
  return v;
}

ComplexVector vectorize(const PersistenceDiagram& d, std::size_t k) {
  return truncate(diagram_to_polynomial(d), k, d.dimension());
}

double vector_distance(const ComplexVector& a, const ComplexVector& b) {
  if (a.dimension != b.dimension) {
    throw ValidationError("vector dimensions differ: " + std::to_string(a.dimension) + " vs " +
                          std::to_string(b.dimension));
  }
  const auto n = std::max(a.k(), b.k());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = i < a.k() ? a.coefficients[i] : std::complex<double>{};
    const auto y = i < b.k() ? b.coefficients[i] : std::complex<double>{};
    sum += std::norm(x - y);
  }
  return std::sqrt(sum);
}

std::vector<Candidate> prefilter(std::span<const ComplexVector> collection, const ComplexVector& query,
                                 std::size_t budget) {
  std::vector<Candidate> ranked;
  ranked.reserve(collection.size());
  for (std::size_t i = 0; i < collection.size(); ++i) {
    ranked.push_back({i, vector_distance(collection[i], query)});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });
  if (ranked.size() > budget) ranked.resize(budget);
  return ranked;
}

}  // namespace evotopo
