#include "evotopo/formats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "evotopo/errors.hpp"
#include "text_util.hpp"

namespace evotopo {
namespace {

using detail::format_real;
using detail::parse_int;
using detail::parse_real;
using detail::split_ws;

// Yields tokenized non-blank, non-comment lines with their line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : lines_(detail::split_lines(text)) {}

  bool next() {
    while (index_ < lines_.size()) {
      const auto t = detail::trim(lines_[index_++]);
      if (t.empty() || t.front() == '#') continue;
      tokens = split_ws(t);
      return true;
    }
    return false;
  }

  std::size_t line() const { return index_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError({line(), 0, message}); }

  void expect_header(std::string_view magic) {
    if (!next() || tokens.size() != 2 || tokens[0] != magic) {
      fail("expected header '" + std::string(magic) + " 1'");
    }
    if (tokens[1] != "1") fail("unsupported format version " + std::string(tokens[1]));
  }

  double real(std::size_t i) const {
    auto v = parse_real(tokens.at(i));
    if (!v) fail("malformed number '" + std::string(tokens.at(i)) + "'");
    return *v;
  }

  template <typename Int>
  Int integer(std::size_t i) const {
    auto v = parse_int<Int>(tokens.at(i));
    if (!v) fail("malformed integer '" + std::string(tokens.at(i)) + "'");
    return *v;
  }

  void arity(std::size_t n) const {
    if (tokens.size() != n) fail("expected " + std::to_string(n) + " fields");
  }

  std::vector<std::string_view> tokens;

 private:
  std::vector<std::string_view> lines_;
  std::size_t index_ = 0;
};

void check_id(const std::string& id) {
  if (id.empty() || id.find_first_of(" \t\r\n") != std::string::npos || id.front() == '#') {
    throw ValidationError("identifier '" + id + "' cannot be written: it must be nonempty without whitespace");
  }
}

}  // namespace

std::string write_diagrams(std::span<const PersistenceDiagram> diagrams) {
  std::ostringstream out;
  out << "evotopo-diagrams 1\n";
  for (const auto& d : diagrams) {
    out << "dimension " << d.dimension() << "\n";
    for (const auto& p : d.finite_points()) {
      out << "point " << format_real(p.birth) << ' ' << format_real(p.death) << ' ' << p.multiplicity << "\n";
    }
    for (const auto& p : d.essential_points()) {
      out << "essential " << format_real(p.birth) << ' ' << p.multiplicity << "\n";
    }
  }
  return out.str();
}

std::vector<PersistenceDiagram> read_diagrams(std::string_view text) {
  LineReader in(text);
  in.expect_header("evotopo-diagrams");

  struct Pending {
    int dimension;
    std::vector<DiagramPoint> points;
  };
  std::vector<Pending> records;
  while (in.next()) {
    const auto kind = in.tokens[0];
    if (kind == "dimension") {
      in.arity(2);
      const int dim = in.integer<int>(1);
      if (dim < 0) in.fail("dimension must be non-negative");
      for (const auto& r : records) {
        if (r.dimension == dim) in.fail("duplicate record for dimension " + std::to_string(dim));
      }
      records.push_back({dim, {}});
      continue;
    }
    if (records.empty()) in.fail("point before any 'dimension' line");
    DiagramPoint p;
    if (kind == "point") {
      in.arity(4);
      p = {in.real(1), in.real(2), in.integer<std::uint32_t>(3)};
      if (!std::isfinite(p.death)) in.fail("finite point with infinite death; use 'essential'");
    } else if (kind == "essential") {
      in.arity(3);
      p = {in.real(1), kInfinity, in.integer<std::uint32_t>(2)};
    } else {
      in.fail("unknown record '" + std::string(kind) + "'");
    }
    if (!std::isfinite(p.birth)) in.fail("birth must be finite");
    if (p.multiplicity == 0) in.fail("multiplicity must be positive");
    if (p.death <= p.birth) in.fail("point must satisfy birth < death");
    records.back().points.push_back(p);
  }

  std::vector<PersistenceDiagram> out;
  out.reserve(records.size());
  for (auto& r : records) out.emplace_back(r.dimension, std::move(r.points));
  return out;
}

const PersistenceDiagram& find_dimension(std::span<const PersistenceDiagram> diagrams, int dimension) {
  for (const auto& d : diagrams) {
    if (d.dimension() == dimension) return d;
  }
  throw ValidationError("no dimension-" + std::to_string(dimension) + " diagram record");
}

std::string write_vectors(std::span<const ComplexVector> vectors) {
  std::ostringstream out;
  out << "evotopo-vectors 1\n";
  for (const auto& v : vectors) {
    out << "vector " << v.dimension << ' ' << v.k() << "\n";
    for (const auto& c : v.coefficients) out << format_real(c.real()) << ' ' << format_real(c.imag()) << "\n";
  }
  return out.str();
}

std::vector<ComplexVector> read_vectors(std::string_view text) {
  LineReader in(text);
  in.expect_header("evotopo-vectors");
  std::vector<ComplexVector> out;
  std::size_t remaining = 0;
  while (in.next()) {
    if (in.tokens[0] == "vector") {
      if (remaining != 0) in.fail("previous vector is missing coefficients");
      in.arity(3);
      ComplexVector v;
      v.dimension = in.integer<int>(1);
      remaining = in.integer<std::size_t>(2);
      if (remaining == 0) in.fail("k must be at least 1");
      v.coefficients.reserve(remaining);
      out.push_back(std::move(v));
      continue;
    }
    if (remaining == 0) in.fail("coefficient outside a vector record");
    in.arity(2);
    out.back().coefficients.emplace_back(in.real(0), in.real(1));
    --remaining;
  }
  if (remaining != 0) in.fail("last vector is missing coefficients");
  return out;
}

std::string write_matrix(const DistanceMatrix& m) {
  std::ostringstream out;
  out << "evotopo-matrix 1\nids";
  for (const auto& id : m.ids()) {
    check_id(id);
    out << ' ' << id;
  }
  out << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << format_real(m(i, j));
    out << "\n";
  }
  return out.str();
}

DistanceMatrix read_matrix(std::string_view text) {
  LineReader in(text);
  in.expect_header("evotopo-matrix");
  if (!in.next() || in.tokens[0] != "ids") in.fail("expected 'ids' line");
  std::vector<std::string> ids(in.tokens.begin() + 1, in.tokens.end());
  const auto n = ids.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!in.next()) in.fail("expected " + std::to_string(n) + " matrix rows");
    in.arity(n);
    for (std::size_t j = 0; j < n; ++j) values.push_back(in.real(j));
  }
  if (in.next()) in.fail("trailing data after matrix");
  try {
    return DistanceMatrix(std::move(ids), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

std::string write_dendrogram(const Dendrogram& d) {
  std::ostringstream out;
  out << "evotopo-dendrogram 1\nitems";
  for (const auto& id : d.items) {
    check_id(id);
    out << ' ' << id;
  }
  out << "\n";
  for (const auto& m : d.merges) out << m.a << ' ' << m.b << ' ' << format_real(m.height) << "\n";
  return out.str();
}

Dendrogram read_dendrogram(std::string_view text) {
  LineReader in(text);
  in.expect_header("evotopo-dendrogram");
  if (!in.next() || in.tokens[0] != "items") in.fail("expected 'items' line");
  Dendrogram d;
  d.items.assign(in.tokens.begin() + 1, in.tokens.end());
  while (in.next()) {
    in.arity(3);
    const auto a = in.integer<std::size_t>(0);
    const auto b = in.integer<std::size_t>(1);
    const auto limit = d.items.size() + d.merges.size();
    if (a >= limit || b >= limit || a == b) in.fail("merge references an unknown cluster");
    const double h = in.real(2);
    if (!d.merges.empty() && h < d.merges.back().height) in.fail("merge heights must be non-decreasing");
    d.merges.push_back({a, b, h});
  }
  return d;
}

std::string write_partition(std::span<const std::string> items, std::span<const std::size_t> labels) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) out << items[i] << ',' << labels[i] << "\n";
  return out.str();
}

}  // namespace evotopo
