#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "evotopo/errors.hpp"
#include "evotopo/types.hpp"

namespace evotopo {

struct IngestOptions {
  // Value of the first phase; an "offset:" directive in the file overrides it.
  int phase_offset = 1;
  // When set, edge removals between phases are accepted instead of raising
  // a ParseError. The caller may still run validate_monotone to warn.
  bool allow_non_monotone = false;
};

// Snapshot-matrix format: square 0/1 matrices separated by blank lines, one
// per phase. Optional directives before the first matrix:
//   labels: <name> <name> ...
//   offset: <int>
// Lines starting with '#' are comments. A matrix may be larger than its
// predecessor; new nodes are appended at the end.
EvolvingNetwork parse_snapshot_matrices(std::string_view text, const IngestOptions& options = {});

// Timed edge list: one "u,v,t" per line, edge (u,v) present from phase t on.
// "u,,t" declares node u at phase t. Directives "offset: <int>" and
// "phases: <int>" may appear on their own lines. Node indices are assigned
// by (birth phase, first appearance).
EvolvingNetwork parse_timed_edge_list(std::string_view text, const IngestOptions& options = {});

std::string serialize_snapshot_matrices(const EvolvingNetwork& net);
std::string serialize_timed_edge_list(const EvolvingNetwork& net);

struct MonotoneViolation {
  int phase;  // phase value at which something disappeared
  std::string message;
};

// ok iff every node and edge of phase i is still present in phase i+1.
std::optional<MonotoneViolation> validate_monotone(const EvolvingNetwork& net);

// Perseus-style clique list: a header line with the maximum dimension, then
// "d v0 ... vd t" per cell in filtration order. Births must be integers.
std::string export_perseus(const Filtration& f);

}  // namespace evotopo
