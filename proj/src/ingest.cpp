#include "evotopo/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "text_util.hpp"

namespace evotopo {
namespace {

using detail::directive;
using detail::parse_int;
using detail::split_lines;
using detail::split_ws;
using detail::trim;

[[noreturn]] void fail(std::size_t line, std::size_t phase, std::string message) {
  throw ParseError(ParseReport{line, phase, std::move(message)});
}

struct MatrixBlock {
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::size_t> lines;
};

void check_monotone(const EvolvingNetwork& net, const std::vector<std::size_t>& phase_lines,
                    const IngestOptions& options) {
  if (options.allow_non_monotone) return;
  if (auto v = validate_monotone(net)) {
    const auto position = static_cast<std::size_t>(v->phase - net.phase_offset());
    const std::size_t line = position < phase_lines.size() ? phase_lines[position] : 0;
    fail(line, position + 1, "monotonicity violation: " + v->message);
  }
}

std::string edge_name(const EvolvingNetwork& net, const Edge& e) {
  return net.node_labels()[e.u] + "-" + net.node_labels()[e.v];
}

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

// First phase position containing each node, or npos if never present.
std::vector<std::size_t> node_birth_positions(const EvolvingNetwork& net) {
  std::vector<std::size_t> birth(net.node_count(), std::string::npos);
  for (std::size_t k = net.phase_count(); k-- > 0;) {
    for (NodeId v : net.phases()[k].nodes) birth[v] = k;
  }
  return birth;
}

}  // namespace

EvolvingNetwork parse_snapshot_matrices(std::string_view text, const IngestOptions& options) {
  std::optional<std::vector<std::string>> labels;
  std::size_t labels_line = 0;
  int offset = options.phase_offset;

  std::vector<MatrixBlock> blocks;
  MatrixBlock current;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto t = trim(lines[i]);
    if (!t.empty() && t.front() == '#') continue;
    if (t.empty()) {
      if (!current.rows.empty()) blocks.push_back(std::move(current));
      current = {};
      continue;
    }
    if (blocks.empty() && current.rows.empty()) {
      if (auto value = directive(t, "labels")) {
        labels.emplace();
        for (auto tok : split_ws(*value)) labels->emplace_back(tok);
        labels_line = lineno;
        continue;
      }
      if (auto value = directive(t, "offset")) {
        auto parsed = parse_int<int>(*value);
        if (!parsed) fail(lineno, 0, "offset must be an integer");
        offset = *parsed;
        continue;
      }
    }
    std::vector<std::uint8_t> row;
    for (auto tok : split_ws(t)) {
      if (tok == "0") {
        row.push_back(0);
      } else if (tok == "1") {
        row.push_back(1);
      } else {
        fail(lineno, blocks.size() + 1, "non-0/1 token '" + std::string(tok) + "'");
      }
    }
    current.rows.push_back(std::move(row));
    current.lines.push_back(lineno);
  }
  if (!current.rows.empty()) blocks.push_back(std::move(current));

  std::vector<Snapshot> phases;
  std::vector<std::size_t> phase_lines;
  std::size_t prev_size = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& block = blocks[k];
    const std::size_t n = block.rows.size();
    for (std::size_t r = 0; r < n; ++r) {
      if (block.rows[r].size() != n) {
        fail(block.lines[r], k + 1,
             "non-square matrix: row has " + std::to_string(block.rows[r].size()) +
                 " entries, expected " + std::to_string(n));
      }
    }
    if (n < prev_size) {
      fail(block.lines.front(), k + 1,
           "size mismatch across phases: " + std::to_string(n) + " nodes after " +
               std::to_string(prev_size));
    }
    prev_size = n;
    Snapshot snap;
    for (std::size_t r = 0; r < n; ++r) {
      snap.nodes.push_back(static_cast<NodeId>(r));
      if (block.rows[r][r] != 0) fail(block.lines[r], k + 1, "self-loop: nonzero diagonal entry");
      for (std::size_t c = r + 1; c < n; ++c) {
        if (block.rows[r][c] != block.rows[c][r]) {
          fail(block.lines[r], k + 1,
               "asymmetric matrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
                   ") differs from (" + std::to_string(c) + "," + std::to_string(r) + ")");
        }
        if (block.rows[r][c] != 0) snap.edges.push_back({static_cast<NodeId>(r), static_cast<NodeId>(c)});
      }
    }
    phases.push_back(std::move(snap));
    phase_lines.push_back(block.lines.front());
  }

  std::vector<std::string> names;
  if (labels) {
    if (labels->size() != prev_size) {
      fail(labels_line, 0,
           "expected " + std::to_string(prev_size) + " labels, found " + std::to_string(labels->size()));
    }
    auto sorted = *labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(labels_line, 0, "duplicate node label");
    }
    names = std::move(*labels);
  } else {
    for (std::size_t v = 0; v < prev_size; ++v) names.push_back(std::to_string(v));
  }

  EvolvingNetwork net(std::move(names), std::move(phases), offset);
  check_monotone(net, phase_lines, options);
  return net;
}

EvolvingNetwork parse_timed_edge_list(std::string_view text, const IngestOptions& options) {
  int offset = options.phase_offset;
  std::optional<std::size_t> declared_phases;
  std::size_t phases_line = 0;

  struct Record {
    std::string u, v;
    long long t;
    std::size_t line;
  };
  std::vector<Record> records;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto t = trim(lines[i]);
    if (t.empty() || t.front() == '#') continue;
    if (t.find(',') == std::string_view::npos) {
      if (auto value = directive(t, "offset")) {
        auto parsed = parse_int<int>(*value);
        if (!parsed) fail(lineno, 0, "offset must be an integer");
        offset = *parsed;
        continue;
      }
      if (auto value = directive(t, "phases")) {
        auto parsed = parse_int<std::size_t>(*value);
        if (!parsed) fail(lineno, 0, "phases must be a non-negative integer");
        declared_phases = *parsed;
        phases_line = lineno;
        continue;
      }
      fail(lineno, 0, "malformed line: expected u,v,t");
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      fields.push_back(trim(t.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3 || fields[0].empty()) fail(lineno, 0, "malformed line: expected u,v,t");
    auto phase = parse_int<long long>(fields[2]);
    if (!phase) fail(lineno, 0, "malformed phase '" + std::string(fields[2]) + "'");
    if (fields[0] == fields[1]) fail(lineno, 0, "self-loop on node '" + std::string(fields[0]) + "'");
    records.push_back({std::string(fields[0]), std::string(fields[1]), *phase, lineno});
  }

  long long max_t = offset - 1;
  for (const auto& r : records) {
    if (r.t < offset) {
      fail(r.line, 0, "phase " + std::to_string(r.t) + " precedes the first phase " + std::to_string(offset));
    }
    max_t = std::max(max_t, r.t);
  }
  std::size_t phase_count = static_cast<std::size_t>(max_t - offset + 1);
  if (declared_phases) {
    if (*declared_phases < phase_count) {
      fail(phases_line, 0, "declared " + std::to_string(*declared_phases) + " phases but data spans " +
                               std::to_string(phase_count));
    }
    phase_count = *declared_phases;
  }

  struct NodeInfo {
    long long birth;
    std::size_t first_seen;
  };
  std::unordered_map<std::string, NodeInfo> info;
  std::vector<std::string> order;
  auto touch = [&](const std::string& name, long long t) {
    auto [it, inserted] = info.try_emplace(name, NodeInfo{t, order.size()});
    if (inserted) {
      order.push_back(name);
    } else {
      it->second.birth = std::min(it->second.birth, t);
    }
  };
  for (const auto& r : records) {
    touch(r.u, r.t);
    if (!r.v.empty()) touch(r.v, r.t);
  }

  std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    const auto& ia = info.at(a);
    const auto& ib = info.at(b);
    return ia.birth != ib.birth ? ia.birth < ib.birth : ia.first_seen < ib.first_seen;
  });
  std::unordered_map<std::string, NodeId> index;
  for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], static_cast<NodeId>(i));

  std::map<Edge, long long> edge_birth;
  for (const auto& r : records) {
    if (r.v.empty()) continue;
    const Edge e = make_edge(index.at(r.u), index.at(r.v));
    auto [it, inserted] = edge_birth.try_emplace(e, r.t);
    if (!inserted) it->second = std::min(it->second, r.t);
  }

  std::vector<Snapshot> phases(phase_count);
  for (std::size_t k = 0; k < phase_count; ++k) {
    const long long value = offset + static_cast<long long>(k);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (info.at(order[i]).birth <= value) phases[k].nodes.push_back(static_cast<NodeId>(i));
    }
    for (const auto& [e, t] : edge_birth) {
      if (t <= value) phases[k].edges.push_back(e);
    }
  }
  return EvolvingNetwork(std::move(order), std::move(phases), offset);
}

std::optional<MonotoneViolation> validate_monotone(const EvolvingNetwork& net) {
  const auto& phases = net.phases();
  for (std::size_t k = 1; k < phases.size(); ++k) {
    const auto& prev = phases[k - 1];
    const auto& next = phases[k];
    const int phase = net.phase_offset() + static_cast<int>(k);
    for (NodeId v : prev.nodes) {
      if (!std::binary_search(next.nodes.begin(), next.nodes.end(), v)) {
        return MonotoneViolation{phase, "node " + net.node_labels()[v] + " removed"};
      }
    }
    for (const Edge& e : prev.edges) {
      if (!std::binary_search(next.edges.begin(), next.edges.end(), e)) {
        return MonotoneViolation{phase, "edge " + edge_name(net, e) + " removed"};
      }
    }
  }
  return std::nullopt;
}

std::string serialize_snapshot_matrices(const EvolvingNetwork& net) {
  std::ostringstream out;
  for (const auto& label : net.node_labels()) {
    if (label.empty() || has_whitespace(label)) {
      throw ValidationError("node label '" + label + "' cannot be written in matrix format");
    }
  }
  out << "labels:";
  for (const auto& label : net.node_labels()) out << ' ' << label;
  out << "\noffset: " << net.phase_offset() << "\n";

  std::size_t prev = 0;
  for (std::size_t k = 0; k < net.phase_count(); ++k) {
    const auto& snap = net.phases()[k];
    const std::size_t n = snap.nodes.size();
    if (n == 0 || snap.nodes.back() + 1 != n || n < prev) {
      throw ValidationError("matrix format needs each phase to hold nodes 0..n-1 with n non-decreasing");
    }
    if (k + 1 == net.phase_count() && n != net.node_count()) {
      throw ValidationError("matrix format needs every node present in the last phase");
    }
    prev = n;
    std::vector<std::uint8_t> adj(n * n, 0);
    for (const Edge& e : snap.edges) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
    out << '\n';
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) out << (c ? " " : "") << static_cast<int>(adj[r * n + c]);
      out << '\n';
    }
  }
  return out.str();
}

std::string serialize_timed_edge_list(const EvolvingNetwork& net) {
  if (auto v = validate_monotone(net)) {
    throw ValidationError("edge-list format needs a monotone network: " + v->message);
  }
  const auto birth = node_birth_positions(net);
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    const auto& label = net.node_labels()[v];
    if (label.empty() || label != trim(label) || label.find_first_of(",\n") != std::string::npos ||
        label.front() == '#') {
      throw ValidationError("node label '" + label + "' cannot be written in edge-list format");
    }
    if (birth[v] == std::string::npos) {
      throw ValidationError("node " + label + " is absent from every phase");
    }
    if (v > 0 && birth[v] < birth[v - 1]) {
      throw ValidationError("edge-list format needs node indices ordered by birth phase");
    }
  }

  std::map<Edge, std::size_t> edge_birth;
  for (std::size_t k = net.phase_count(); k-- > 0;) {
    for (const Edge& e : net.phases()[k].edges) edge_birth[e] = k;
  }
  std::vector<std::pair<std::size_t, Edge>> edges;
  for (const auto& [e, k] : edge_birth) edges.emplace_back(k, e);
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "offset: " << net.phase_offset() << "\nphases: " << net.phase_count() << "\n";
  const auto value = [&](std::size_t k) { return net.phase_offset() + static_cast<long long>(k); };
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    out << net.node_labels()[v] << ",," << value(birth[v]) << "\n";
  }
  for (const auto& [k, e] : edges) {
    out << net.node_labels()[e.u] << ',' << net.node_labels()[e.v] << ',' << value(k) << "\n";
  }
  return out.str();
}

std::string export_perseus(const Filtration& f) {
  std::ostringstream out;
  out << std::max(f.max_dimension(), 0) << "\n";
  for (const auto& cell : f.cells()) {
    if (!std::isfinite(cell.birth) || std::floor(cell.birth) != cell.birth) {
      throw ValidationError("Perseus export needs integer births; found " + detail::format_real(cell.birth));
    }
    out << cell.simplex.dimension();
    for (NodeId v : cell.simplex.vertices()) out << ' ' << v;
    out << ' ' << static_cast<long long>(cell.birth) << "\n";
  }
  return out.str();
}

}  // namespace evotopo
