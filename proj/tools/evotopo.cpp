// evotopo command-line front end.
//
// Exit codes: 0 ok, 2 parse error, 3 validation error (including bad
// command-line usage and unreadable files), 4 computation error.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "evotopo/evotopo.hpp"

namespace fs = std::filesystem;
using namespace evotopo;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitComputation = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

// "auto" picks the edge-list reader when any data line contains a comma.
EvolvingNetwork load_network(const std::string& path, const std::string& format, bool allow_non_monotone) {
  const auto text = read_file(path);
  IngestOptions opts;
  opts.allow_non_monotone = allow_non_monotone;
  bool edges = format == "edges";
  if (format == "auto") {
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (!line.empty() && line[0] != '#' && line.find(',') != std::string::npos) {
        edges = true;
        break;
      }
    }
  }
  return edges ? parse_timed_edge_list(text, opts) : parse_snapshot_matrices(text, opts);
}

PersistenceDiagram load_diagram(const std::string& path, int dim) {
  const auto dgms = read_diagrams(read_file(path));
  return find_dimension(dgms, dim);
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

std::string format_number(double v) {
  if (v == kInfinity) return "inf";
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

std::string format_point(const std::optional<DiagramPoint>& p) {
  if (!p) return "diagonal";
  return format_number(p->birth) + " " + format_number(p->death);
}

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  std::string second;
  std::string output;
  std::string input_format = "auto";
  std::string filtration = "clique";
  std::string format;
  std::string matching;
  std::string matrix_out;
  std::string query;
  int max_dim = kDefaultMaxDim;
  int dim = 1;
  std::size_t k = 8;
  std::size_t budget = 10;
  std::size_t threads = 0;
  bool essential = false;
  bool clearing = false;
  std::optional<double> cutoff;
  GrowthParams growth;
};

std::vector<PersistenceDiagram> persist_network(const Options& o, const std::string& path) {
  Filtration f;
  if (o.filtration == "weight" || o.filtration == "weight-desc") {
    const auto g = parse_weighted_edge_list(read_file(path));
    f = build_weight_threshold_filtration(
        g, o.max_dim, o.filtration == "weight" ? WeightDirection::kAscending : WeightDirection::kDescending);
  } else {
    const auto net = load_network(path, o.input_format, false);
    if (o.filtration == "geodesic") {
      const auto& last = net.phases().empty() ? Snapshot{} : net.phases().back();
      f = build_geodesic_rips_filtration(last.edges, net.node_count(), o.max_dim);
    } else {
      f = build_clique_filtration(net, o.max_dim);
    }
  }
  return compute_persistence(f, o.max_dim, {o.clearing});
}

std::vector<PersistenceDiagram> load_many(const std::vector<std::string>& paths, int dim) {
  std::vector<PersistenceDiagram> out;
  for (const auto& p : paths) out.push_back(load_diagram(p, dim));
  return out;
}

std::vector<std::string> stems(const std::vector<std::string>& paths) {
  std::vector<std::string> ids;
  for (const auto& p : paths) ids.push_back(stem(p));
  return ids;
}

void add_common_dim(CLI::App* cmd, Options& o) {
  cmd->add_option("--dim", o.dim, "Homology dimension")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological analysis of evolving networks"};
  app.set_config("--config", "", "TOML/INI configuration file; command-line flags take precedence");
  app.require_subcommand(1);
  Options o;

  auto* persist = app.add_subcommand("persist", "Persistence diagrams of a network");
  persist->add_option("network", o.input, "Network file")->required();
  persist->add_option("-o,--output", o.output, "Diagram file (default stdout)");
  persist->add_option("--max-dim", o.max_dim, "Largest simplex dimension")->check(CLI::NonNegativeNumber);
  persist->add_option("--input-format", o.input_format, "auto, matrix or edges")
      ->check(CLI::IsMember({"auto", "matrix", "edges"}));
  persist->add_option("--filtration", o.filtration, "clique, weight, weight-desc or geodesic")
      ->check(CLI::IsMember({"clique", "weight", "weight-desc", "geodesic"}));
  persist->add_flag("--clearing", o.clearing, "Use the clearing optimization");

  auto* dist = app.add_subcommand("dist", "Bottleneck distance between two diagram files");
  dist->add_option("a", o.input, "First diagram file")->required();
  dist->add_option("b", o.second, "Second diagram file")->required();
  add_common_dim(dist, o);
  dist->add_flag("--essential", o.essential, "Match essential classes too");
  dist->add_option("--matching", o.matching, "Write the optimal matching here");

  auto* vec = app.add_subcommand("vectorize", "Complex-polynomial coefficient vector");
  vec->add_option("diagram", o.input, "Diagram file")->required();
  vec->add_option("-o,--output", o.output, "Vector file (default stdout)");
  add_common_dim(vec, o);
  vec->add_option("--k", o.k, "Number of coefficients")->check(CLI::PositiveNumber);

  auto* pairwise = app.add_subcommand("pairwise", "Bottleneck distance matrix");
  pairwise->add_option("diagrams", o.inputs, "Diagram files")->required();
  pairwise->add_option("-o,--output", o.output, "Matrix file (default stdout)");
  add_common_dim(pairwise, o);
  pairwise->add_flag("--essential", o.essential, "Match essential classes too");
  pairwise->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

  auto* pre = app.add_subcommand("prefilter", "Rank diagrams by coefficient-vector distance to a query");
  pre->add_option("query", o.query, "Query diagram file")->required();
  pre->add_option("diagrams", o.inputs, "Candidate diagram files")->required();
  add_common_dim(pre, o);
  pre->add_option("--k", o.k, "Number of coefficients")->check(CLI::PositiveNumber);
  pre->add_option("--budget", o.budget, "Number of candidates to keep");

  auto* cluster = app.add_subcommand("cluster", "Single-linkage clustering of a matrix file");
  cluster->add_option("matrix", o.input, "Matrix file")->required();
  cluster->add_option("-o,--output", o.output, "Dendrogram or partition file (default stdout)");
  cluster->add_option("--cutoff", o.cutoff, "Write a flat partition at this height")->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("gen", "Generate a random growing network");
  gen->add_option("-o,--output", o.output, "Network file (default stdout)");
  gen->add_option("--seed", o.growth.seed, "Random seed");
  gen->add_option("--phases", o.growth.phases, "Number of phases");
  gen->add_option("--nodes", o.growth.initial_nodes, "Nodes in the first phase");
  gen->add_option("--nodes-per-phase", o.growth.nodes_per_phase, "Nodes added per later phase");
  gen->add_option("--edges-per-phase", o.growth.edges_per_phase, "Edges added per phase");
  gen->add_option("--bias", o.growth.attachment_bias, "Preferential attachment weight in [0, 1]");
  gen->add_option("--offset", o.growth.phase_offset, "Value of the first phase");
  o.format = "edges";
  gen->add_option("--format", o.format, "matrix or edges")->check(CLI::IsMember({"matrix", "edges"}));

  auto* perseus = app.add_subcommand("export-perseus", "Perseus-style cell list of the clique filtration");
  perseus->add_option("network", o.input, "Network file")->required();
  perseus->add_option("-o,--output", o.output, "Output file (default stdout)");
  perseus->add_option("--max-dim", o.max_dim, "Largest simplex dimension")->check(CLI::NonNegativeNumber);
  perseus->add_option("--input-format", o.input_format, "auto, matrix or edges")
      ->check(CLI::IsMember({"auto", "matrix", "edges"}));

  std::string plot_format = "diagram";
  auto* plot = app.add_subcommand("plot", "SVG persistence diagram or barcode");
  plot->add_option("diagram", o.input, "Diagram file")->required();
  plot->add_option("-o,--output", o.output, "SVG file (default stdout)");
  add_common_dim(plot, o);
  plot->add_option("--format", plot_format, "diagram or barcode")->check(CLI::IsMember({"diagram", "barcode"}));

  auto* pipeline = app.add_subcommand("pipeline", "Networks to diagrams to distance matrix to clustering");
  pipeline->add_option("networks", o.inputs, "Network files")->required();
  pipeline->add_option("-o,--output", o.output, "Dendrogram or partition file (default stdout)");
  pipeline->add_option("--matrix", o.matrix_out, "Also write the distance matrix here");
  pipeline->add_option("--max-dim", o.max_dim, "Largest simplex dimension")->check(CLI::NonNegativeNumber);
  pipeline->add_option("--input-format", o.input_format, "auto, matrix or edges")
      ->check(CLI::IsMember({"auto", "matrix", "edges"}));
  add_common_dim(pipeline, o);
  pipeline->add_flag("--essential", o.essential, "Match essential classes too");
  pipeline->add_option("--cutoff", o.cutoff, "Write a flat partition at this height")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*persist) {
      emit(o.output, write_diagrams(persist_network(o, o.input)));
    } else if (*dist) {
      const auto r = bottleneck(load_diagram(o.input, o.dim), load_diagram(o.second, o.dim), o.essential);
      std::cout << format_number(r.distance) << '\n';
      if (!o.matching.empty()) {
        std::string text;
        for (const auto& p : r.matching.pairs) {
          text += format_point(p.x) + " -> " + format_point(p.y) + " cost " + format_number(p.cost) + '\n';
        }
        emit(o.matching, text);
      }
    } else if (*vec) {
      const std::vector<ComplexVector> v{vectorize(load_diagram(o.input, o.dim), o.k)};
      emit(o.output, write_vectors(v));
    } else if (*pairwise) {
      const auto dgms = load_many(o.inputs, o.dim);
      emit(o.output, write_matrix(pairwise_matrix(dgms, o.dim, stems(o.inputs), o.essential, o.threads)));
    } else if (*pre) {
      const auto query = vectorize(load_diagram(o.query, o.dim), o.k);
      std::vector<ComplexVector> vectors;
      for (const auto& d : load_many(o.inputs, o.dim)) vectors.push_back(vectorize(d, o.k));
      std::string text;
      for (const auto& c : prefilter(vectors, query, o.budget)) {
        text += stem(o.inputs[c.index]) + "," + format_number(c.distance) + '\n';
      }
      emit(o.output, text);
    } else if (*cluster) {
      const auto dg = single_linkage(read_matrix(read_file(o.input)));
      emit(o.output, o.cutoff ? write_partition(dg.items, cut(dg, *o.cutoff)) : write_dendrogram(dg));
    } else if (*gen) {
      const auto net = generate(o.growth);
      emit(o.output, o.format == "matrix" ? serialize_snapshot_matrices(net) : serialize_timed_edge_list(net));
    } else if (*perseus) {
      emit(o.output, export_perseus(build_clique_filtration(load_network(o.input, o.input_format, false), o.max_dim)));
    } else if (*plot) {
      emit(o.output,
           plot_svg(load_diagram(o.input, o.dim), plot_format == "barcode" ? PlotStyle::kBarcode : PlotStyle::kDiagram));
    } else if (*pipeline) {
      std::vector<PersistenceDiagram> dgms;
      for (const auto& path : o.inputs) {
        auto all = compute_persistence(build_clique_filtration(load_network(path, o.input_format, false), o.max_dim),
                                       o.max_dim);
        dgms.push_back(find_dimension(all, o.dim));
      }
      const auto m = pairwise_matrix(dgms, o.dim, stems(o.inputs), o.essential);
      if (!o.matrix_out.empty()) emit(o.matrix_out, write_matrix(m));
      const auto dg = single_linkage(m);
      emit(o.output, o.cutoff ? write_partition(dg.items, cut(dg, *o.cutoff)) : write_dendrogram(dg));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kExitComputation;
  }
  return 0;
}
