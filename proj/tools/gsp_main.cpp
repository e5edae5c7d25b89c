// gsp: command-line front end for graph signal localization and sampling.
//
// Every numeric result comes from the gsp core library; this file only
// parses arguments, moves data between files, and reports errors as
// structured JSON on stderr (exit 2 usage, 3 data/format, 4 numerical).

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gsp/errors.hpp"
#include "gsp/graph.hpp"
#include "gsp/io.hpp"
#include "gsp/localization.hpp"
#include "gsp/numerics.hpp"
#include "gsp/operators.hpp"
#include "gsp/sampling.hpp"
#include "gsp/selection.hpp"
#include "gsp/spectral.hpp"
#include "gsp/sweep.hpp"
#include "gsp/version.hpp"

namespace {

using gsp::FrequencySet;
using gsp::GftBasis;
using gsp::Graph;
using gsp::Signal;
using gsp::VertexSet;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

void emit_error(const std::string& kind, const std::string& message) {
  std::cerr << "{\"error\": \"" << kind << "\", \"message\": \""
            << [&] {
                 std::string out;
                 for (char c : message) {
                   if (c == '"' || c == '\\') out += '\\';
                   if (c == '\n') {
                     out += "\\n";
                     continue;
                   }
                   out += c;
                 }
                 return out;
               }()
            << "\"}\n";
}

int threads_option(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("GSP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

VertexSet parse_verts(const std::string& text, int n) {
  return VertexSet::from_one_based(gsp::io::parse_index_list(text), n);
}

FrequencySet parse_freqs(const std::string& text, int n) {
  return FrequencySet::from_one_based(gsp::io::parse_index_list(text), n);
}

// The basis (and hence B) is not unique when F splits a cluster of equal
// eigenvalues; downstream numbers then depend on the solver's basis choice.
void warn_cluster_split(const GftBasis& basis, const FrequencySet& f) {
  for (int i : f.indices()) {
    for (int nb : {i - 1, i + 1}) {
      if (nb < 0 || nb >= basis.size() || f.contains(nb)) continue;
      if (std::abs(basis.lambdas(i) - basis.lambdas(nb)) < 1e-9) {
        std::cerr << "warning: frequency set boundary splits an eigenvalue cluster "
                  << "(|lambda_" << i + 1 << " - lambda_" << nb + 1
                  << "| < 1e-9); results depend on the basis choice within the cluster\n";
        return;
      }
    }
  }
}

gsp::io::Manifest make_manifest(const std::string& command,
                                std::vector<std::pair<std::string, std::string>> params,
                                std::optional<std::uint64_t> seed,
                                const std::vector<std::string>& inputs) {
  gsp::io::Manifest m;
  m.command = command;
  m.parameters = std::move(params);
  m.seed = seed;
  m.tool_version = gsp::kVersion;
  for (const std::string& path : inputs)
    m.input_digests.emplace_back(path, gsp::io::fnv1a_hex(gsp::io::read_file(path)));
  return m;
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

std::string index_set_json(const std::vector<int>& one_based) {
  std::string out = "[";
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(one_based[i]);
  }
  return out + "]";
}

// ---- subcommand bodies ------------------------------------------------------

struct GraphBuildArgs {
  std::string edges_csv;
  std::string out;
};

void run_graph_build(const GraphBuildArgs& a) {
  const Graph g = Graph::from_edges(gsp::io::read_edge_csv(a.edges_csv));
  gsp::io::write_graph_json(a.out, g);
  gsp::io::write_manifest(a.out, make_manifest("graph build",
                                               {{"edges", a.edges_csv}, {"out", a.out}},
                                               std::nullopt, {a.edges_csv}));
}

struct GraphGeoArgs {
  std::string stations_csv;
  double radius_km = 0.0;
  std::string out;
  std::string signal_out;
};

void run_graph_geo(const GraphGeoArgs& a) {
  const auto stations = gsp::io::read_stations_csv(a.stations_csv);
  const Graph g = gsp::build_geo_graph(stations, a.radius_km);
  gsp::io::write_graph_json(a.out, g);
  gsp::io::write_manifest(
      a.out, make_manifest("graph geo",
                           {{"stations", a.stations_csv},
                            {"radius-km", gsp::io::format_double(a.radius_km)},
                            {"out", a.out}},
                           std::nullopt, {a.stations_csv}));

  if (a.signal_out.empty()) return;
  Signal f(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const auto& v = stations[static_cast<std::size_t>(i)].value;
    if (!v)
      gsp::fail(gsp::Errc::parse_error,
                "station '" + stations[static_cast<std::size_t>(i)].id +
                    "' has no value; cannot emit a signal");
    f(i) = *v;
  }
  gsp::io::write_signal_csv(a.signal_out, f, &g.vertex_ids());
  gsp::io::write_manifest(a.signal_out,
                          make_manifest("graph geo",
                                        {{"stations", a.stations_csv},
                                         {"radius-km", gsp::io::format_double(a.radius_km)},
                                         {"signal-out", a.signal_out}},
                                        std::nullopt, {a.stations_csv}));
}

struct BasisArgs {
  std::string graph_json;
  std::string kind = "combinatorial";
  std::string out;
};

void run_basis(const BasisArgs& a) {
  const Graph g = gsp::io::read_graph_json(a.graph_json);
  const auto kind = a.kind == "normalized" ? gsp::LaplacianKind::normalized
                                           : gsp::LaplacianKind::combinatorial;
  const GftBasis basis = gsp::eigendecompose(g.laplacian(kind));
  gsp::io::write_basis_json(a.out, basis);
  gsp::io::write_manifest(a.out, make_manifest("basis",
                                               {{"graph", a.graph_json},
                                                {"kind", a.kind},
                                                {"out", a.out}},
                                               std::nullopt, {a.graph_json}));
}

struct SlepianArgs {
  std::string basis_json;
  std::string verts;
  std::string freqs;
  std::string out;
};

void run_slepian(const SlepianArgs& a) {
  const GftBasis basis = gsp::io::read_basis_json(a.basis_json);
  const VertexSet s = parse_verts(a.verts, basis.size());
  const FrequencySet f = parse_freqs(a.freqs, basis.size());
  warn_cluster_split(basis, f);
  const gsp::SlepianBasis slep = gsp::slepian_vectors(basis, s, f);
  gsp::io::write_slepian_json(a.out, slep);
  gsp::io::write_manifest(a.out, make_manifest("slepian",
                                               {{"basis", a.basis_json},
                                                {"verts", a.verts},
                                                {"freq", a.freqs},
                                                {"out", a.out}},
                                               std::nullopt, {a.basis_json}));
}

struct CheckArgs {
  std::string basis_json;
  std::string verts;
  std::string freqs;
  double tol = 1e-8;
  std::string out;  // optional; stdout when empty
};

void run_check(const CheckArgs& a) {
  const GftBasis basis = gsp::io::read_basis_json(a.basis_json);
  const VertexSet s = parse_verts(a.verts, basis.size());
  const FrequencySet f = parse_freqs(a.freqs, basis.size());
  warn_cluster_split(basis, f);

  const gsp::Projector d = gsp::vertex_limiter(s);
  const gsp::Projector b = gsp::band_limiter(basis, f);
  const double bd_norm = gsp::spectral_norm(b.matrix * d.matrix);
  const gsp::SlepianBasis slep = gsp::slepian_vectors(basis, s, f);
  const auto loc = gsp::perfect_localization_exists(basis, s, f, a.tol);
  const gsp::DofCounts dof = gsp::dof_counts(basis, s, f, a.tol);
  if (dof.transition_other_branch)
    std::cerr << "warning: transition-count branches disagree ("
              << dof.transition_count << " vs " << *dof.transition_other_branch << ")\n";

  std::string json = "{\"bd_norm\": " + gsp::io::format_double(bd_norm) +
                     ", \"localized\": " + bool_json(loc.exists) +
                     ", \"C\": " + std::to_string(dof.unit_count) +
                     ", \"Q\": " + std::to_string(dof.transition_count) +
                     ", \"O\": " + std::to_string(dof.zero_count) + ", \"sigma\": [";
  for (int i = 0; i < slep.size(); ++i) {
    if (i) json += ", ";
    json += gsp::io::format_double(slep.concentrations(i));
  }
  json += "]}";

  if (a.out.empty()) {
    std::cout << json << "\n";
  } else {
    gsp::io::write_file(a.out, json + "\n");
    gsp::io::write_manifest(a.out, make_manifest("check",
                                                 {{"basis", a.basis_json},
                                                  {"verts", a.verts},
                                                  {"freq", a.freqs},
                                                  {"tol", gsp::io::format_double(a.tol)},
                                                  {"out", a.out}},
                                                 std::nullopt, {a.basis_json}));
  }
}

struct ReconstructArgs {
  std::string basis_json;
  std::string freqs;
  std::string samples_csv;
  std::string method = "slepian";
  std::string out;
  std::string graph_json;  // optional, for vertex-id resolution
  double tol = 1e-8;
};

void run_reconstruct(const ReconstructArgs& a) {
  const GftBasis basis = gsp::io::read_basis_json(a.basis_json);
  const int n = basis.size();
  const FrequencySet f = parse_freqs(a.freqs, n);
  warn_cluster_split(basis, f);

  std::optional<Graph> graph;
  const std::vector<std::string>* ids = nullptr;
  if (!a.graph_json.empty()) {
    graph = gsp::io::read_graph_json(a.graph_json);
    if (graph->size() != n)
      gsp::fail(gsp::Errc::dimension_mismatch, "graph size does not match basis size");
    ids = &graph->vertex_ids();
  }

  const auto rows = gsp::io::read_samples_csv(a.samples_csv);
  std::vector<int> indices;
  std::vector<double> values;
  for (const auto& row : rows) {
    indices.push_back(gsp::io::resolve_vertex_token(row.vertex, n, ids));
    values.push_back(row.value);
  }
  const VertexSet s = VertexSet::from_zero_based(indices, n);
  if (s.size() != static_cast<int>(values.size()))
    gsp::fail(gsp::Errc::parse_error, a.samples_csv + ": duplicate sample vertices");
  Signal embedded = Signal::Zero(n);
  for (std::size_t k = 0; k < indices.size(); ++k)
    embedded(indices[k]) = values[k];
  const gsp::SampledSignal fs = gsp::sample(embedded, s);

  Signal reconstructed;
  if (a.method == "slepian") {
    const gsp::SlepianBasis slep = gsp::slepian_vectors(basis, s, f);
    reconstructed = gsp::reconstruct_slepian(fs, slep, a.tol);
  } else {
    reconstructed = gsp::reconstruct_direct(fs, gsp::band_limiter(basis, f), s);
  }

  gsp::io::write_signal_csv(a.out, reconstructed, ids);
  std::vector<std::string> inputs{a.basis_json, a.samples_csv};
  if (!a.graph_json.empty()) inputs.push_back(a.graph_json);
  gsp::io::write_manifest(a.out, make_manifest("reconstruct",
                                               {{"basis", a.basis_json},
                                                {"freq", a.freqs},
                                                {"samples", a.samples_csv},
                                                {"method", a.method},
                                                {"tol", gsp::io::format_double(a.tol)},
                                                {"out", a.out}},
                                               std::nullopt, inputs));
}

struct SweepArgs {
  std::string graph_json;
  std::string signal_csv;
  std::string sizes;
  int max_bw = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string kind = "combinatorial";
  int threads = 0;
  double tol = 1e-8;
};

void run_sweep(const SweepArgs& a) {
  const Graph g = gsp::io::read_graph_json(a.graph_json);
  const auto kind = a.kind == "normalized" ? gsp::LaplacianKind::normalized
                                           : gsp::LaplacianKind::combinatorial;
  const GftBasis basis = gsp::eigendecompose(g.laplacian(kind));
  const Signal f = gsp::io::read_signal_csv(a.signal_csv, g.size(), &g.vertex_ids());

  gsp::SweepOptions opt;
  for (int v : gsp::io::parse_index_list(a.sizes)) opt.sample_sizes.push_back(v);
  if (a.max_bw < 1 || a.max_bw > g.size())
    gsp::fail(gsp::Errc::size_out_of_range, "--max-bw outside 1..n");
  for (int k = 1; k <= a.max_bw; ++k) opt.bandwidths.push_back(k);
  opt.trials = a.trials;
  opt.seed = a.seed;
  opt.threads = threads_option(a.threads);
  opt.tol = a.tol;

  const auto table = gsp::nmse_sweep(basis, f, opt);
  for (const auto& cell : table) {
    if (cell.valid_trials == 0)
      std::cerr << "warning: no valid trials for size " << cell.sample_size
                << ", bandwidth " << cell.bandwidth << "\n";
  }
  gsp::io::write_sweep_csv(a.out, table);
  gsp::io::write_manifest(a.out, make_manifest("sweep",
                                               {{"graph", a.graph_json},
                                                {"signal", a.signal_csv},
                                                {"sizes", a.sizes},
                                                {"max-bw", std::to_string(a.max_bw)},
                                                {"trials", std::to_string(a.trials)},
                                                {"kind", a.kind},
                                                {"tol", gsp::io::format_double(a.tol)},
                                                {"out", a.out}},
                                               a.seed, {a.graph_json, a.signal_csv}));
}

struct SelectArgs {
  std::string basis_json;
  std::string freqs;
  int size = 0;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::string out;  // optional
};

void run_select(const SelectArgs& a) {
  const GftBasis basis = gsp::io::read_basis_json(a.basis_json);
  const FrequencySet f = parse_freqs(a.freqs, basis.size());
  warn_cluster_split(basis, f);

  gsp::SelectionResult result;
  if (a.method == "random") {
    result = gsp::select_random(basis, f, a.size, a.seed.value());
  } else if (a.method == "greedy-bdc") {
    result = gsp::select_greedy_min_bdc(basis, f, a.size);
  } else if (a.method == "greedy-g") {
    result = gsp::select_greedy_maxcond_g(basis, f, a.size);
  } else {
    gsp::fail(gsp::Errc::parse_error, "unknown method '" + a.method + "'");
  }

  const std::string json = "{\"S\": " + index_set_json(result.S.one_based()) +
                           ", \"score\": " + gsp::io::format_double(result.score) +
                           ", \"feasible\": " + bool_json(result.feasible) + "}";
  if (a.out.empty()) {
    std::cout << json << "\n";
  } else {
    gsp::io::write_file(a.out, json + "\n");
    gsp::io::write_manifest(a.out,
                            make_manifest("select",
                                          {{"basis", a.basis_json},
                                           {"freq", a.freqs},
                                           {"size", std::to_string(a.size)},
                                           {"method", a.method},
                                           {"out", a.out}},
                                          a.seed, {a.basis_json}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-frequency localization and sampling of graph signals"};
  app.set_version_flag("--version", gsp::kVersion);
  app.require_subcommand(1);

  auto* graph_cmd = app.add_subcommand("graph", "Build graphs from edge lists or coordinates");
  graph_cmd->require_subcommand(1);

  GraphBuildArgs gb;
  auto* graph_build = graph_cmd->add_subcommand("build", "Graph from an edge CSV (header u,v,w)");
  graph_build->add_option("--edges", gb.edges_csv, "Edge CSV path")->required();
  graph_build->add_option("--out", gb.out, "Output graph JSON")->required();

  GraphGeoArgs gg;
  auto* graph_geo =
      graph_cmd->add_subcommand("geo", "Geometric graph from a stations CSV (header id,lat,lon[,value])");
  graph_geo->add_option("--stations", gg.stations_csv, "Stations CSV path")->required();
  graph_geo->add_option("--radius-km", gg.radius_km, "Coverage radius in km")->required();
  graph_geo->add_option("--out", gg.out, "Output graph JSON")->required();
  graph_geo->add_option("--signal-out", gg.signal_out, "Also write station values as a signal CSV");

  BasisArgs ba;
  auto* basis_cmd = app.add_subcommand("basis", "Laplacian eigenbasis of a graph");
  basis_cmd->add_option("--graph", ba.graph_json, "Graph JSON path")->required();
  basis_cmd->add_option("--kind", ba.kind, "Laplacian kind")
      ->check(CLI::IsMember({"combinatorial", "normalized"}));
  basis_cmd->add_option("--out", ba.out, "Output basis JSON")->required();

  SlepianArgs sa;
  auto* slepian_cmd = app.add_subcommand("slepian", "Concentration basis for a vertex/frequency pair");
  slepian_cmd->add_option("--basis", sa.basis_json, "Basis JSON path")->required();
  slepian_cmd->add_option("--verts", sa.verts, "Vertex set, e.g. 1:10,15")->required();
  slepian_cmd->add_option("--freq", sa.freqs, "Frequency set, e.g. 1:10,15")->required();
  slepian_cmd->add_option("--out", sa.out, "Output JSON")->required();

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Localization and degrees-of-freedom report");
  check_cmd->add_option("--basis", ca.basis_json, "Basis JSON path")->required();
  check_cmd->add_option("--verts", ca.verts, "Vertex set")->required();
  check_cmd->add_option("--freq", ca.freqs, "Frequency set")->required();
  check_cmd->add_option("--tol", ca.tol, "Unit-eigenvalue tolerance (default 1e-8)");
  check_cmd->add_option("--out", ca.out, "Write the JSON report here instead of stdout");

  ReconstructArgs ra;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Reconstruct a bandlimited signal from samples");
  rec_cmd->add_option("--basis", ra.basis_json, "Basis JSON path")->required();
  rec_cmd->add_option("--freq", ra.freqs, "Frequency set")->required();
  rec_cmd->add_option("--samples", ra.samples_csv, "Samples CSV (header vertex,value)")->required();
  rec_cmd->add_option("--method", ra.method, "Reconstruction route")
      ->check(CLI::IsMember({"slepian", "direct"}))
      ->required();
  rec_cmd->add_option("--out", ra.out, "Output signal CSV")->required();
  rec_cmd->add_option("--graph", ra.graph_json, "Graph JSON, enables vertex-id samples");
  rec_cmd->add_option("--tol", ra.tol, "Concentration tolerance (default 1e-8)");

  SweepArgs swa;
  auto* sweep_cmd = app.add_subcommand("sweep", "NMSE versus bandwidth and sampling-set size");
  sweep_cmd->add_option("--graph", swa.graph_json, "Graph JSON path")->required();
  sweep_cmd->add_option("--signal", swa.signal_csv, "Full signal CSV")->required();
  sweep_cmd->add_option("--sizes", swa.sizes, "Sampling-set sizes, e.g. 10,20,30")->required();
  sweep_cmd->add_option("--max-bw", swa.max_bw, "Bandwidths 1..max-bw")->required();
  sweep_cmd->add_option("--trials", swa.trials, "Random sampling sets per cell")->required();
  sweep_cmd->add_option("--seed", swa.seed, "Master seed (required: no wall-clock default)")
      ->required();
  sweep_cmd->add_option("--out", swa.out, "Output CSV")->required();
  sweep_cmd->add_option("--kind", swa.kind, "Laplacian kind")
      ->check(CLI::IsMember({"combinatorial", "normalized"}));
  sweep_cmd->add_option("--threads", swa.threads, "Worker threads (GSP_THREADS fallback, default 1)");
  sweep_cmd->add_option("--tol", swa.tol, "Sampling-condition tolerance (default 1e-8)");

  SelectArgs sea;
  auto* select_cmd = app.add_subcommand("select", "Choose a sampling set");
  select_cmd->add_option("--basis", sea.basis_json, "Basis JSON path")->required();
  select_cmd->add_option("--freq", sea.freqs, "Frequency set")->required();
  select_cmd->add_option("--size", sea.size, "Number of vertices to select")->required();
  select_cmd->add_option("--method", sea.method, "Selection method")
      ->check(CLI::IsMember({"random", "greedy-bdc", "greedy-g"}))
      ->required();
  std::uint64_t select_seed = 0;
  auto* seed_opt = select_cmd->add_option("--seed", select_seed, "Seed (required for random)");
  select_cmd->add_option("--out", sea.out, "Write the JSON result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    emit_error("usage", e.what());
    return kExitUsage;
  }

  try {
    if (graph_build->parsed()) run_graph_build(gb);
    if (graph_geo->parsed()) run_graph_geo(gg);
    if (basis_cmd->parsed()) run_basis(ba);
    if (slepian_cmd->parsed()) run_slepian(sa);
    if (check_cmd->parsed()) run_check(ca);
    if (rec_cmd->parsed()) run_reconstruct(ra);
    if (sweep_cmd->parsed()) run_sweep(swa);
    if (select_cmd->parsed()) {
      if (seed_opt->count() > 0) sea.seed = select_seed;
      if (sea.method == "random" && !sea.seed) {
        emit_error("usage", "--seed is required for --method random");
        return kExitUsage;
      }
      run_select(sea);
    }
  } catch (const gsp::Error& e) {
    emit_error(gsp::errc_name(e.code()), e.what());
    return is_numerical(e.code()) ? kExitNumerical : kExitData;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
  return 0;
}
