#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsp/graph.hpp"
#include "gsp/localization.hpp"
#include "gsp/spectral.hpp"
#include "gsp/sweep.hpp"

namespace gsp::io {

/// All floating-point output is written with 17 significant decimal digits,
/// enough to reproduce each double bit-exactly on re-read.
std::string format_double(double x);

// ---- CSV ------------------------------------------------------------------

/// Edge list with header `u,v,w`.
std::vector<Edge> read_edge_csv(const std::string& path);

/// Stations with header `id,lat,lon` or `id,lat,lon,value`.
std::vector<GeoStation> read_stations_csv(const std::string& path);

struct SampleRow {
  std::string vertex;  // 1-based index or vertex id, resolved by the caller
  double value = 0.0;
};

/// Sparse or full signal rows with header `vertex,value`.
std::vector<SampleRow> read_samples_csv(const std::string& path);

/// Resolves a `vertex` token to a 0-based index: positive integers are
/// 1-based positions; anything else is looked up in `ids` when provided.
int resolve_vertex_token(const std::string& token, int n,
                         const std::vector<std::string>* ids);

/// A full signal: every vertex present exactly once.
Signal read_signal_csv(const std::string& path, int n, const std::vector<std::string>* ids);

void write_signal_csv(const std::string& path, const Signal& f,
                      const std::vector<std::string>* ids);

void write_sweep_csv(const std::string& path, const std::vector<SweepCell>& table);

// ---- JSON -----------------------------------------------------------------

void write_graph_json(const std::string& path, const Graph& g);
Graph read_graph_json(const std::string& path);

void write_basis_json(const std::string& path, const GftBasis& basis);

/// Reads and validates a basis: ascending eigenvalues and orthonormal
/// columns within 1e-10.
GftBasis read_basis_json(const std::string& path);

void write_slepian_json(const std::string& path, const SlepianBasis& slep);

// ---- CLI index-set syntax ---------------------------------------------------

/// Parses `1:10,15` style lists (1-based, inclusive ranges) into 1-based
/// indices; duplicates are tolerated.
std::vector<int> parse_index_list(const std::string& text);

// ---- run manifests ----------------------------------------------------------

struct Manifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<std::uint64_t> seed;
  std::string tool_version;
  std::vector<std::pair<std::string, std::string>> input_digests;  // filename -> hash
};

/// 64-bit FNV-1a digest as 16 hex characters.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// Writes `<output_path>.manifest.json` describing how the artifact at
/// output_path was produced.
void write_manifest(const std::string& output_path, const Manifest& manifest);

}  // namespace gsp::io
