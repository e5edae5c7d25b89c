#include "gsp/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gsp/errors.hpp"

namespace gsp::io {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trimmed(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_double(const std::string& text, const std::string& where) {
  const std::string t = trimmed(text);
  double value = 0.0;
  const char* begin = t.data();
  const char* end = begin + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    fail(Errc::parse_error, where + ": '" + text + "' is not a number");
  return value;
}

long parse_int(const std::string& text, const std::string& where) {
  const std::string t = trimmed(text);
  long value = 0;
  const char* begin = t.data();
  const char* end = begin + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    fail(Errc::parse_error, where + ": '" + text + "' is not an integer");
  return value;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string row_tag(const std::string& path, std::size_t row) {
  return path + " row " + std::to_string(row + 1);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, path + ": " + e.what());
  }
  return doc;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<Edge> read_edge_csv(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || split_fields(lines[0]) != std::vector<std::string>{"u", "v", "w"})
    fail(Errc::parse_error, path + ": expected header 'u,v,w'");
  std::vector<Edge> edges;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (trimmed(lines[r]).empty()) continue;
    const auto fields = split_fields(lines[r]);
    if (fields.size() != 3)
      fail(Errc::parse_error, row_tag(path, r) + ": expected 3 fields, got " +
                                  std::to_string(fields.size()));
    edges.push_back({fields[0], fields[1], parse_double(fields[2], row_tag(path, r))});
  }
  return edges;
}

std::vector<GeoStation> read_stations_csv(const std::string& path) {
  const auto lines = read_lines(path);
  const std::vector<std::string> with_value{"id", "lat", "lon", "value"};
  const std::vector<std::string> without_value{"id", "lat", "lon"};
  if (lines.empty())
    fail(Errc::parse_error, path + ": empty file");
  const auto header = split_fields(lines[0]);
  bool has_value;
  if (header == with_value) {
    has_value = true;
  } else if (header == without_value) {
    has_value = false;
  } else {
    fail(Errc::parse_error, path + ": expected header 'id,lat,lon[,value]'");
  }
  const std::size_t want = has_value ? 4 : 3;

  std::vector<GeoStation> stations;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (trimmed(lines[r]).empty()) continue;
    const auto fields = split_fields(lines[r]);
    if (fields.size() != want)
      fail(Errc::parse_error, row_tag(path, r) + ": expected " + std::to_string(want) +
                                  " fields, got " + std::to_string(fields.size()));
    GeoStation s;
    s.id = fields[0];
    s.lat = parse_double(fields[1], row_tag(path, r));
    s.lon = parse_double(fields[2], row_tag(path, r));
    if (has_value && !fields[3].empty()) s.value = parse_double(fields[3], row_tag(path, r));
    stations.push_back(std::move(s));
  }
  return stations;
}

std::vector<SampleRow> read_samples_csv(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty() || split_fields(lines[0]) != std::vector<std::string>{"vertex", "value"})
    fail(Errc::parse_error, path + ": expected header 'vertex,value'");
  std::vector<SampleRow> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (trimmed(lines[r]).empty()) continue;
    const auto fields = split_fields(lines[r]);
    if (fields.size() != 2)
      fail(Errc::parse_error, row_tag(path, r) + ": expected 2 fields, got " +
                                  std::to_string(fields.size()));
    rows.push_back({fields[0], parse_double(fields[1], row_tag(path, r))});
  }
  return rows;
}

int resolve_vertex_token(const std::string& token, int n,
                         const std::vector<std::string>* ids) {
  const std::string t = trimmed(token);
  long idx = 0;
  const char* begin = t.data();
  auto [ptr, ec] = std::from_chars(begin, begin + t.size(), idx);
  if (ec == std::errc{} && ptr == begin + t.size()) {
    if (idx < 1 || idx > n)
      fail(Errc::index_out_of_range,
           "vertex index " + t + " outside 1.." + std::to_string(n));
    return static_cast<int>(idx - 1);
  }
  if (ids) {
    for (int i = 0; i < n; ++i)
      if ((*ids)[static_cast<std::size_t>(i)] == t) return i;
    fail(Errc::parse_error, "unknown vertex id '" + t + "'");
  }
  fail(Errc::parse_error,
       "vertex token '" + t + "' is not an index and no graph with ids was given");
}

Signal read_signal_csv(const std::string& path, int n, const std::vector<std::string>* ids) {
  const auto rows = read_samples_csv(path);
  Signal f = Signal::Zero(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& row : rows) {
    const int i = resolve_vertex_token(row.vertex, n, ids);
    if (seen[static_cast<std::size_t>(i)])
      fail(Errc::parse_error, path + ": vertex '" + row.vertex + "' appears twice");
    seen[static_cast<std::size_t>(i)] = true;
    f(i) = row.value;
  }
  for (int i = 0; i < n; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      fail(Errc::parse_error,
           path + ": missing value for vertex " + std::to_string(i + 1));
  return f;
}

void write_signal_csv(const std::string& path, const Signal& f,
                      const std::vector<std::string>* ids) {
  std::string out = "vertex,value\n";
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (ids) {
      out += (*ids)[static_cast<std::size_t>(i)];
    } else {
      out += std::to_string(i + 1);
    }
    out += ',';
    out += format_double(f(i));
    out += '\n';
  }
  write_file(path, out);
}

void write_sweep_csv(const std::string& path, const std::vector<SweepCell>& table) {
  std::string out = "size,bandwidth,nmse_mean,nmse_std,valid_trials\n";
  for (const SweepCell& c : table) {
    out += std::to_string(c.sample_size);
    out += ',';
    out += std::to_string(c.bandwidth);
    out += ',';
    out += format_double(c.nmse_mean);
    out += ',';
    out += format_double(c.nmse_std);
    out += ',';
    out += std::to_string(c.valid_trials);
    out += '\n';
  }
  write_file(path, out);
}

void write_graph_json(const std::string& path, const Graph& g) {
  std::string out = "{\n  \"vertex_ids\": [";
  for (int i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += '"' + json_escape(g.vertex_ids()[static_cast<std::size_t>(i)]) + '"';
  }
  out += "],\n  \"edges\": [";
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const double w = g.adjacency()(i, j);
      if (w == 0.0) continue;
      if (!first) out += ", ";
      first = false;
      out += "[" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
             format_double(w) + "]";
    }
  }
  out += "]\n}\n";
  write_file(path, out);
}

Graph read_graph_json(const std::string& path) {
  const nlohmann::json doc = parse_json_file(path);
  if (!doc.contains("vertex_ids") || !doc.contains("edges"))
    fail(Errc::parse_error, path + ": expected keys 'vertex_ids' and 'edges'");
  std::vector<std::string> ids;
  for (const auto& v : doc["vertex_ids"]) ids.push_back(v.get<std::string>());
  const int n = static_cast<int>(ids.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3)
      fail(Errc::parse_error, path + ": each edge must be [u, v, w]");
    const long u = e[0].get<long>();
    const long v = e[1].get<long>();
    if (u < 1 || u > n || v < 1 || v > n)
      fail(Errc::index_out_of_range, path + ": edge endpoint outside 1.." + std::to_string(n));
    a(u - 1, v - 1) = e[2].get<double>();
    a(v - 1, u - 1) = e[2].get<double>();
  }
  return Graph::from_adjacency(std::move(ids), std::move(a));
}

void write_basis_json(const std::string& path, const GftBasis& basis) {
  const int n = basis.size();
  std::string out = "{\n  \"lambdas\": [";
  for (int i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += format_double(basis.lambdas(i));
  }
  out += "],\n  \"U\": [\n";
  for (int i = 0; i < n; ++i) {
    out += "    [";
    for (int j = 0; j < n; ++j) {
      if (j) out += ", ";
      out += format_double(basis.U(i, j));
    }
    out += i + 1 < n ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  write_file(path, out);
}

GftBasis read_basis_json(const std::string& path) {
  const nlohmann::json doc = parse_json_file(path);
  if (!doc.contains("lambdas") || !doc.contains("U"))
    fail(Errc::parse_error, path + ": expected keys 'lambdas' and 'U'");

  GftBasis basis;
  const auto& lam = doc["lambdas"];
  const int n = static_cast<int>(lam.size());
  basis.lambdas.resize(n);
  for (int i = 0; i < n; ++i) basis.lambdas(i) = lam[static_cast<std::size_t>(i)].get<double>();

  const auto& u = doc["U"];
  if (static_cast<int>(u.size()) != n)
    fail(Errc::parse_error, path + ": U must have as many rows as lambdas");
  basis.U.resize(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = u[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n)
      fail(Errc::parse_error, path + ": U row " + std::to_string(i + 1) + " has wrong length");
    for (int j = 0; j < n; ++j) basis.U(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }

  for (int i = 0; i + 1 < n; ++i)
    if (basis.lambdas(i) > basis.lambdas(i + 1))
      fail(Errc::parse_error, path + ": eigenvalues are not ascending");
  if (n && basis.lambdas(0) < -1e-9)
    fail(Errc::parse_error, path + ": negative eigenvalue " + format_double(basis.lambdas(0)));
  if (n) {
    const double ortho = (basis.U.transpose() * basis.U - Eigen::MatrixXd::Identity(n, n))
                             .cwiseAbs()
                             .maxCoeff();
    if (ortho > 1e-10)
      fail(Errc::parse_error,
           path + ": U is not orthonormal (residual " + format_double(ortho) + ")");
  }
  return basis;
}

void write_slepian_json(const std::string& path, const SlepianBasis& slep) {
  const int n = slep.size();
  std::string out = "{\n  \"S\": [";
  const auto s = slep.S.one_based();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  out += "],\n  \"F\": [";
  const auto f = slep.F.one_based();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(f[i]);
  }
  out += "],\n  \"sigma\": [";
  for (int i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += format_double(slep.concentrations(i));
  }
  out += "],\n  \"psi\": [\n";
  for (int i = 0; i < n; ++i) {
    out += "    [";
    for (int j = 0; j < n; ++j) {
      if (j) out += ", ";
      out += format_double(slep.vectors(i, j));
    }
    out += i + 1 < n ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  write_file(path, out);
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const std::string t = trimmed(token);
    if (t.empty()) fail(Errc::parse_error, "empty entry in index list '" + text + "'");
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      out.push_back(static_cast<int>(parse_int(t, "index list")));
    } else {
      const long a = parse_int(t.substr(0, colon), "index list");
      const long b = parse_int(t.substr(colon + 1), "index list");
      if (a > b)
        fail(Errc::parse_error, "descending range '" + t + "' in index list");
      for (long i = a; i <= b; ++i) out.push_back(static_cast<int>(i));
    }
  }
  if (out.empty()) fail(Errc::parse_error, "empty index list");
  for (int i : out)
    if (i < 1) fail(Errc::index_out_of_range, "index list entries must be >= 1");
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write '" + path + "'");
  out << contents;
  if (!out) fail(Errc::parse_error, "write to '" + path + "' failed");
}

void write_manifest(const std::string& output_path, const Manifest& manifest) {
  nlohmann::json doc;
  doc["command"] = manifest.command;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : manifest.parameters) params[k] = v;
  doc["parameters"] = params;
  if (manifest.seed) {
    doc["seed"] = *manifest.seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["tool_version"] = manifest.tool_version;
  nlohmann::json digests = nlohmann::json::object();
  for (const auto& [file, digest] : manifest.input_digests) digests[file] = digest;
  doc["input_digests"] = digests;
  write_file(output_path + ".manifest.json", doc.dump(2) + "\n");
}

}  // namespace gsp::io
