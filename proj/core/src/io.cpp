#include "hyperheat/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "hyperheat/errors.hpp"

namespace hyperheat {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  return out;
}

double parse_double(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string(what) + ": bad number '" + tok + "'");
  }
}

long parse_long(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string(what) + ": bad integer '" + tok + "'");
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i < line.size() && line[i] != '#') return true;
  }
  return false;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("hypergraph: missing header line");
  std::istringstream header(line);
  long n = 0, m = 0;
  if (!(header >> n >> m)) throw ParseError("hypergraph: header must be 'n m'");
  if (n < 1 || m < 0) throw ParseError("hypergraph: invalid header counts");

  std::vector<Hyperedge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long e = 0; e < m; ++e) {
    if (!next_data_line(in, line))
      throw ParseError("hypergraph: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(e));
    std::istringstream row(line);
    double w = 0.0;
    long k = 0;
    if (!(row >> w >> k)) throw ParseError("hypergraph: edge line must start 'w k'");
    if (k < 0) throw ParseError("hypergraph: negative edge size");
    Hyperedge edge;
    edge.weight = w;
    edge.vertices.reserve(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) {
      long v = 0;
      if (!(row >> v)) throw ParseError("hypergraph: edge line shorter than its size field");
      edge.vertices.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph::build(static_cast<int>(n), std::move(edges));
}

Hypergraph read_hypergraph_file(const std::string& path) {
  auto in = open_input(path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << format_double(e.weight) << ' ' << e.vertices.size();
    for (int v : e.vertices) out << ' ' << v;
    out << '\n';
  }
}

void write_hypergraph_file(const std::string& path, const Hypergraph& g) {
  auto out = open_output(path);
  write_hypergraph(out, g);
}

BipartiteData read_bipartite(std::istream& in) {
  std::string line;
  std::map<long, std::vector<int>> rows;
  long max_left = -1;
  while (next_data_line(in, line)) {
    std::istringstream row(line);
    long left = 0, right = 0;
    if (!(row >> left >> right)) throw ParseError("bipartite: line must be 'left right'");
    if (left < 0) throw ParseError("bipartite: negative left id");
    max_left = std::max(max_left, left);
    rows[right].push_back(static_cast<int>(left));
  }
  if (max_left < 0) throw ParseError("bipartite: empty input");
  BipartiteData data;
  data.left_count = static_cast<int>(max_left) + 1;
  data.right_adjacency.reserve(rows.size());
  for (auto& [right, adj] : rows) data.right_adjacency.push_back(std::move(adj));
  return data;
}

BipartiteData read_bipartite_file(const std::string& path) {
  auto in = open_input(path);
  return read_bipartite(in);
}

std::vector<std::vector<double>> read_points_csv(std::istream& in) {
  std::vector<std::vector<double>> points;
  std::string line;
  while (next_data_line(in, line)) {
    const auto toks = split_csv(line);
    std::vector<double> p;
    p.reserve(toks.size());
    for (const auto& t : toks) p.push_back(parse_double(t, "points csv"));
    require_finite(p, "points csv");
    points.push_back(std::move(p));
  }
  if (points.empty()) throw ParseError("points csv: empty input");
  return points;
}

std::vector<std::vector<double>> read_points_csv_file(const std::string& path) {
  auto in = open_input(path);
  return read_points_csv(in);
}

VertexVector read_vertex_csv(std::istream& in, int n) {
  VertexVector values(static_cast<std::size_t>(n), 0.0);
  std::string line;
  bool first = true;
  while (next_data_line(in, line)) {
    const auto toks = split_csv(line);
    if (toks.size() != 2) throw ParseError("vertex csv: expected 'vertex,value'");
    if (first && toks[0] == "vertex") {
      first = false;
      continue;
    }
    first = false;
    const long v = parse_long(toks[0], "vertex csv");
    if (v < 0 || v >= n) throw VertexOutOfRange("vertex csv: id out of range");
    values[static_cast<std::size_t>(v)] = parse_double(toks[1], "vertex csv");
  }
  require_finite(values, "vertex csv");
  return values;
}

VertexVector read_vertex_csv_file(const std::string& path, int n) {
  auto in = open_input(path);
  return read_vertex_csv(in, n);
}

void write_vertex_csv(std::ostream& out, std::span<const double> values) {
  out << "vertex,value\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    out << i << ',' << format_double(values[i]) << '\n';
}

void write_vertex_csv_file(const std::string& path, std::span<const double> values) {
  auto out = open_output(path);
  write_vertex_csv(out, values);
}

CutFunction read_cut_function(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("cut function: missing size line");
  const long k = parse_long(line, "cut function size");
  if (k < 2 || k > CutFunction::kMaxGroundSize)
    throw ParseError("cut function: ground size must be in [2, 12]");
  const std::size_t rows = std::size_t{1} << k;
  std::vector<double> values(rows, 0.0);
  std::vector<char> seen(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!next_data_line(in, line)) throw ParseError("cut function: missing table rows");
    std::istringstream row(line);
    unsigned long mask = 0;
    double v = 0.0;
    if (!(row >> mask >> v)) throw ParseError("cut function: row must be 'bitmask value'");
    if (mask >= rows) throw ParseError("cut function: bitmask out of range");
    if (seen[mask]) throw ParseError("cut function: duplicate bitmask");
    seen[mask] = 1;
    values[mask] = v;
  }
  return CutFunction::from_table(static_cast<int>(k), std::move(values));
}

CutFunction read_cut_function_file(const std::string& path) {
  auto in = open_input(path);
  return read_cut_function(in);
}

void write_cut_function(std::ostream& out, const CutFunction& cut) {
  out << cut.ground_size() << '\n';
  const std::size_t rows = std::size_t{1} << cut.ground_size();
  for (std::size_t mask = 0; mask < rows; ++mask)
    out << mask << ' ' << format_double(cut.value(static_cast<std::uint32_t>(mask))) << '\n';
}

void write_kv_file(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& entries) {
  auto out = open_output(path);
  for (const auto& [key, value] : entries) out << key << " = " << value << '\n';
}

}  // namespace hyperheat
