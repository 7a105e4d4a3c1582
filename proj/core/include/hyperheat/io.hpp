#ifndef HYPERHEAT_IO_HPP
#define HYPERHEAT_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperheat/edge_norm.hpp"
#include "hyperheat/hypergraph.hpp"

namespace hyperheat {

// Canonical hypergraph text format: line 1 is "n m", then m lines
// "w k v1 v2 ... vk" with 0-based vertex ids and ASCII decimal reals.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& g);
void write_hypergraph_file(const std::string& path, const Hypergraph& g);

// Bipartite edge list, one "left right" pair per line. Returns the adjacency
// of each right node over left ids together with the left vertex count
// (max id + 1).
struct BipartiteData {
  int left_count = 0;
  std::vector<std::vector<int>> right_adjacency;
};
BipartiteData read_bipartite(std::istream& in);
BipartiteData read_bipartite_file(const std::string& path);

// Point cloud CSV: one point per row, comma-separated coordinates.
std::vector<std::vector<double>> read_points_csv(std::istream& in);
std::vector<std::vector<double>> read_points_csv_file(const std::string& path);

// Vertex-indexed vector CSV with rows "vertex,value"; a "vertex,value" header
// is accepted on input and written on output. Missing vertices read as 0.
VertexVector read_vertex_csv(std::istream& in, int n);
VertexVector read_vertex_csv_file(const std::string& path, int n);
void write_vertex_csv(std::ostream& out, std::span<const double> values);
void write_vertex_csv_file(const std::string& path, std::span<const double> values);

// Cut function table: line 1 "k", then 2^k lines "bitmask value".
CutFunction read_cut_function(std::istream& in);
CutFunction read_cut_function_file(const std::string& path);
void write_cut_function(std::ostream& out, const CutFunction& cut);

// Key-value metadata sidecar, one "key = value" per line.
void write_kv_file(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& entries);

// Shortest decimal form that round-trips the double exactly.
std::string format_double(double v);

}  // namespace hyperheat

#endif  // HYPERHEAT_IO_HPP
