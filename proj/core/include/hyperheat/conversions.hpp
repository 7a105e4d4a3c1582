#ifndef HYPERHEAT_CONVERSIONS_HPP
#define HYPERHEAT_CONVERSIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperheat/hypergraph.hpp"

namespace hyperheat {

struct BipartiteConversion {
  Hypergraph hypergraph;
  std::size_t skipped_small = 0;     // right nodes with < 2 neighbors
  std::size_t skipped_oversize = 0;  // right nodes above the optional size cap
};

// One hyperedge per right node over its left-side neighbors; duplicate vertex
// sets merge by weight increment. Degenerate rows are dropped and counted.
BipartiteConversion bipartite_to_hypergraph(
    int left_count, const std::vector<std::vector<int>>& right_adjacency,
    std::optional<std::size_t> max_edge_size = std::nullopt);

enum class CliquePairWeight {
  Unit,              // each pair gets w_h (keeps 2-uniform inputs fixed)
  OverSize,          // w_h / |h|
  OverSizeMinusOne,  // w_h / (|h| - 1)
};

// Replaces every hyperedge with a complete graph over its vertices; parallel
// pairs merge by weight sum. Vertex set is preserved.
Hypergraph clique_expansion(const Hypergraph& g,
                            CliquePairWeight scaling = CliquePairWeight::Unit);

struct KnnStructures {
  Hypergraph hypergraph;  // one hyperedge {v} u nn(v) per point
  Hypergraph graph;       // one edge {v, u} per neighbor u in nn(v)
};

// Euclidean k-nearest neighbors with distance ties broken by ascending point
// index, so the output is deterministic even for duplicated points.
KnnStructures knn_structures(const std::vector<std::vector<double>>& points, int k);

}  // namespace hyperheat

#endif  // HYPERHEAT_CONVERSIONS_HPP
