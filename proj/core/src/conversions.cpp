#include "hyperheat/conversions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hyperheat/errors.hpp"

namespace hyperheat {

BipartiteConversion bipartite_to_hypergraph(int left_count,
                                            const std::vector<std::vector<int>>& right_adjacency,
                                            std::optional<std::size_t> max_edge_size) {
  BipartiteConversion out;
  std::vector<Hyperedge> edges;
  edges.reserve(right_adjacency.size());
  for (const auto& row : right_adjacency) {
    std::vector<int> verts = row;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) {
      if (v < 0 || v >= left_count)
        throw VertexOutOfRange("bipartite row references left node " + std::to_string(v) +
                               " outside [0, " + std::to_string(left_count) + ")");
    }
    if (verts.size() < 2) {
      ++out.skipped_small;
      continue;
    }
    if (max_edge_size && verts.size() > *max_edge_size) {
      ++out.skipped_oversize;
      continue;
    }
    edges.push_back({std::move(verts), 1.0});
  }
  out.hypergraph = Hypergraph::build(left_count, std::move(edges));
  return out;
}

Hypergraph clique_expansion(const Hypergraph& g, CliquePairWeight scaling) {
  std::vector<Hyperedge> pairs;
  for (const auto& e : g.edges()) {
    const std::size_t k = e.vertices.size();
    double w = e.weight;
    switch (scaling) {
      case CliquePairWeight::Unit:
        break;
      case CliquePairWeight::OverSize:
        w /= static_cast<double>(k);
        break;
      case CliquePairWeight::OverSizeMinusOne:
        w /= static_cast<double>(k - 1);
        break;
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        pairs.push_back({{e.vertices[i], e.vertices[j]}, w});
  }
  return Hypergraph::build(g.vertex_count(), std::move(pairs));
}

KnnStructures knn_structures(const std::vector<std::vector<double>>& points, int k) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw InvalidArgument("knn: need at least 2 points");
  if (k < 1 || k >= n) throw InvalidArgument("knn: require 1 <= k < number of points");
  const std::size_t dim = points[0].size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InvalidArgument("knn: inconsistent point dimensions");
    require_finite(p, "knn point");
  }

  std::vector<Hyperedge> hyper, graph;
  hyper.reserve(static_cast<std::size_t>(n));
  graph.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  std::vector<std::pair<double, int>> dist(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = points[static_cast<std::size_t>(i)][c] -
                            points[static_cast<std::size_t>(j)][c];
        d2 += diff * diff;
      }
      dist[static_cast<std::size_t>(j)] = {d2, j};
    }
    dist[static_cast<std::size_t>(i)].first = std::numeric_limits<double>::infinity();
    // (distance, index) order makes ties deterministic
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

    std::vector<int> members{i};
    for (int t = 0; t < k; ++t) {
      const int nb = dist[static_cast<std::size_t>(t)].second;
      members.push_back(nb);
      graph.push_back({{i, nb}, 1.0});
    }
    hyper.push_back({std::move(members), 1.0});
  }

  KnnStructures out;
  out.hypergraph = Hypergraph::build(n, std::move(hyper));
  out.graph = Hypergraph::build(n, std::move(graph));
  return out;
}

}  // namespace hyperheat
