#ifndef HYPERHEAT_DATASETS_HPP
#define HYPERHEAT_DATASETS_HPP

#include <vector>

#include "hyperheat/hypergraph.hpp"
#include "hyperheat/rng.hpp"

namespace hyperheat {

struct LabeledPoints {
  std::vector<std::vector<double>> points;
  std::vector<int> labels;  // +1 community 1, -1 community 2
};

enum class ManifoldKind { TwoSpirals, Rings, Hyperspheres };

// Two interlocking spirals in R^2: (+-3 theta cos theta, +-3 theta sin theta)
// for theta in [pi/2, 3 pi], additive N(0, 1) noise per coordinate.
LabeledPoints make_two_spirals(int per_community, Rng& rng);

// Overlapping rings in R^2: radius 2 at the origin vs radius 3 centered at
// (3, 0), additive N(0, 0.2) noise.
LabeledPoints make_overlapping_rings(int per_community, Rng& rng);

// Concentric communities in R^5: the sphere |x| = 2 vs the ball |x| <= 1.3,
// additive N(0, 0.1) noise.
LabeledPoints make_concentric_hyperspheres(int per_community, Rng& rng);

LabeledPoints make_manifold(ManifoldKind kind, int per_community, Rng& rng);

// Connected instance: a chain of overlapping hyperedges covering all vertices
// plus `extra_edges` random ones; sizes in [min_size, max_size], weights in
// [0.5, 2).
Hypergraph random_connected_hypergraph(int n, int extra_edges, int min_size, int max_size,
                                       Rng& rng);

// Connected 2-uniform instance: a random spanning tree plus extra edges.
Hypergraph random_connected_graph(int n, int extra_edges, Rng& rng);

struct PlantedPartition {
  Hypergraph hypergraph;
  std::vector<int> cluster1;  // vertices [0, cluster_size)
  double planted_phi = 0.0;   // conductance of cluster1 (0 when no crossings)
};

// Two dense clusters of equal size joined by `crossing_edges` hyperedges that
// straddle both sides (2 + 2 vertices each). crossing_edges = 0 gives a
// disconnected instance with planted_phi = 0.
PlantedPartition planted_two_cluster(int cluster_size, int edges_per_cluster,
                                     int crossing_edges, Rng& rng);

}  // namespace hyperheat

#endif  // HYPERHEAT_DATASETS_HPP
