#ifndef HYPERHEAT_HYPERGRAPH_HPP
#define HYPERHEAT_HYPERGRAPH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hyperheat/vector_ops.hpp"

namespace hyperheat {

struct Hyperedge {
  std::vector<int> vertices;  // sorted, distinct after build
  double weight = 0.0;
};

// Weighted hypergraph over vertices [0, n). Immutable after build(); safe to
// share read-only across threads. Degrees d_i = sum of weights of incident
// hyperedges and the total volume are cached, as is a CSR vertex->edge
// incidence index.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates and canonicalizes: vertex lists are sorted and deduplicated,
  // hyperedges on the same vertex set are merged by summing weights, and the
  // result is emitted in lexicographic vertex-set order. Throws
  // EmptyHyperedge/SingletonHyperedge, NonpositiveWeight, VertexOutOfRange.
  static Hypergraph build(int n, std::vector<Hyperedge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<double>& degrees() const { return degrees_; }
  double degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
  double volume() const { return volume_; }
  std::size_t max_edge_size() const { return max_edge_size_; }
  bool two_uniform() const;

  // Ids of hyperedges incident to v.
  std::span<const std::size_t> incident_edges(int v) const {
    const auto b = incidence_off_[static_cast<std::size_t>(v)];
    const auto e = incidence_off_[static_cast<std::size_t>(v) + 1];
    return {incidence_.data() + b, e - b};
  }

 private:
  int n_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<double> degrees_;
  double volume_ = 0.0;
  std::vector<std::size_t> incidence_;
  std::vector<std::size_t> incidence_off_;
  std::size_t max_edge_size_ = 0;
};

// Cut (S, V\S) with its boundary weight w(dS) and conductance
// phi(S) = w(dS) / min{Vol(S), Vol(V\S)}. A hyperedge belongs to dS iff it has
// vertices on both sides.
struct CutProfile {
  std::vector<int> inside;  // sorted vertex ids of S
  double boundary_weight = 0.0;
  double conductance = 0.0;
};

// Throws DegenerateCut when S is empty, S = V, or min volume is 0.
CutProfile conductance(const Hypergraph& g, std::span<const int> subset);

// True iff the vertex-hyperedge incidence structure forms one connected
// component (isolated vertices count as their own components).
bool connected(const Hypergraph& g);

}  // namespace hyperheat

#endif  // HYPERHEAT_HYPERGRAPH_HPP
