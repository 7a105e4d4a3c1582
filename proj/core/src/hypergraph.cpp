#include "hyperheat/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "hyperheat/errors.hpp"

namespace hyperheat {

Hypergraph Hypergraph::build(int n, std::vector<Hyperedge> edges) {
  if (n < 1) throw InvalidArgument("Hypergraph::build: vertex count must be >= 1");

  std::map<std::vector<int>, double> merged;
  for (auto& e : edges) {
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw NonpositiveWeight("hyperedge weight must be a positive finite real");
    if (e.vertices.empty()) throw EmptyHyperedge("hyperedge with no vertices");
    for (int v : e.vertices) {
      if (v < 0 || v >= n)
        throw VertexOutOfRange("vertex id " + std::to_string(v) + " outside [0, " +
                               std::to_string(n) + ")");
    }
    std::sort(e.vertices.begin(), e.vertices.end());
    e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
    if (e.vertices.size() < 2)
      throw SingletonHyperedge("hyperedge must contain >= 2 distinct vertices");
    merged[std::move(e.vertices)] += e.weight;
  }

  Hypergraph g;
  g.n_ = n;
  g.edges_.reserve(merged.size());
  for (auto& [verts, w] : merged) g.edges_.push_back({verts, w});

  g.degrees_.assign(static_cast<std::size_t>(n), 0.0);
  std::size_t pins = 0;
  for (const auto& e : g.edges_) {
    g.max_edge_size_ = std::max(g.max_edge_size_, e.vertices.size());
    pins += e.vertices.size();
    for (int v : e.vertices) g.degrees_[static_cast<std::size_t>(v)] += e.weight;
  }
  g.volume_ = 0.0;
  for (double d : g.degrees_) g.volume_ += d;

  g.incidence_off_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : g.edges_)
    for (int v : e.vertices) ++g.incidence_off_[static_cast<std::size_t>(v) + 1];
  for (std::size_t i = 1; i < g.incidence_off_.size(); ++i)
    g.incidence_off_[i] += g.incidence_off_[i - 1];
  g.incidence_.resize(pins);
  std::vector<std::size_t> cursor(g.incidence_off_.begin(), g.incidence_off_.end() - 1);
  for (std::size_t ei = 0; ei < g.edges_.size(); ++ei)
    for (int v : g.edges_[ei].vertices) g.incidence_[cursor[static_cast<std::size_t>(v)]++] = ei;

  return g;
}

bool Hypergraph::two_uniform() const {
  for (const auto& e : edges_)
    if (e.vertices.size() != 2) return false;
  return true;
}

CutProfile conductance(const Hypergraph& g, std::span<const int> subset) {
  const int n = g.vertex_count();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : subset) {
    if (v < 0 || v >= n) throw VertexOutOfRange("cut subset vertex out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }

  // Both side volumes are accumulated separately in vertex order, so S and
  // its complement produce bitwise-identical {vol_in, vol_out} pairs.
  std::size_t inside_count = 0;
  double vol_in = 0.0;
  double vol_out = 0.0;
  for (int v = 0; v < n; ++v) {
    if (in[static_cast<std::size_t>(v)]) {
      ++inside_count;
      vol_in += g.degree(v);
    } else {
      vol_out += g.degree(v);
    }
  }
  if (inside_count == 0 || inside_count == static_cast<std::size_t>(n))
    throw DegenerateCut("conductance undefined for S empty or S = V");

  double boundary = 0.0;
  for (const auto& e : g.edges()) {
    std::size_t c = 0;
    for (int v : e.vertices) c += in[static_cast<std::size_t>(v)];
    if (c > 0 && c < e.vertices.size()) boundary += e.weight;
  }

  const double min_vol = std::min(vol_in, vol_out);
  if (min_vol <= 0.0) throw DegenerateCut("conductance undefined: one side has zero volume");

  CutProfile out;
  out.inside.assign(subset.begin(), subset.end());
  std::sort(out.inside.begin(), out.inside.end());
  out.inside.erase(std::unique(out.inside.begin(), out.inside.end()), out.inside.end());
  out.boundary_weight = boundary;
  out.conductance = boundary / min_vol;
  return out;
}

bool connected(const Hypergraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;

  std::vector<char> seen_v(static_cast<std::size_t>(n), 0);
  std::vector<char> seen_e(g.edge_count(), 0);
  std::vector<int> stack{0};
  seen_v[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (std::size_t ei : g.incident_edges(v)) {
      if (seen_e[ei]) continue;
      seen_e[ei] = 1;
      for (int u : g.edge(ei).vertices) {
        if (!seen_v[static_cast<std::size_t>(u)]) {
          seen_v[static_cast<std::size_t>(u)] = 1;
          ++visited;
          stack.push_back(u);
        }
      }
    }
  }
  return visited == static_cast<std::size_t>(n);
}

}  // namespace hyperheat
