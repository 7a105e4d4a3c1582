#include "hyperheat/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hyperheat/errors.hpp"

namespace hyperheat {

namespace {

constexpr double kPi = 3.14159265358979323846;

void add_noise(std::vector<double>& p, double sigma, Rng& rng) {
  for (double& c : p) c += rng.normal(0.0, sigma);
}

std::vector<double> random_unit_vector(int dim, Rng& rng) {
  std::vector<double> v(static_cast<std::size_t>(dim));
  double nrm = 0.0;
  do {
    nrm = 0.0;
    for (double& c : v) {
      c = rng.normal();
      nrm += c * c;
    }
  } while (!(nrm > 0.0));
  nrm = std::sqrt(nrm);
  for (double& c : v) c /= nrm;
  return v;
}

std::vector<int> sample_distinct(int n, int count, Rng& rng) {
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < count)
    chosen.insert(static_cast<int>(rng.uniform_int(0, n - 1)));
  return {chosen.begin(), chosen.end()};
}

}  // namespace

LabeledPoints make_two_spirals(int per_community, Rng& rng) {
  LabeledPoints out;
  for (int side = 0; side < 2; ++side) {
    const double sign = side == 0 ? 3.0 : -3.0;
    for (int i = 0; i < per_community; ++i) {
      const double theta = rng.uniform(kPi / 2.0, 3.0 * kPi);
      std::vector<double> p{sign * theta * std::cos(theta), sign * theta * std::sin(theta)};
      add_noise(p, 1.0, rng);
      out.points.push_back(std::move(p));
      out.labels.push_back(side == 0 ? 1 : -1);
    }
  }
  return out;
}

LabeledPoints make_overlapping_rings(int per_community, Rng& rng) {
  LabeledPoints out;
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < per_community; ++i) {
      const double theta = rng.uniform(0.0, 2.0 * kPi);
      std::vector<double> p;
      if (side == 0) {
        p = {2.0 * std::cos(theta), 2.0 * std::sin(theta)};
      } else {
        p = {3.0 * std::cos(theta) + 3.0, 3.0 * std::sin(theta)};
      }
      add_noise(p, 0.2, rng);
      out.points.push_back(std::move(p));
      out.labels.push_back(side == 0 ? 1 : -1);
    }
  }
  return out;
}

LabeledPoints make_concentric_hyperspheres(int per_community, Rng& rng) {
  LabeledPoints out;
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < per_community; ++i) {
      std::vector<double> p = random_unit_vector(5, rng);
      if (side == 0) {
        for (double& c : p) c *= 2.0;
      } else {
        const double radius = 1.3 * std::pow(rng.uniform(), 0.2);  // uniform in the ball
        for (double& c : p) c *= radius;
      }
      add_noise(p, 0.1, rng);
      out.points.push_back(std::move(p));
      out.labels.push_back(side == 0 ? 1 : -1);
    }
  }
  return out;
}

LabeledPoints make_manifold(ManifoldKind kind, int per_community, Rng& rng) {
  switch (kind) {
    case ManifoldKind::TwoSpirals:
      return make_two_spirals(per_community, rng);
    case ManifoldKind::Rings:
      return make_overlapping_rings(per_community, rng);
    case ManifoldKind::Hyperspheres:
      return make_concentric_hyperspheres(per_community, rng);
  }
  throw InvalidArgument("make_manifold: unknown kind");
}

Hypergraph random_connected_hypergraph(int n, int extra_edges, int min_size, int max_size,
                                       Rng& rng) {
  if (n < 2) throw InvalidArgument("random_connected_hypergraph: need n >= 2");
  if (min_size < 2 || max_size < min_size || max_size > n)
    throw InvalidArgument("random_connected_hypergraph: bad size range");

  std::vector<Hyperedge> edges;
  int start = 0;
  while (start < n - 1) {
    const int size = static_cast<int>(rng.uniform_int(min_size, max_size));
    const int end = std::min(start + size, n);
    std::vector<int> verts;
    for (int v = start; v < end; ++v) verts.push_back(v);
    edges.push_back({std::move(verts), rng.uniform(0.5, 2.0)});
    start = end - 1;
  }
  for (int e = 0; e < extra_edges; ++e) {
    const int size = static_cast<int>(rng.uniform_int(min_size, max_size));
    edges.push_back({sample_distinct(n, size, rng), rng.uniform(0.5, 2.0)});
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph random_connected_graph(int n, int extra_edges, Rng& rng) {
  if (n < 2) throw InvalidArgument("random_connected_graph: need n >= 2");
  std::vector<Hyperedge> edges;
  for (int v = 1; v < n; ++v) {
    const int parent = static_cast<int>(rng.uniform_int(0, v - 1));
    edges.push_back({{parent, v}, rng.uniform(0.5, 2.0)});
  }
  for (int e = 0; e < extra_edges; ++e) {
    const int a = static_cast<int>(rng.uniform_int(0, n - 1));
    int b;
    do {
      b = static_cast<int>(rng.uniform_int(0, n - 1));
    } while (b == a);
    edges.push_back({{a, b}, rng.uniform(0.5, 2.0)});
  }
  return Hypergraph::build(n, std::move(edges));
}

PlantedPartition planted_two_cluster(int cluster_size, int edges_per_cluster,
                                     int crossing_edges, Rng& rng) {
  if (cluster_size < 4) throw InvalidArgument("planted_two_cluster: clusters too small");
  const int n = 2 * cluster_size;
  std::vector<Hyperedge> edges;

  for (int side = 0; side < 2; ++side) {
    const int base = side * cluster_size;
    // chain for connectivity inside the cluster
    for (int v = 0; v + 2 < cluster_size; v += 2)
      edges.push_back({{base + v, base + v + 1, base + v + 2}, 1.0});
    edges.push_back({{base + cluster_size - 2, base + cluster_size - 1, base}, 1.0});
    for (int e = 0; e < edges_per_cluster; ++e) {
      const int size = static_cast<int>(rng.uniform_int(3, 5));
      auto local = sample_distinct(cluster_size, size, rng);
      for (int& v : local) v += base;
      edges.push_back({std::move(local), 1.0});
    }
  }
  for (int e = 0; e < crossing_edges; ++e) {
    auto a = sample_distinct(cluster_size, 2, rng);
    auto b = sample_distinct(cluster_size, 2, rng);
    std::vector<int> verts{a[0], a[1], b[0] + cluster_size, b[1] + cluster_size};
    edges.push_back({std::move(verts), 1.0});
  }

  PlantedPartition out;
  out.hypergraph = Hypergraph::build(n, std::move(edges));
  out.cluster1.resize(static_cast<std::size_t>(cluster_size));
  for (int v = 0; v < cluster_size; ++v) out.cluster1[static_cast<std::size_t>(v)] = v;
  out.planted_phi =
      crossing_edges > 0 ? conductance(out.hypergraph, out.cluster1).conductance : 0.0;
  return out;
}

}  // namespace hyperheat
