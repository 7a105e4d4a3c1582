#include "hyperheat/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hyperheat {

SweepResult sweep_cut(const Hypergraph& g, std::span<const double> x) {
  const int n = g.vertex_count();
  if (x.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("sweep_cut: vector length mismatch");
  require_finite(x, "sweep_cut input");

  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (!(*hi > *lo)) throw ConstantVector("sweep_cut: constant vector has no proper prefix");

  SweepResult out;
  out.ordering.resize(static_cast<std::size_t>(n));
  std::iota(out.ordering.begin(), out.ordering.end(), 0);
  std::stable_sort(out.ordering.begin(), out.ordering.end(), [&](int a, int b) {
    return x[static_cast<std::size_t>(a)] > x[static_cast<std::size_t>(b)];
  });

  // Incremental boundary: a hyperedge is cut while its inside-counter is
  // strictly between 0 and |h|.
  std::vector<std::size_t> inside(g.edge_count(), 0);
  double boundary = 0.0;
  double vol_in = 0.0;
  const double vol = g.volume();

  double best_phi = std::numeric_limits<double>::infinity();
  int best_rank = -1;
  double best_boundary = 0.0;
  out.profile.reserve(static_cast<std::size_t>(n - 1));

  for (int rank = 1; rank < n; ++rank) {
    const int v = out.ordering[static_cast<std::size_t>(rank - 1)];
    vol_in += g.degree(v);
    for (std::size_t ei : g.incident_edges(v)) {
      const std::size_t size = g.edge(ei).vertices.size();
      if (inside[ei] == 0) boundary += g.edge(ei).weight;
      ++inside[ei];
      if (inside[ei] == size) boundary -= g.edge(ei).weight;
    }
    const double min_vol = std::min(vol_in, vol - vol_in);
    const double phi =
        min_vol > 0.0 ? boundary / min_vol : std::numeric_limits<double>::infinity();
    out.profile.push_back({rank, v, phi});
    if (phi < best_phi) {
      best_phi = phi;
      best_rank = rank;
      best_boundary = boundary;
    }
  }

  if (best_rank < 0) throw DegenerateCut("sweep_cut: every prefix has a zero-volume side");
  out.phi = best_phi;
  out.boundary_weight = best_boundary;
  out.best_set.assign(out.ordering.begin(), out.ordering.begin() + best_rank);
  std::sort(out.best_set.begin(), out.best_set.end());
  return out;
}

SweepResult local_partition(const PotentialModel& model, int seed_vertex, double phi_target,
                            const LocalPartitionOptions& options) {
  const auto& g = model.hypergraph();
  if (seed_vertex < 0 || seed_vertex >= g.vertex_count())
    throw VertexOutOfRange("local_partition: seed vertex out of range");
  if (!(phi_target > 0.0) || phi_target > 1.0)
    throw InvalidArgument("local_partition: phi_target must lie in (0, 1]");

  const int steps = static_cast<int>(std::ceil(1.0 / (3.0 * phi_target)));
  VertexVector x0(static_cast<std::size_t>(g.vertex_count()), 0.0);
  x0[static_cast<std::size_t>(seed_vertex)] = 1.0;

  DiffusionOptions dopt;
  dopt.tol = options.tol;
  const DiffusionTrace trace = diffuse(model, x0, steps, dopt);

  // Step with the smallest Rayleigh quotient among t in [1, T]; iterates that
  // already collapsed to a constant are skipped (their quotient is NaN).
  int best_t = -1;
  double best_q = std::numeric_limits<double>::infinity();
  for (int t = 1; t <= trace.steps; ++t) {
    const double q = trace.records[static_cast<std::size_t>(t)].rayleigh;
    if (std::isfinite(q) && q < best_q) {
      best_q = q;
      best_t = t;
    }
  }

  VertexVector chosen;
  int chosen_t;
  if (best_t >= 0) {
    chosen = trace_iterate(model, trace, best_t, options.tol);
    chosen_t = best_t;
  } else {
    chosen = x0;  // diffusion collapsed immediately; round the seed indicator
    chosen_t = 0;
  }
  SweepResult cut = sweep_cut(g, chosen);
  cut.selected_step = chosen_t;
  return cut;
}

}  // namespace hyperheat
