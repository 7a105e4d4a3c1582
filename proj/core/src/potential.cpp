#include "hyperheat/potential.hpp"

#include <cmath>
#include <string>

#include "hyperheat/errors.hpp"
#include "hyperheat/vector_ops.hpp"

namespace hyperheat {

PotentialModel::PotentialModel(std::shared_ptr<const Hypergraph> g, EdgeNorm default_norm,
                               double lambda)
    : g_(std::move(g)), lambda_(lambda) {
  if (!g_) throw InvalidArgument("PotentialModel: null hypergraph");
  if (lambda_ < 0.0) throw InvalidArgument("PotentialModel: lambda must be >= 0");
  if (default_norm.kind() == NormKind::Lovasz) {
    for (const auto& e : g_->edges()) {
      if (static_cast<int>(e.vertices.size()) != default_norm.cut().ground_size())
        throw InvalidArgument(
            "PotentialModel: Lovasz default norm ground size does not match every hyperedge");
    }
  }
  norms_.assign(g_->edge_count(), default_norm);
}

void PotentialModel::set_edge_norm(std::size_t e, EdgeNorm norm) {
  if (e >= norms_.size()) throw InvalidArgument("set_edge_norm: edge id out of range");
  if (norm.kind() == NormKind::Lovasz &&
      norm.cut().ground_size() != static_cast<int>(g_->edge(e).vertices.size()))
    throw InvalidArgument("set_edge_norm: cut function ground size " +
                          std::to_string(norm.cut().ground_size()) +
                          " does not match hyperedge size");
  norms_[e] = std::move(norm);
}

void PotentialModel::gather(std::size_t e, std::span<const double> x,
                            std::vector<double>& out) const {
  const auto& verts = g_->edge(e).vertices;
  out.resize(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    out[i] = x[static_cast<std::size_t>(verts[i])];
}

double base_potential(const PotentialModel& model, std::span<const double> x) {
  const auto& g = model.hypergraph();
  std::vector<double> local;
  double total = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    model.gather(e, x, local);
    const double f = model.edge_norm(e).min_shift(local);
    total += g.edge(e).weight * f * f;
  }
  return 0.5 * total;
}

double potential(const PotentialModel& model, std::span<const double> x) {
  double value = base_potential(model, x);
  if (model.lambda() > 0.0)
    value += 0.5 * model.lambda() * norm_weighted_sq(x, model.hypergraph().degrees());
  return value;
}

double rayleigh(const PotentialModel& model, std::span<const double> x) {
  const auto& g = model.hypergraph();
  const double mean = degree_mean(x, g.degrees(), g.volume());
  std::vector<double> centered(x.begin(), x.end());
  for (double& v : centered) v -= mean;
  const double var = norm_weighted_sq(centered, g.degrees());
  const double scale = norm_weighted_sq(x, g.degrees());
  if (var <= 1e-24 * (1.0 + scale))
    throw ConstantVector("rayleigh: x - pi(x) vanishes");
  return base_potential(model, centered) / (0.5 * var);
}

}  // namespace hyperheat
