#include "hyperheat/subgradient.hpp"

namespace hyperheat {

VertexVector SubgradientCertificate::scatter(const PotentialModel& model,
                                             const std::vector<double>& shift_values,
                                             const std::vector<std::vector<double>>& witnesses) {
  const auto& g = model.hypergraph();
  VertexVector z(static_cast<std::size_t>(g.vertex_count()), 0.0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const double coef = g.edge(e).weight * shift_values[e];
    if (coef == 0.0) continue;
    const auto& verts = g.edge(e).vertices;
    const auto& y = witnesses[e];
    for (std::size_t i = 0; i < verts.size(); ++i)
      z[static_cast<std::size_t>(verts[i])] += coef * y[i];
  }
  return z;
}

SubgradientCertificate any_subgradient(const PotentialModel& model, std::span<const double> x,
                                       WitnessPolicy policy) {
  require_finite(x, "any_subgradient input");
  const auto& g = model.hypergraph();
  SubgradientCertificate cert;
  cert.shift_values.assign(g.edge_count(), 0.0);
  cert.witnesses.resize(g.edge_count());

  std::vector<double> local;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    model.gather(e, x, local);
    auto& y = cert.witnesses[e];
    y.assign(local.size(), 0.0);
    const double tie_eps = EdgeNorm::relative_tie_eps(local);
    cert.shift_values[e] = model.edge_norm(e).witness(local, policy, tie_eps, y);
  }
  cert.z = SubgradientCertificate::scatter(model, cert.shift_values, cert.witnesses);
  return cert;
}

}  // namespace hyperheat
