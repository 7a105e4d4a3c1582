#include "hyperheat/resolvent.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <memory>

#include "hyperheat/spectral.hpp"

namespace hyperheat {

namespace {

struct ProxSetup {
  std::unique_ptr<ProxOperator> prox;
  double ell = 0.0;
  double u = 0.0;
};

ProxSetup build_prox(const PotentialModel& model, double lambda, double epsilon,
                     const ResolventOptions& options) {
  const auto& g = model.hypergraph();
  ProxSetup setup;
  if (options.prox == ProxChoice::Degree) {
    double lower;
    if (options.lambda_lower) {
      lower = *options.lambda_lower;
    } else {
      lower = lambda_lower_heuristic(g);
      std::cerr << "hyperheat: note: using heuristic Poincare lower bound " << lower
                << " for the iteration budget\n";
    }
    setup.ell = lower + lambda;
    setup.u = 1.0 + lambda;
    if (!(setup.ell > 0.0))
      throw NonpositiveConstants(
          "resolvent: lambda + Poincare lower bound must be positive; pass a lambda_lower");
    setup.prox = make_degree_prox(g, setup.ell, setup.u);
    return setup;
  }

  // Clique-expansion geometry. Per-norm comparison of the shift-minimized
  // value against the pairwise quadratic gives the constants; Lovasz norms
  // are not covered by these bounds.
  double c_up = 0.0;
  double c_low = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const double r = static_cast<double>(g.edge(e).vertices.size());
    switch (model.edge_norm(e).kind()) {
      case NormKind::LInf:
        c_up = std::max(c_up, 0.25);
        c_low = std::min(c_low, 1.0 / (2.0 * r * (r - 1.0)));
        break;
      case NormKind::L2:
        c_up = std::max(c_up, 0.5);
        c_low = std::min(c_low, 1.0 / r);
        break;
      case NormKind::Lovasz:
        throw InvalidArgument("clique prox geometry supports l-inf and l2 norms only");
    }
  }
  if (g.edge_count() == 0) throw InvalidArgument("clique prox needs at least one hyperedge");
  setup.u = std::max(c_up, lambda / epsilon);
  setup.ell = std::min(c_low, lambda > 0.0 ? lambda / epsilon
                                           : std::numeric_limits<double>::infinity());
  if (!(setup.ell > 0.0) || !std::isfinite(setup.ell)) setup.ell = c_low;
  setup.prox = std::make_unique<CliqueProx>(g, epsilon, setup.ell, setup.u);
  return setup;
}

ResolventSolution solve_impl(const PotentialModel& model, double lambda,
                             std::span<const double> s, double epsilon,
                             const ResolventOptions& options, bool last_iterate) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw InvalidEpsilon("resolvent: epsilon must lie in (0, 1)");
  if (lambda < 0.0) throw InvalidArgument("resolvent: lambda must be >= 0");
  require_finite(s, "resolvent seed");
  const auto& g = model.hypergraph();
  if (s.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InvalidArgument("resolvent: seed length mismatch");
  if (!connected(g)) throw DisconnectedGraph("resolvent: hypergraph must be connected");

  double seed_sum = 0.0;
  double seed_abs = 0.0;
  for (double v : s) {
    seed_sum += v;
    seed_abs += std::abs(v);
  }
  if (lambda == 0.0 && std::abs(seed_sum) > 1e-12 * (1.0 + seed_abs))
    throw UnboundedObjective("resolvent: unbounded (lambda = 0 with <s, 1> != 0)");

  // Working seed with <s, 1> = 0 so D^-1-preconditioned iterates stay
  // D-orthogonal to the ones vector.
  VertexVector s_perp(s.begin(), s.end());
  const double shift = seed_sum / g.volume();
  for (std::size_t i = 0; i < s_perp.size(); ++i) s_perp[i] -= shift * g.degrees()[i];

  ProxSetup prox = build_prox(model, lambda, epsilon, options);

  const auto& deg = g.degrees();
  SubgradientOracle oracle = [&](const VertexVector& x) {
    VertexVector z;
    if (options.oracle == OracleChoice::Any) {
      z = any_subgradient(model, x).z;
    } else {
      MinNormOptions mo;
      mo.tol = options.oracle_tol;
      z = min_norm_subgradient(model, x, mo).certificate.z;
    }
    if (lambda > 0.0)
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += lambda * deg[i] * x[i];
    return z;
  };
  ObjectiveFn objective = [&](const VertexVector& x) {
    double f = base_potential(model, x);
    if (lambda > 0.0) f += 0.5 * lambda * norm_weighted_sq(x, deg);
    return f;
  };

  OmdOptions omd;
  omd.iteration_override = options.iteration_override;
  omd.last_iterate = last_iterate;
  omd.record_history = options.record_history;
  omd.early_stop_threshold = options.early_stop_threshold;
  OmdResult inner = omd_minimize(oracle, objective, s_perp, *prox.prox, epsilon, omd);

  ResolventSolution out;
  out.x = std::move(inner.x);
  if (lambda > 0.0) {
    const double c = seed_sum / (lambda * g.volume());
    for (double& v : out.x) v += c;
  }
  out.objective = objective(out.x) - dot(s, out.x);
  out.iterations = inner.iterations;
  out.budget = inner.budget;
  out.eta = inner.eta;
  out.epsilon = epsilon;
  out.lambda = lambda;
  out.ell = prox.ell;
  out.u = prox.u;
  out.history = std::move(inner.history);
  return out;
}

}  // namespace

ResolventSolution resolvent_solve(const PotentialModel& model, double lambda,
                                  std::span<const double> s, double epsilon,
                                  const ResolventOptions& options) {
  return solve_impl(model, lambda, s, epsilon, options, false);
}

ResolventSolution last_iterate_heuristic(const PotentialModel& model, double lambda,
                                         std::span<const double> s, double epsilon,
                                         const ResolventOptions& options) {
  return solve_impl(model, lambda, s, epsilon, options, true);
}

PprResult ppr(const PotentialModel& model, double alpha, std::span<const double> s,
              double epsilon, const ResolventOptions& options) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw InvalidArgument("ppr: alpha must lie in (0, 1)");
  const double lam = 2.0 * alpha / (1.0 - alpha);

  VertexVector scaled(s.begin(), s.end());
  scale(scaled, lam);

  PprResult out;
  out.solution = resolvent_solve(model, lam, scaled, epsilon, options);

  const auto& g = model.hypergraph();
  out.p.resize(out.solution.x.size());
  for (std::size_t i = 0; i < out.p.size(); ++i)
    out.p[i] = g.degrees()[i] * out.solution.x[i];

  MinNormOptions mo;
  mo.tol = options.oracle_tol;
  MinNormResult cert = min_norm_subgradient(model, out.solution.x, mo);

  out.residual.residual.resize(out.p.size());
  for (std::size_t i = 0; i < out.p.size(); ++i)
    out.residual.residual[i] = s[i] - out.p[i] - cert.certificate.z[i] / lam;
  out.residual.norm = norm2(out.residual.residual);
  out.residual.certificate = std::move(cert);
  return out;
}

SeriesResult graph_resolvent_series(const Hypergraph& graph, double lambda,
                                    std::span<const double> s, int terms) {
  if (!graph.two_uniform())
    throw InvalidArgument("graph_resolvent_series: input must be 2-uniform");
  if (lambda < 0.0) throw InvalidArgument("graph_resolvent_series: lambda must be >= 0");
  if (terms < 1) throw InvalidArgument("graph_resolvent_series: need at least one term");
  require_finite(s, "series seed");

  const auto& deg = graph.degrees();
  const std::size_t n = static_cast<std::size_t>(graph.vertex_count());
  VertexVector cur(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) cur[i] = deg[i] > 0.0 ? s[i] / deg[i] : 0.0;

  const double coef = 1.0 / (lambda + 2.0);
  const double ratio = 2.0 / (lambda + 2.0);
  double pw = 1.0;

  SeriesResult out;
  out.terms = terms;
  out.x.assign(n, 0.0);
  VertexVector lap(n);
  for (int k = 0; k < terms; ++k) {
    axpy(coef * pw, cur, out.x);
    pw *= ratio;
    if (k + 1 < terms) {
      // cur <- (I - D^-1 L / 2) cur
      std::fill(lap.begin(), lap.end(), 0.0);
      for (const auto& e : graph.edges()) {
        const auto i = static_cast<std::size_t>(e.vertices[0]);
        const auto j = static_cast<std::size_t>(e.vertices[1]);
        const double d = e.weight * (cur[i] - cur[j]);
        lap[i] += d;
        lap[j] -= d;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (deg[i] > 0.0) cur[i] -= 0.5 * lap[i] / deg[i];
    }
  }
  out.tail_bound = pw;
  return out;
}

}  // namespace hyperheat
