#include "hyperheat/diffusion.hpp"

#include <cmath>
#include <iostream>
#include <limits>

namespace hyperheat {

namespace {

void apply_update(const Hypergraph& g, std::span<const double> z, VertexVector& x) {
  const auto& deg = g.degrees();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (deg[i] > 0.0) x[i] -= z[i] / deg[i];
}

StepRecord make_record(const PotentialModel& model, int t, std::span<const double> x,
                       double pi0) {
  const auto& g = model.hypergraph();
  StepRecord rec;
  rec.t = t;
  rec.potential = base_potential(model, x);
  double var = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double c = x[i] - pi0;
    var += g.degrees()[i] * c * c;
  }
  rec.variance = var;
  rec.rayleigh = var > 0.0 ? rec.potential / (0.5 * var)
                           : std::numeric_limits<double>::quiet_NaN();
  return rec;
}

}  // namespace

const VertexVector* DiffusionTrace::stored_iterate(int t) const {
  if (t < 0 || t > steps) return nullptr;
  if (t == steps) return &final_x;
  if (t % stride != 0) return nullptr;
  const std::size_t idx = static_cast<std::size_t>(t / stride);
  return idx < iterates.size() ? &iterates[idx] : nullptr;
}

VertexVector heat_step(const PotentialModel& model, std::span<const double> x, double tol) {
  MinNormOptions opts;
  opts.tol = tol;
  const MinNormResult res = min_norm_subgradient(model, x, opts);
  VertexVector next(x.begin(), x.end());
  apply_update(model.hypergraph(), res.certificate.z, next);
  return next;
}

DiffusionTrace diffuse(const PotentialModel& model, std::span<const double> x0, int steps,
                       const DiffusionOptions& options) {
  if (steps < 0) throw InvalidArgument("diffuse: steps must be >= 0");
  require_finite(x0, "diffuse start");
  const auto& g = model.hypergraph();
  if (x0.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InvalidArgument("diffuse: start vector length mismatch");
  if (!connected(g))
    std::cerr << "hyperheat: warning: diffusing on a disconnected hypergraph; "
                 "convergence holds per component only\n";

  DiffusionTrace trace;
  trace.steps = steps;
  trace.pi0 = degree_mean(x0, g.degrees(), g.volume());
  const std::size_t cells =
      static_cast<std::size_t>(g.vertex_count()) * (static_cast<std::size_t>(steps) + 1);
  trace.stride = cells <= options.iterate_budget ? 1 : std::max(1, (steps + 99) / 100);

  MinNormOptions oracle;
  oracle.tol = options.tol;
  oracle.max_rounds = options.oracle_max_rounds;

  VertexVector x(x0.begin(), x0.end());
  SubgradientCertificate previous;
  for (int t = 0; t <= steps; ++t) {
    if (t % trace.stride == 0) trace.iterates.push_back(x);
    StepRecord rec = make_record(model, t, x, trace.pi0);
    if (t == steps) {
      trace.records.push_back(rec);
      break;
    }
    oracle.warm_start = t > 0 ? &previous : nullptr;
    MinNormResult step;
    try {
      step = min_norm_subgradient(model, x, oracle);
    } catch (const ToleranceNotReached& e) {
      trace.records.push_back(rec);
      trace.steps = t;
      trace.final_x = x;
      throw DiffusionAborted(std::string("diffuse: step ") + std::to_string(t) + ": " +
                                 e.what(),
                             std::move(trace), t);
    }
    rec.dual_gap = step.dual_gap;
    trace.records.push_back(rec);
    apply_update(g, step.certificate.z, x);
    previous = std::move(step.certificate);
  }
  trace.final_x = std::move(x);
  return trace;
}

VertexVector trace_iterate(const PotentialModel& model, const DiffusionTrace& trace, int t,
                           double tol) {
  if (t < 0 || t > trace.steps) throw InvalidArgument("trace_iterate: step out of range");
  if (const VertexVector* stored = trace.stored_iterate(t)) return *stored;
  const int base = (t / trace.stride) * trace.stride;
  const VertexVector* start = trace.stored_iterate(base);
  if (start == nullptr) throw InvalidArgument("trace_iterate: missing checkpoint");
  VertexVector x = *start;
  for (int s = base; s < t; ++s) x = heat_step(model, x, tol);
  return x;
}

}  // namespace hyperheat
