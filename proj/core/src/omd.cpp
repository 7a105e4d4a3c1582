#include "hyperheat/omd.hpp"

#include <cmath>

#include "hyperheat/errors.hpp"

namespace hyperheat {

OmdResult omd_minimize(const SubgradientOracle& oracle, const ObjectiveFn& objective,
                       std::span<const double> s, const ProxOperator& prox, double epsilon,
                       const OmdOptions& options) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw InvalidEpsilon("omd_minimize: epsilon must lie in (0, 1)");
  require_finite(s, "omd seed");

  const std::size_t n = s.size();
  const double eta = epsilon / (2.0 * prox.u());

  int budget;
  if (options.iteration_override) {
    budget = *options.iteration_override;
    if (budget < 1) throw InvalidArgument("omd_minimize: iteration override must be >= 1");
  } else {
    budget = static_cast<int>(std::ceil(4.0 * prox.u() / (prox.ell() * epsilon * epsilon)));
  }

  VertexVector shift(n, 0.0);  // eta R^-1 s, fixed across iterations
  prox.apply_inverse(s, shift);
  scale(shift, eta);

  OmdResult res;
  res.eta = eta;
  res.budget = budget;

  VertexVector x(n, 0.0);
  VertexVector x_hat(n), sum_hat(n, 0.0), step(n), prev_x(n, 0.0);
  int done = 0;
  for (int t = 0; t < budget; ++t) {
    x_hat = x;
    axpy(1.0, shift, x_hat);

    if (options.record_history)
      res.history.push_back(objective(x_hat) - dot(s, x_hat));

    const VertexVector z = oracle(x_hat);
    prox.apply_inverse(z, step);
    prev_x = x;
    x = x_hat;
    axpy(-eta, step, x);

    axpy(1.0, x_hat, sum_hat);
    ++done;

    if (options.early_stop_threshold) {
      VertexVector diff = x;
      axpy(-1.0, prev_x, diff);
      if (prox.quadratic(diff) < *options.early_stop_threshold) break;
    }
  }
  res.iterations = done;

  if (options.last_iterate) {
    res.x = std::move(x_hat);
  } else {
    res.x = std::move(sum_hat);
    scale(res.x, (1.0 - epsilon / 2.0) / static_cast<double>(std::max(done, 1)));
  }
  res.objective = objective(res.x) - dot(s, res.x);
  return res;
}

}  // namespace hyperheat
