#include <cmath>

#include "hyperheat/diffusion.hpp"
#include "hyperheat/potential.hpp"
#include "hyperheat/rng.hpp"

namespace hyperheat {

LambdaEstimate estimate_lambda(const PotentialModel& model, int iterations, int restarts,
                               std::uint64_t seed) {
  if (iterations < 0 || restarts < 1)
    throw InvalidArgument("estimate_lambda: need iterations >= 0 and restarts >= 1");
  const auto& g = model.hypergraph();
  if (!connected(g)) throw DisconnectedGraph("estimate_lambda: hypergraph is disconnected");

  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  LambdaEstimate est;
  est.value = 1.0;  // Rayleigh quotients never exceed 1 under the norm bound
  est.iterations = iterations;
  est.restarts = restarts;

  const Rng master(seed);
  for (int k = 0; k < restarts; ++k) {
    Rng rng = master.fork(static_cast<std::uint64_t>(k));
    VertexVector x(n);
    double var = 0.0;
    do {
      for (auto& v : x) v = rng.normal();
      const double mean = degree_mean(x, g.degrees(), g.volume());
      for (auto& v : x) v -= mean;
      var = norm_weighted_sq(x, g.degrees());
    } while (!(var > 0.0));

    for (int t = 0; t <= iterations; ++t) {
      try {
        est.value = std::min(est.value, rayleigh(model, x));
      } catch (const ConstantVector&) {
        break;  // fully mixed; later iterates stay constant
      }
      if (t < iterations) x = heat_step(model, x);
    }
  }
  return est;
}

}  // namespace hyperheat
