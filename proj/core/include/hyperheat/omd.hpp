#ifndef HYPERHEAT_OMD_HPP
#define HYPERHEAT_OMD_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hyperheat/prox.hpp"
#include "hyperheat/vector_ops.hpp"

namespace hyperheat {

// z in dF(x) for the squared norm being minimized.
using SubgradientOracle = std::function<VertexVector(const VertexVector&)>;
// F(x) itself, used for objective histories and the returned value.
using ObjectiveFn = std::function<double(const VertexVector&)>;

struct OmdOptions {
  std::optional<int> iteration_override;  // default T = ceil(4 u / (ell eps^2))
  bool last_iterate = false;              // return the final hat-iterate, unscaled
  bool record_history = false;            // objective at every hat-iterate
  // Optional early stop |x_t - x_{t-1}|_R^2 < threshold.
  std::optional<double> early_stop_threshold;
};

struct OmdResult {
  VertexVector x;
  double objective = 0.0;  // F(x) - <s, x> at the returned point
  int iterations = 0;      // iterations actually run
  int budget = 0;          // iteration budget T
  double eta = 0.0;
  std::vector<double> history;  // objective at hat-x_t when recorded
};

// Optimistic mirror descent for min F(x) - <s, x> where F = (1/2)|.|^2 for a
// possibly non-smooth norm bounded by the prox geometry:
//   x_0 = 0,  eta = eps / (2 u_R),
//   hat-x_t = x_t + eta R^-1 s,
//   x_{t+1} = hat-x_t - eta R^-1 z_t,   z_t in dF(hat-x_t),
//   output (1 - eps/2) * mean(hat-x_t)   [or the last hat-iterate].
// At the default budget the averaged output is a multiplicative
// eps-approximation of the (non-positive) optimum.
OmdResult omd_minimize(const SubgradientOracle& oracle, const ObjectiveFn& objective,
                       std::span<const double> s, const ProxOperator& prox, double epsilon,
                       const OmdOptions& options = {});

}  // namespace hyperheat

#endif  // HYPERHEAT_OMD_HPP
