#ifndef HYPERHEAT_DIFFUSION_HPP
#define HYPERHEAT_DIFFUSION_HPP

#include <span>
#include <vector>

#include "hyperheat/min_norm.hpp"
#include "hyperheat/potential.hpp"

namespace hyperheat {

struct DiffusionOptions {
  double tol = 1e-8;  // duality-gap tolerance handed to the min-norm oracle
  int oracle_max_rounds = 100000;
  // Store every iterate while n * (T + 1) fits the budget; beyond that only
  // checkpoints every ceil(T/100) steps (plus the final iterate) are kept.
  std::size_t iterate_budget = 1000000;
};

struct StepRecord {
  int t = 0;
  double potential = 0.0;  // U(x_t)
  double variance = 0.0;   // |x_t - pi(x_0)|_D^2
  double rayleigh = 0.0;   // U(x_t) / (variance/2); NaN once the iterate is constant
  double dual_gap = 0.0;   // min-norm oracle gap for the step taken from x_t
};

// Iterate history of a discrete-time heat diffusion run. The degree-weighted
// mean pi0 is conserved across steps and the variance sequence is
// non-increasing.
struct DiffusionTrace {
  std::vector<StepRecord> records;       // t = 0..T
  std::vector<VertexVector> iterates;    // iterates at t = 0, stride, 2*stride, ...
  int stride = 1;
  int steps = 0;  // T
  double pi0 = 0.0;
  VertexVector final_x;

  // Stored iterate at t, or nullptr when thinned away.
  const VertexVector* stored_iterate(int t) const;
};

class DiffusionAborted : public Error {
 public:
  DiffusionAborted(std::string message, DiffusionTrace partial, int step)
      : Error(std::move(message)), trace(std::move(partial)), failed_step(step) {}

  DiffusionTrace trace;  // trace up to the last completed step
  int failed_step;
};

// One discrete heat-diffusion step x - D^-1 L^D(x). Fixed point exactly when
// x is constant on every connected component. Unit step length.
VertexVector heat_step(const PotentialModel& model, std::span<const double> x,
                       double tol = 1e-8);

// T steps with per-step diagnostics. Warns (once, to stderr) when the model is
// disconnected. Oracle failures abort with the trace-to-date attached.
DiffusionTrace diffuse(const PotentialModel& model, std::span<const double> x0, int steps,
                       const DiffusionOptions& options = {});

// x_t for any t <= trace.steps, recomputing from the nearest stored checkpoint
// when the trace was thinned.
VertexVector trace_iterate(const PotentialModel& model, const DiffusionTrace& trace, int t,
                           double tol = 1e-8);

}  // namespace hyperheat

#endif  // HYPERHEAT_DIFFUSION_HPP
