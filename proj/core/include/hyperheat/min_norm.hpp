#ifndef HYPERHEAT_MIN_NORM_HPP
#define HYPERHEAT_MIN_NORM_HPP

#include <span>

#include "hyperheat/errors.hpp"
#include "hyperheat/subgradient.hpp"

namespace hyperheat {

struct MinNormOptions {
  // Stop when the Frank-Wolfe duality gap is <= tol * (1 + |z|^2_{D^-1}).
  double tol = 1e-8;
  int max_rounds = 100000;
  // Witnesses from a previous solve at a nearby point; snapped onto the
  // current faces where possible. A feasible start either way.
  const SubgradientCertificate* warm_start = nullptr;
};

struct MinNormResult {
  SubgradientCertificate certificate;
  double dual_gap = 0.0;
  double norm_d_inv_sq = 0.0;  // |z|^2_{D^-1} at the returned point
  int rounds = 0;
};

class ToleranceNotReached : public Error {
 public:
  ToleranceNotReached(MinNormResult best_so_far, int max_rounds)
      : Error("min_norm_subgradient: duality gap tolerance not reached after " +
              std::to_string(max_rounds) + " rounds"),
        best(std::move(best_so_far)) {}

  MinNormResult best;
};

// The minimum |.|_{D^-1}-norm element of L(x), solved over the product of
// per-hyperedge maximizing faces by Frank-Wolfe: each round runs every
// per-edge linear minimization oracle on the D^-1-weighted residual, takes a
// joint exactly-line-searched step, then exactly re-optimizes each l-inf
// block (two weighted simplex projections) to avoid boundary zig-zag.
// Termination is governed solely by the duality gap.
MinNormResult min_norm_subgradient(const PotentialModel& model, std::span<const double> x,
                                   const MinNormOptions& options = {});

}  // namespace hyperheat

#endif  // HYPERHEAT_MIN_NORM_HPP
