#ifndef HYPERHEAT_SUBGRADIENT_HPP
#define HYPERHEAT_SUBGRADIENT_HPP

#include <span>
#include <vector>

#include "hyperheat/potential.hpp"
#include "hyperheat/vector_ops.hpp"

namespace hyperheat {

// Subgradient z of U at x together with the per-hyperedge dual witnesses
// proving membership: z = sum_h w_h f_h y_h with f_h = min_u |x_h - u 1|_h
// and y_h a maximizer of <y, x_h> over {y perp 1, |y|_{h,*} <= 1}.
// Hyperedges with f_h = 0 carry y_h = 0.
struct SubgradientCertificate {
  VertexVector z;
  std::vector<double> shift_values;            // f_h, indexed by hyperedge
  std::vector<std::vector<double>> witnesses;  // y_h in local edge coordinates

  // Recomputes z from the stored witnesses (exact by construction).
  static VertexVector scatter(const PotentialModel& model,
                              const std::vector<double>& shift_values,
                              const std::vector<std::vector<double>>& witnesses);
};

// Cheap deterministic member of L(x) = dU(x). The policy picks the witness on
// tied l-inf extrema: LowestIndex puts (e_max - e_min)/2 on the lowest-index
// argmax/argmin pair, Balanced spreads the same mass uniformly over the tied
// sets.
SubgradientCertificate any_subgradient(const PotentialModel& model, std::span<const double> x,
                                       WitnessPolicy policy = WitnessPolicy::LowestIndex);

}  // namespace hyperheat

#endif  // HYPERHEAT_SUBGRADIENT_HPP
