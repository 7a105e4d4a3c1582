#ifndef HYPERHEAT_POTENTIAL_HPP
#define HYPERHEAT_POTENTIAL_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hyperheat/edge_norm.hpp"
#include "hyperheat/hypergraph.hpp"

namespace hyperheat {

// A hypergraph together with one norm per hyperedge and an optional quadratic
// regularizer lambda >= 0. Defines the potential
//   U(x) = 1/2 sum_h w_h (min_u |x_h - u 1|_h)^2
// evaluated as potential() = U(x) + (lambda/2) |x|_D^2.
// Immutable in practice once handed to solvers; all operations on it are
// const and safe to share across threads.
class PotentialModel {
 public:
  PotentialModel(std::shared_ptr<const Hypergraph> g, EdgeNorm default_norm,
                 double lambda = 0.0);

  const Hypergraph& hypergraph() const { return *g_; }
  std::shared_ptr<const Hypergraph> hypergraph_ptr() const { return g_; }
  double lambda() const { return lambda_; }

  const EdgeNorm& edge_norm(std::size_t e) const { return norms_[e]; }
  // Per-edge override; Lovasz norms must match the hyperedge size.
  void set_edge_norm(std::size_t e, EdgeNorm norm);

  // Gathers x restricted to hyperedge e into out (sized to the edge).
  void gather(std::size_t e, std::span<const double> x, std::vector<double>& out) const;

 private:
  std::shared_ptr<const Hypergraph> g_;
  std::vector<EdgeNorm> norms_;
  double lambda_ = 0.0;
};

// U(x) plus the (lambda/2)|x|_D^2 term when the model carries lambda > 0.
double potential(const PotentialModel& model, std::span<const double> x);

// U(x) alone, ignoring the model's regularizer.
double base_potential(const PotentialModel& model, std::span<const double> x);

// U(x) / ((1/2) |x - pi(x)|_D^2) evaluated after projecting out the
// degree-weighted mean. For connected models the value lies in (0, 1].
// Throws ConstantVector when x - pi(x) vanishes.
double rayleigh(const PotentialModel& model, std::span<const double> x);

struct LambdaEstimate {
  double value = 0.0;      // min Rayleigh quotient observed
  int iterations = 0;
  int restarts = 0;
};

// Running minimum of the Rayleigh quotient along heat-diffusion traces from
// random degree-orthogonal starts. An observed upper bound on the Poincare
// constant: usable for reporting and step budgets, never for correctness
// claims. Throws DisconnectedGraph.
LambdaEstimate estimate_lambda(const PotentialModel& model, int iterations, int restarts,
                               std::uint64_t seed);

}  // namespace hyperheat

#endif  // HYPERHEAT_POTENTIAL_HPP
