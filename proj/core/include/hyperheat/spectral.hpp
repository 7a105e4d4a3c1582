#ifndef HYPERHEAT_SPECTRAL_HPP
#define HYPERHEAT_SPECTRAL_HPP

#include "hyperheat/hypergraph.hpp"

namespace hyperheat {

// Second-smallest generalized eigenvalue of the pencil (L, D) for a 2-uniform
// hypergraph with positive degrees. Dense solve; meant for desk-scale sizes.
double graph_pencil_lambda2(const Hypergraph& graph);

// Poincare constant of the l2 potential on a 2-uniform hypergraph, i.e.
// half the pencil eigenvalue above.
double graph_potential_lambda(const Hypergraph& graph);

// Heuristic lower bound for the Poincare constant of a general model: the l2
// clique-expansion value divided by the maximum hyperedge size. Only suitable
// for iteration budgets, not correctness claims; callers log it as heuristic.
double lambda_lower_heuristic(const Hypergraph& g);

}  // namespace hyperheat

#endif  // HYPERHEAT_SPECTRAL_HPP
