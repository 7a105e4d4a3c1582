#ifndef HYPERHEAT_RESOLVENT_HPP
#define HYPERHEAT_RESOLVENT_HPP

#include <optional>
#include <span>

#include "hyperheat/min_norm.hpp"
#include "hyperheat/omd.hpp"
#include "hyperheat/potential.hpp"

namespace hyperheat {

enum class OracleChoice { Any, MinNorm };
enum class ProxChoice { Degree, Clique };

struct ResolventOptions {
  OracleChoice oracle = OracleChoice::Any;
  ProxChoice prox = ProxChoice::Degree;
  // Lower bound on the model's Poincare constant, used for the iteration
  // budget. Falls back to the clique-expansion heuristic when absent.
  std::optional<double> lambda_lower;
  std::optional<int> iteration_override;
  std::optional<double> early_stop_threshold;
  bool record_history = false;
  double oracle_tol = 1e-8;  // min-norm oracle gap tolerance
};

struct ResolventSolution {
  VertexVector x;
  double objective = 0.0;  // U(x) + (lambda/2)|x|_D^2 - <s, x>
  int iterations = 0;
  int budget = 0;
  double eta = 0.0;
  double epsilon = 0.0;
  double lambda = 0.0;
  double ell = 0.0;  // prox constants actually used
  double u = 0.0;
  std::vector<double> history;  // working-subspace objective per iteration
};

// Approximate minimizer of U(x) + (lambda/2)|x|_D^2 - <s, x> over R^V for a
// connected hypergraph. The seed is projected so iterates stay D-orthogonal
// to the ones vector (s <- s - (<s,1>/Vol) D 1, which leaves <s, x> unchanged
// on that subspace); the mean component (<s,1>/(lambda Vol)) 1 is added back
// when lambda > 0. Default budget gives a multiplicative epsilon
// approximation. Throws UnboundedObjective when lambda = 0 and <s,1> != 0,
// and DisconnectedGraph otherwise as appropriate.
ResolventSolution resolvent_solve(const PotentialModel& model, double lambda,
                                  std::span<const double> s, double epsilon,
                                  const ResolventOptions& options = {});

// Same loop and step size, but returns the final hat-iterate unscaled instead
// of the averaged output. Comparison baseline for the benchmark harness; no
// approximation guarantee.
ResolventSolution last_iterate_heuristic(const PotentialModel& model, double lambda,
                                         std::span<const double> s, double epsilon,
                                         const ResolventOptions& options = {});

// Residual of the personalized-PageRank fixed point
// p + ((1-alpha)/(2 alpha)) L(D^-1 p) - s evaluated with a min-norm
// certificate z at D^-1 p.
struct FixedPointResidual {
  VertexVector residual;
  double norm = 0.0;  // l2
  MinNormResult certificate;
};

struct PprResult {
  VertexVector p;  // PageRank vector, p = D x
  ResolventSolution solution;
  FixedPointResidual residual;
};

// Personalized PageRank via the resolvent at lambda = 2 alpha / (1 - alpha)
// with seed scaled by the same factor.
PprResult ppr(const PotentialModel& model, double alpha, std::span<const double> s,
              double epsilon, const ResolventOptions& options = {});

struct SeriesResult {
  VertexVector x;
  int terms = 0;
  double tail_bound = 0.0;  // (2/(lambda+2))^K
};

// Truncated geometric series for the 2-uniform resolvent (lambda D + L)^-1 s:
// (1/(lambda+2)) sum_{k<K} (2/(lambda+2))^k (I - D^-1 L / 2)^k D^-1 s.
SeriesResult graph_resolvent_series(const Hypergraph& graph, double lambda,
                                    std::span<const double> s, int terms);

}  // namespace hyperheat

#endif  // HYPERHEAT_RESOLVENT_HPP
