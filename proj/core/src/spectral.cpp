#include "hyperheat/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "hyperheat/conversions.hpp"
#include "hyperheat/errors.hpp"

namespace hyperheat {

double graph_pencil_lambda2(const Hypergraph& graph) {
  if (!graph.two_uniform()) throw InvalidArgument("graph_pencil_lambda2: input must be 2-uniform");
  const int n = graph.vertex_count();
  if (n < 2) throw InvalidArgument("graph_pencil_lambda2: need >= 2 vertices");
  for (int v = 0; v < n; ++v)
    if (!(graph.degree(v) > 0.0))
      throw InvalidArgument("graph_pencil_lambda2: isolated vertex makes D singular");

  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd dmat = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : graph.edges()) {
    const int i = e.vertices[0];
    const int j = e.vertices[1];
    lap(i, i) += e.weight;
    lap(j, j) += e.weight;
    lap(i, j) -= e.weight;
    lap(j, i) -= e.weight;
  }
  for (int v = 0; v < n; ++v) dmat(v, v) = graph.degree(v);

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, dmat,
                                                                   Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("graph_pencil_lambda2: eigensolver failed");
  return std::max(0.0, solver.eigenvalues()(1));
}

double graph_potential_lambda(const Hypergraph& graph) {
  return 0.5 * graph_pencil_lambda2(graph);
}

double lambda_lower_heuristic(const Hypergraph& g) {
  const Hypergraph clique = clique_expansion(g);
  const double lam = graph_potential_lambda(clique);
  return lam / static_cast<double>(std::max<std::size_t>(g.max_edge_size(), 2));
}

}  // namespace hyperheat
