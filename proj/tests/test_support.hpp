#ifndef HYPERHEAT_TESTS_TEST_SUPPORT_HPP
#define HYPERHEAT_TESTS_TEST_SUPPORT_HPP

#include <Eigen/Dense>
#include <memory>
#include <span>

#include "hyperheat/datasets.hpp"
#include "hyperheat/potential.hpp"
#include "hyperheat/rng.hpp"
#include "hyperheat/subgradient.hpp"

// Independent oracles and generators used by the unit and acceptance suites.
// Everything here must stay independent of the implementation paths it
// checks: linear algebra goes through Eigen, the min-norm oracle is a plain
// projected-gradient method on the explicit face polytope.
namespace hyperheat::testing {

std::shared_ptr<const Hypergraph> share(Hypergraph g);
PotentialModel linf_model(Hypergraph g, double lambda = 0.0);
PotentialModel l2_model(Hypergraph g, double lambda = 0.0);

Eigen::MatrixXd dense_laplacian(const Hypergraph& graph);  // 2-uniform
Eigen::MatrixXd dense_degree(const Hypergraph& g);

VertexVector random_vector(std::size_t n, Rng& rng, double lo = -1.0, double hi = 1.0);
// Entries drawn from a coarse grid so tied extrema are common.
VertexVector random_grid_vector(std::size_t n, Rng& rng);
// Random vector projected D-orthogonal to the ones vector.
VertexVector random_centered_vector(const Hypergraph& g, Rng& rng);

// Cardinality-based symmetric submodular cut function delta(S) =
// g(min(|S|, k - |S|)) for a random concave g with g(0) = 0, g(1) > 0.
CutFunction random_cardinality_cut(int k, Rng& rng);
// The standard cut delta(S) = min(1, |S|, k - |S|).
CutFunction standard_cut(int k);

// Max violation across the subgradient certificate invariants.
struct CertificateCheck {
  double witness_orthogonality = 0.0;  // max |<y_h, 1>|
  double dual_feasibility = 0.0;       // max (gauge(y_h) - 1)
  double scatter_error = 0.0;          // max |z - sum w f y|
  double pairing_error = 0.0;          // |<x,z> - 2U| / (1 + 2U)
};
CertificateCheck check_certificate(const PotentialModel& model, std::span<const double> x,
                                   const SubgradientCertificate& cert);

double norm_d_inv(const Hypergraph& g, std::span<const double> z);

// Reference min-norm-subgradient oracle: dense projected gradient over the
// explicit product of l-inf faces, run until the face duality gap drops below
// gap_tol * (1 + |z|^2). Supports l-inf models only.
VertexVector projected_gradient_min_norm(const PotentialModel& model, std::span<const double> x,
                                         double gap_tol, long max_iters = 2000000);

}  // namespace hyperheat::testing

#endif  // HYPERHEAT_TESTS_TEST_SUPPORT_HPP
