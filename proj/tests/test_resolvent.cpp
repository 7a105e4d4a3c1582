#include <cmath>

#include "doctest.h"
#include "hyperheat/resolvent.hpp"
#include "hyperheat/spectral.hpp"
#include "test_support.hpp"

using namespace hyperheat;
namespace ht = hyperheat::testing;

namespace {

PotentialModel two_vertex_l2() {
  return ht::l2_model(Hypergraph::build(2, {{{0, 1}, 1.0}}));
}

// Dense optimum of U + (lambda/2)|x|_D^2 - <s,x> for 2-uniform l2 models:
// solve (lambda D + L/2) x = s.
Eigen::VectorXd dense_resolvent_opt(const Hypergraph& g, double lambda,
                                    const VertexVector& s) {
  const Eigen::MatrixXd a =
      lambda * ht::dense_degree(g) + 0.5 * ht::dense_laplacian(g);
  const Eigen::Map<const Eigen::VectorXd> sv(s.data(), static_cast<Eigen::Index>(s.size()));
  return a.ldlt().solve(sv);
}

}  // namespace

TEST_CASE("omd on a zero seed returns zero") {
  IdentityProx prox(1.0, 1.0);
  auto oracle = [](const VertexVector& x) { return x; };
  auto objective = [](const VertexVector& x) { return 0.5 * dot(x, x); };
  const VertexVector s(5, 0.0);
  const OmdResult res = omd_minimize(oracle, objective, s, prox, 0.1);
  for (double v : res.x) CHECK(v == 0.0);
  CHECK(res.objective == 0.0);
}

TEST_CASE("omd epsilon and constant validation") {
  IdentityProx prox(1.0, 1.0);
  auto oracle = [](const VertexVector& x) { return x; };
  auto objective = [](const VertexVector& x) { return 0.5 * dot(x, x); };
  const VertexVector s(3, 1.0);
  CHECK_THROWS_AS(omd_minimize(oracle, objective, s, prox, 0.0), InvalidEpsilon);
  CHECK_THROWS_AS(omd_minimize(oracle, objective, s, prox, 1.0), InvalidEpsilon);
  CHECK_THROWS_AS(IdentityProx(0.0, 1.0), NonpositiveConstants);
  CHECK_THROWS_AS(IdentityProx(2.0, 1.0), NonpositiveConstants);
}

TEST_CASE("omd reaches the multiplicative gap on the euclidean quadratic") {
  Rng rng(401);
  IdentityProx prox(1.0, 1.0);
  auto oracle = [](const VertexVector& x) { return x; };
  auto objective = [](const VertexVector& x) { return 0.5 * dot(x, x); };
  for (int rep = 0; rep < 5; ++rep) {
    const VertexVector s = ht::random_vector(8, rng, -2.0, 2.0);
    const double opt = -0.5 * dot(s, s);
    const OmdResult res = omd_minimize(oracle, objective, s, prox, 0.1);
    CHECK(res.objective - opt <= 0.1 * std::abs(opt) + 1e-12);
    CHECK(res.objective <= 1e-10);
  }
}

TEST_CASE("omd rate on diagonal quadratics with known conditioning") {
  Rng rng(402);
  const double eps = 0.2;
  for (double kappa : {2.0, 10.0}) {
    IdentityProx prox(1.0, kappa);
    for (int rep = 0; rep < 5; ++rep) {
      Rng sub = rng.fork(static_cast<std::uint64_t>(kappa) * 100 +
                         static_cast<std::uint64_t>(rep));
      const std::size_t n = 10;
      VertexVector diag(n);
      for (double& d : diag) d = sub.uniform(1.0, kappa);
      auto oracle = [&](const VertexVector& x) {
        VertexVector z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = diag[i] * x[i];
        return z;
      };
      auto objective = [&](const VertexVector& x) {
        double f = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) f += diag[i] * x[i] * x[i];
        return 0.5 * f;
      };
      const VertexVector s = ht::random_vector(n, sub, -2.0, 2.0);
      double opt = 0.0;
      for (std::size_t i = 0; i < n; ++i) opt -= 0.5 * s[i] * s[i] / diag[i];
      const OmdResult res = omd_minimize(oracle, objective, s, prox, eps);
      CHECK(res.budget == static_cast<int>(std::ceil(4.0 * kappa / (eps * eps))));
      CHECK(res.objective - opt <= eps * std::abs(opt) + 1e-12);
    }
  }
}

TEST_CASE("resolvent detects the unbounded case") {
  const PotentialModel model = two_vertex_l2();
  CHECK_THROWS_AS(resolvent_solve(model, 0.0, VertexVector{1.0, 0.0}, 0.1),
                  UnboundedObjective);
}

TEST_CASE("resolvent on the two-vertex instance") {
  const PotentialModel model = two_vertex_l2();
  const VertexVector s{1.0, -1.0};
  ResolventOptions opts;
  opts.lambda_lower = 1.0;  // exact Poincare constant of this instance
  const ResolventSolution sol = resolvent_solve(model, 1.0, s, 0.05, opts);

  const Eigen::VectorXd xs = dense_resolvent_opt(model.hypergraph(), 1.0, s);
  CHECK(xs(0) == doctest::Approx(0.5).epsilon(1e-12));
  const double opt = -0.5 * (s[0] * xs(0) + s[1] * xs(1));
  CHECK(sol.objective - opt <= 0.05 * std::abs(opt) + 1e-12);
  CHECK(sol.x[0] == doctest::Approx(0.5).epsilon(0.1));
  CHECK(sol.x[1] == doctest::Approx(-0.5).epsilon(0.1));
  CHECK(sol.objective <= 1e-10);
}

TEST_CASE("resolvent zero seed stays at zero") {
  const PotentialModel model = two_vertex_l2();
  ResolventOptions opts;
  opts.lambda_lower = 1.0;
  const ResolventSolution sol = resolvent_solve(model, 0.5, VertexVector{0.0, 0.0}, 0.1, opts);
  for (double v : sol.x) CHECK(v == 0.0);
  CHECK(sol.objective == 0.0);
}

TEST_CASE("resolvent objective matches an independent re-evaluation") {
  Rng rng(403);
  const Hypergraph g = random_connected_hypergraph(12, 8, 2, 5, rng);
  const PotentialModel model = ht::linf_model(g);
  const VertexVector s = ht::random_vector(12, rng, -1.0, 1.0);
  ResolventOptions opts;
  opts.lambda_lower = 0.01;
  const ResolventSolution sol = resolvent_solve(model, 0.8, s, 0.2, opts);
  const double check = base_potential(model, sol.x) +
                       0.4 * norm_weighted_sq(sol.x, g.degrees()) - dot(s, sol.x);
  CHECK(sol.objective == doctest::Approx(check).epsilon(1e-10));
  CHECK(sol.objective <= 1e-10);
}

TEST_CASE("ppr stationary seed is an exact fixed point") {
  Rng rng(404);
  const Hypergraph g = random_connected_hypergraph(10, 7, 2, 5, rng);
  const PotentialModel model = ht::linf_model(g);
  VertexVector s(10);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = g.degrees()[i] / g.volume();
  ResolventOptions opts;
  opts.lambda_lower = 0.01;
  const PprResult res = ppr(model, 0.3, s, 0.1, opts);
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(res.p[i] == doctest::Approx(s[i]).epsilon(1e-9));
  CHECK(res.residual.norm <= 1e-9);
}

TEST_CASE("ppr matches the analytic two-vertex solution") {
  const PotentialModel model = two_vertex_l2();
  ResolventOptions opts;
  opts.lambda_lower = 1.0;
  const PprResult res = ppr(model, 0.5, VertexVector{1.0, 0.0}, 1e-3, opts);
  CHECK(std::abs(res.p[0] - 5.0 / 6.0) <= 1e-3);
  CHECK(std::abs(res.p[1] - 1.0 / 6.0) <= 1e-3);
  // degree-mass conservation through the parallel component
  CHECK(res.p[0] + res.p[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ppr residual shrinks when epsilon halves") {
  Rng rng(405);
  const Hypergraph g = random_connected_hypergraph(12, 9, 2, 5, rng);
  const PotentialModel model = ht::linf_model(g);
  VertexVector s(12, 0.0);
  s[3] = 1.0;
  ResolventOptions opts;
  opts.lambda_lower = 0.005;
  const double r1 = ppr(model, 0.2, s, 0.1, opts).residual.norm;
  const double r2 = ppr(model, 0.2, s, 0.05, opts).residual.norm;
  CHECK(r2 <= r1 + 1e-12);
}

TEST_CASE("geometric series baseline") {
  const Hypergraph g = Hypergraph::build(2, {{{0, 1}, 1.0}});
  const VertexVector s{1.0, -1.0};

  const SeriesResult one = graph_resolvent_series(g, 3.0, s, 1);
  CHECK(one.x[0] == doctest::Approx(0.2).epsilon(1e-14));  // s / (lambda + 2)
  CHECK(one.tail_bound == doctest::Approx(0.4).epsilon(1e-14));

  const SeriesResult zero = graph_resolvent_series(g, 1.0, VertexVector{0.0, 0.0}, 10);
  for (double v : zero.x) CHECK(v == 0.0);

  const SeriesResult long_run = graph_resolvent_series(g, 1.0, s, 50);
  // direct solve of (D + L) x = s
  Eigen::MatrixXd a = ht::dense_degree(g) + ht::dense_laplacian(g);
  const Eigen::Map<const Eigen::VectorXd> sv(s.data(), 2);
  const Eigen::VectorXd xs = a.ldlt().solve(sv);
  const double tail = std::pow(2.0 / 3.0, 50) * norm2(s);
  for (int i = 0; i < 2; ++i)
    CHECK(std::abs(long_run.x[static_cast<std::size_t>(i)] - xs(i)) <= tail + 1e-12);
}

TEST_CASE("last-iterate heuristic agrees on smooth instances and is deterministic") {
  Rng rng(406);
  const Hypergraph g = random_connected_graph(10, 8, rng);
  const PotentialModel model = ht::l2_model(g);
  const VertexVector s = ht::random_vector(10, rng, -1.0, 1.0);
  const double lambda = 1.0;
  const double eps = 0.1;
  ResolventOptions opts;
  opts.lambda_lower = graph_potential_lambda(g);

  const ResolventSolution avg = resolvent_solve(model, lambda, s, eps, opts);
  const ResolventSolution last = last_iterate_heuristic(model, lambda, s, eps, opts);

  const Eigen::VectorXd xs = dense_resolvent_opt(g, lambda, s);
  double opt = 0.0;
  for (int i = 0; i < 10; ++i) opt -= 0.5 * s[static_cast<std::size_t>(i)] * xs(i);
  CHECK(std::abs(avg.objective - last.objective) <= 10.0 * eps * std::abs(opt));

  const ResolventSolution rerun = last_iterate_heuristic(model, lambda, s, eps, opts);
  CHECK(rerun.x == last.x);
  CHECK(rerun.objective == last.objective);

  const ResolventSolution zero = last_iterate_heuristic(model, lambda, VertexVector(10, 0.0),
                                                        eps, opts);
  for (double v : zero.x) CHECK(v == 0.0);
}

TEST_CASE("ppr conserves probability mass on 2-uniform l2 models") {
  Rng rng(407);
  const Hypergraph g = random_connected_graph(12, 10, rng);
  const PotentialModel model = ht::l2_model(g);
  VertexVector s(12, 0.0);
  // probability seed
  for (int rep = 0; rep < 4; ++rep) s[static_cast<std::size_t>(rng.uniform_int(0, 11))] += 0.25;
  const double eps = 0.1;
  ResolventOptions opts;
  opts.lambda_lower = graph_potential_lambda(g);
  const PprResult res = ppr(model, 0.3, s, eps, opts);
  double mass = 0.0;
  for (double v : res.p) mass += v;
  CHECK(std::abs(mass - 1.0) <= 2.0 * eps);
}

TEST_CASE("clique prox geometry runs and solves the same problem") {
  Rng rng(408);
  const Hypergraph g = random_connected_hypergraph(10, 7, 2, 4, rng);
  const PotentialModel model = ht::linf_model(g);
  const VertexVector s = ht::random_vector(10, rng, -1.0, 1.0);
  ResolventOptions opts;
  opts.prox = ProxChoice::Clique;
  opts.iteration_override = 400;
  const ResolventSolution sol = resolvent_solve(model, 0.5, s, 0.2, opts);
  const double check = base_potential(model, sol.x) +
                       0.25 * norm_weighted_sq(sol.x, g.degrees()) - dot(s, sol.x);
  CHECK(sol.objective == doctest::Approx(check).epsilon(1e-10));
}

TEST_CASE("prox operators invert themselves") {
  Rng rng(409);
  const Hypergraph g = random_connected_hypergraph(12, 9, 2, 5, rng);
  const CliqueProx clique(g, 0.1, 1.0, 2.0);
  const auto degree = make_degree_prox(g, 0.5, 1.5);
  const VertexVector v = ht::random_vector(12, rng, -1.0, 1.0);
  VertexVector mid(12), back(12);
  clique.apply(v, mid);
  clique.apply_inverse(mid, back);
  for (std::size_t i = 0; i < v.size(); ++i)
    CHECK(back[i] == doctest::Approx(v[i]).epsilon(1e-10));
  CHECK(clique.quadratic(v) > 0.0);
  degree->apply(v, mid);
  degree->apply_inverse(mid, back);
  for (std::size_t i = 0; i < v.size(); ++i)
    CHECK(back[i] == doctest::Approx(v[i]).epsilon(1e-12));
}
