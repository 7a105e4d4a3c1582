#include <cmath>

#include "doctest.h"
#include "hyperheat/errors.hpp"
#include "test_support.hpp"

using namespace hyperheat;
namespace ht = hyperheat::testing;

namespace {

// Convex 1-d minimization by golden section; independent of the closed forms
// used by the implementation.
template <typename F>
double golden_min(F&& f, double lo, double hi) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  for (int it = 0; it < 300; ++it) {
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - phi * (b - a);
    d = a + phi * (b - a);
  }
  return f(0.5 * (a + b));
}

}  // namespace

TEST_CASE("min shift closed forms") {
  const EdgeNorm linf = EdgeNorm::linf();
  const VertexVector fig1{-1.0, -1.0, 1.0, 2.0};
  CHECK(linf.min_shift(fig1) == doctest::Approx(1.5).epsilon(1e-15));

  const VertexVector constant{0.7, 0.7, 0.7};
  CHECK(linf.min_shift(constant) == 0.0);
  CHECK(EdgeNorm::l2().min_shift(constant) == 0.0);

  const VertexVector pair{0.0, 2.0};
  CHECK(EdgeNorm::l2().min_shift(pair) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("lovasz extension values") {
  const CutFunction cut = ht::standard_cut(2);
  CHECK(cut.lovasz(std::vector<double>{0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cut.lovasz(std::vector<double>{0.4, 0.4}) == 0.0);

  Rng rng(101);
  for (int k = 2; k <= 4; ++k) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(k));
    const CutFunction c = ht::random_cardinality_cut(k, sub);
    // agreement with delta on every 0/1 indicator
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<double> x(static_cast<std::size_t>(k), 0.0);
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) x[static_cast<std::size_t>(i)] = 1.0;
      CHECK(c.lovasz(x) == doctest::Approx(c.value(mask)).epsilon(1e-14));
    }
  }
}

TEST_CASE("cut function validation") {
  // asymmetric table
  std::vector<double> bad{0.0, 1.0, 2.0, 0.0};
  CHECK_THROWS_AS(CutFunction::from_table(2, std::move(bad)), InvalidArgument);
  // zero singleton
  std::vector<double> zero{0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(CutFunction::from_table(2, std::move(zero)), InvalidArgument);
  // non-submodular: delta{1}=delta{2}=1, delta{1,2}=1, delta{3}... build k=3
  // with a spike violating the pair inequality
  std::vector<double> spike(8, 0.0);
  spike[1] = spike[6] = 1.0;
  spike[2] = spike[5] = 1.0;
  spike[4] = spike[3] = 3.0;  // delta({1,2}) = 3 > delta({1}) + delta({2})
  CHECK_THROWS_AS(CutFunction::from_table(3, std::move(spike)), InvalidArgument);
}

TEST_CASE("potential on documented instances") {
  const double w = 1.0;
  const auto single = Hypergraph::build(4, {{{0, 1, 2, 3}, w}});
  const PotentialModel model = ht::linf_model(single);
  const VertexVector fig1{-1.0, -1.0, 1.0, 2.0};
  CHECK(potential(model, fig1) == doctest::Approx(9.0 * w / 8.0).epsilon(1e-14));
  CHECK(potential(model, VertexVector{3.0, 3.0, 3.0, 3.0}) == 0.0);

  const PotentialModel pair = ht::l2_model(Hypergraph::build(2, {{{0, 1}, 1.0}}));
  CHECK(potential(pair, VertexVector{0.0, 1.0}) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("2-uniform l2 potential equals the quarter Laplacian quadratic") {
  Rng rng(102);
  for (int trial = 0; trial < 10; ++trial) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(trial));
    const Hypergraph g = random_connected_graph(12, 10, sub);
    const PotentialModel model = ht::l2_model(g);
    const VertexVector x = ht::random_vector(12, sub);
    const Eigen::MatrixXd lap = ht::dense_laplacian(g);
    const Eigen::Map<const Eigen::VectorXd> xv(x.data(), 12);
    CHECK(potential(model, x) ==
          doctest::Approx(0.25 * xv.dot(lap * xv)).epsilon(1e-12));
  }
}

TEST_CASE("potential is shift invariant") {
  Rng rng(103);
  const Hypergraph g = random_connected_hypergraph(10, 6, 2, 5, rng);
  const PotentialModel model = ht::linf_model(g);
  // dyadic grid values stay exact under integer shifts
  const VertexVector x = ht::random_grid_vector(10, rng);
  VertexVector shifted = x;
  for (double& v : shifted) v += 2.0;
  CHECK(potential(model, x) == potential(model, shifted));

  const VertexVector y = ht::random_vector(10, rng);
  VertexVector ys = y;
  for (double& v : ys) v += 0.3721;
  CHECK(potential(model, y) == doctest::Approx(potential(model, ys)).epsilon(1e-12));
}

TEST_CASE("rayleigh quotient examples and bounds") {
  const PotentialModel pair = ht::l2_model(Hypergraph::build(2, {{{0, 1}, 1.0}}));
  CHECK(rayleigh(pair, VertexVector{1.0, -1.0}) == doctest::Approx(1.0).epsilon(1e-14));
  // scale invariance
  CHECK(rayleigh(pair, VertexVector{5.0, -5.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(rayleigh(pair, VertexVector{2.0, 2.0}), ConstantVector);

  const PotentialModel disc =
      ht::linf_model(Hypergraph::build(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}}));
  CHECK(rayleigh(disc, VertexVector{1.0, 1.0, -1.0, -1.0}) == 0.0);
}

TEST_CASE("rayleigh sandwich on random connected instances") {
  Rng rng(104);
  int checked = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(trial));
    const Hypergraph g = random_connected_hypergraph(14, 10, 2, 5, sub);
    const PotentialModel model = ht::linf_model(g);
    for (int rep = 0; rep < 50; ++rep) {
      const VertexVector x = ht::random_centered_vector(g, sub);
      const double q = rayleigh(model, x);
      CHECK(q > 0.0);
      CHECK(q <= 1.0 + 1e-12);
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("norm bound |x|_h <= |x|_2 holds for every variant") {
  Rng rng(105);
  std::vector<EdgeNorm> norms{EdgeNorm::linf(), EdgeNorm::l2()};
  std::vector<int> sizes{4, 4};
  for (int k = 2; k <= 4; ++k) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(900 + k));
    norms.push_back(
        EdgeNorm::lovasz(std::make_shared<CutFunction>(ht::random_cardinality_cut(k, sub))));
    sizes.push_back(k);
    norms.push_back(EdgeNorm::lovasz(std::make_shared<CutFunction>(ht::standard_cut(k))));
    sizes.push_back(k);
  }
  for (std::size_t ni = 0; ni < norms.size(); ++ni) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(ni));
    for (int rep = 0; rep < 1000; ++rep) {
      const VertexVector x =
          ht::random_vector(static_cast<std::size_t>(sizes[ni]), sub, -3.0, 3.0);
      CHECK(norms[ni].norm(x) <= norm2(x) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("norm axioms hold for the Lovasz norm") {
  Rng rng(106);
  for (int k = 2; k <= 4; ++k) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(k));
    const EdgeNorm norm =
        EdgeNorm::lovasz(std::make_shared<CutFunction>(ht::random_cardinality_cut(k, sub)));
    for (int rep = 0; rep < 200; ++rep) {
      const VertexVector x = ht::random_vector(static_cast<std::size_t>(k), sub, -2.0, 2.0);
      const VertexVector y = ht::random_vector(static_cast<std::size_t>(k), sub, -2.0, 2.0);
      const double alpha = sub.uniform(-3.0, 3.0);

      VertexVector ax = x;
      scale(ax, alpha);
      CHECK(norm.norm(ax) ==
            doctest::Approx(std::abs(alpha) * norm.norm(x)).epsilon(1e-10));

      VertexVector sum = x;
      axpy(1.0, y, sum);
      CHECK(norm.norm(sum) <= norm.norm(x) + norm.norm(y) + 1e-10);

      if (norm2(x) > 1e-6) CHECK(norm.norm(x) > 0.0);
    }
  }
}

TEST_CASE("shift-minimizing the constructed norm recovers the extension") {
  Rng rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(trial));
    const int k = static_cast<int>(sub.uniform_int(2, 4));
    const CutFunction cut = ht::random_cardinality_cut(k, sub);
    // g(x) = lovasz(x) + |1^T x| is a norm whose 1-shift minimum is the
    // extension itself
    auto g_norm = [&](const VertexVector& v) {
      double s = 0.0;
      for (double c : v) s += c;
      return cut.lovasz(v) + std::abs(s);
    };
    for (int rep = 0; rep < 10; ++rep) {
      const VertexVector x = ht::random_vector(static_cast<std::size_t>(k), sub, -2.0, 2.0);
      const double direct = cut.lovasz(x);
      const double lo = *std::min_element(x.begin(), x.end()) - 1.0;
      const double hi = *std::max_element(x.begin(), x.end()) + 1.0;
      const double numeric = golden_min(
          [&](double u) {
            VertexVector shifted = x;
            for (double& v : shifted) v -= u;
            return g_norm(shifted);
          },
          lo, hi);
      CHECK(numeric == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("regularized potential square root is a norm on the centered subspace") {
  Rng rng(108);
  const Hypergraph g = random_connected_hypergraph(12, 8, 2, 5, rng);
  const PotentialModel model = ht::linf_model(g);
  const double lambda = 0.7;
  auto map = [&](const VertexVector& v) {
    return std::sqrt(2.0 * base_potential(model, v) +
                     lambda * norm_weighted_sq(v, g.degrees()));
  };
  for (int rep = 0; rep < 100; ++rep) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(rep));
    const VertexVector x = ht::random_centered_vector(g, sub);
    const VertexVector y = ht::random_centered_vector(g, sub);
    const double alpha = sub.uniform(-2.0, 2.0);

    VertexVector ax = x;
    scale(ax, alpha);
    CHECK(map(ax) == doctest::Approx(std::abs(alpha) * map(x)).epsilon(1e-10));

    VertexVector sum = x;
    axpy(1.0, y, sum);
    CHECK(map(sum) <= map(x) + map(y) + 1e-10);
  }
}

TEST_CASE("estimate_lambda") {
  const PotentialModel pair = ht::l2_model(Hypergraph::build(2, {{{0, 1}, 1.0}}));
  CHECK(estimate_lambda(pair, 5, 3, 7).value == doctest::Approx(1.0).epsilon(1e-12));

  const PotentialModel disc =
      ht::linf_model(Hypergraph::build(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}}));
  CHECK_THROWS_AS(estimate_lambda(disc, 5, 2, 7), DisconnectedGraph);

  Rng rng(109);
  const Hypergraph g = random_connected_hypergraph(12, 8, 2, 5, rng);
  const PotentialModel model = ht::linf_model(g);
  const double short_run = estimate_lambda(model, 5, 4, 11).value;
  const double long_run = estimate_lambda(model, 20, 4, 11).value;
  CHECK(long_run <= short_run + 1e-15);
}
