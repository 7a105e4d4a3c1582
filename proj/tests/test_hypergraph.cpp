#include <sstream>

#include "doctest.h"
#include "hyperheat/conversions.hpp"
#include "hyperheat/errors.hpp"
#include "hyperheat/io.hpp"
#include "test_support.hpp"

using namespace hyperheat;
namespace ht = hyperheat::testing;

namespace {

Hypergraph triangle() {
  return Hypergraph::build(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{0, 2}, 1.0}});
}

Hypergraph two_disjoint_edges() {
  return Hypergraph::build(4, {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
}

}  // namespace

TEST_CASE("build caches degrees and volume") {
  const double w = 0.75;
  const Hypergraph g = Hypergraph::build(4, {{{0, 1, 2, 3}, w}});
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == w);
  CHECK(g.volume() == 4 * w);
  CHECK(g.edge_count() == 1);

  const Hypergraph tri = triangle();
  for (int v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2.0);
}

TEST_CASE("build rejects bad edges") {
  CHECK_THROWS_AS(Hypergraph::build(2, {{{0}, 1.0}}), SingletonHyperedge);
  CHECK_THROWS_AS(Hypergraph::build(2, {{{0, 0}, 1.0}}), SingletonHyperedge);
  CHECK_THROWS_AS(Hypergraph::build(2, {{{}, 1.0}}), EmptyHyperedge);
  CHECK_THROWS_AS(Hypergraph::build(2, {{{0, 1}, 0.0}}), NonpositiveWeight);
  CHECK_THROWS_AS(Hypergraph::build(2, {{{0, 1}, -2.0}}), NonpositiveWeight);
  CHECK_THROWS_AS(Hypergraph::build(2, {{{0, 2}, 1.0}}), VertexOutOfRange);
}

TEST_CASE("duplicate hyperedges merge canonically") {
  const Hypergraph g = Hypergraph::build(3, {{{2, 1}, 1.0}, {{1, 2}, 2.5}, {{0, 1}, 1.0}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0).vertices == std::vector<int>{0, 1});
  CHECK(g.edge(1).vertices == std::vector<int>{1, 2});
  CHECK(g.edge(1).weight == 3.5);
}

TEST_CASE("conductance on the documented instances") {
  const Hypergraph single = Hypergraph::build(4, {{{0, 1, 2, 3}, 1.0}});
  const CutProfile cut = conductance(single, std::vector<int>{0, 1});
  CHECK(cut.boundary_weight == 1.0);
  CHECK(cut.conductance == doctest::Approx(0.5).epsilon(1e-14));

  const CutProfile corner = conductance(triangle(), std::vector<int>{0});
  CHECK(corner.conductance == doctest::Approx(1.0).epsilon(1e-14));

  const CutProfile comp = conductance(two_disjoint_edges(), std::vector<int>{0, 1});
  CHECK(comp.conductance == 0.0);
}

TEST_CASE("conductance rejects degenerate cuts") {
  CHECK_THROWS_AS(conductance(triangle(), std::vector<int>{}), DegenerateCut);
  CHECK_THROWS_AS(conductance(triangle(), std::vector<int>{0, 1, 2}), DegenerateCut);
}

TEST_CASE("conductance is symmetric under complement") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(trial));
    const Hypergraph g = random_connected_hypergraph(12, 8, 2, 5, sub);
    std::vector<int> inside, outside;
    for (int v = 0; v < g.vertex_count(); ++v)
      (sub.uniform() < 0.5 ? inside : outside).push_back(v);
    if (inside.empty() || outside.empty()) continue;
    CHECK(conductance(g, inside).conductance == conductance(g, outside).conductance);
    CHECK(conductance(g, inside).boundary_weight == conductance(g, outside).boundary_weight);
  }
}

TEST_CASE("volume equals the degree double-counting identity") {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(trial));
    const Hypergraph g = random_connected_hypergraph(20, 15, 2, 6, sub);
    double pin_weight = 0.0;
    for (const auto& e : g.edges()) pin_weight += e.weight * static_cast<double>(e.vertices.size());
    CHECK(g.volume() == doctest::Approx(pin_weight).epsilon(1e-12));
  }
}

TEST_CASE("connectivity over the incidence structure") {
  CHECK(connected(triangle()));
  CHECK_FALSE(connected(two_disjoint_edges()));
  CHECK(connected(Hypergraph::build(5, {{{0, 1, 2, 3, 4}, 2.0}})));
  // isolated vertex
  CHECK_FALSE(connected(Hypergraph::build(3, {{{0, 1}, 1.0}})));
}

TEST_CASE("bipartite conversion merges and skips rows") {
  const BipartiteConversion one = bipartite_to_hypergraph(4, {{1, 3}});
  CHECK(one.hypergraph.edge_count() == 1);
  CHECK(one.hypergraph.edge(0).weight == 1.0);

  const BipartiteConversion merged = bipartite_to_hypergraph(4, {{1, 3}, {3, 1}});
  CHECK(merged.hypergraph.edge_count() == 1);
  CHECK(merged.hypergraph.edge(0).weight == 2.0);

  const BipartiteConversion skipped = bipartite_to_hypergraph(4, {{2}, {0, 1}});
  CHECK(skipped.skipped_small == 1);
  CHECK(skipped.hypergraph.edge_count() == 1);

  const BipartiteConversion capped =
      bipartite_to_hypergraph(5, {{0, 1, 2, 3, 4}, {0, 1}}, 3);
  CHECK(capped.skipped_oversize == 1);
  CHECK(capped.hypergraph.edge_count() == 1);
}

TEST_CASE("clique expansion") {
  const Hypergraph g = Hypergraph::build(3, {{{0, 1, 2}, 1.5}});
  const Hypergraph c = clique_expansion(g);
  CHECK(c.edge_count() == 3);
  for (const auto& e : c.edges()) CHECK(e.weight == 1.5);

  // 2-uniform inputs are fixed points of the unscaled expansion
  const Hypergraph tri = triangle();
  const Hypergraph tric = clique_expansion(tri);
  REQUIRE(tric.edge_count() == tri.edge_count());
  for (std::size_t e = 0; e < tri.edge_count(); ++e) {
    CHECK(tric.edge(e).vertices == tri.edge(e).vertices);
    CHECK(tric.edge(e).weight == tri.edge(e).weight);
  }

  const Hypergraph overlap = Hypergraph::build(4, {{{0, 1, 2}, 1.0}, {{1, 2, 3}, 1.0}});
  const Hypergraph oc = clique_expansion(overlap);
  for (const auto& e : oc.edges()) {
    if (e.vertices == std::vector<int>{1, 2}) CHECK(e.weight == 2.0);
  }

  const Hypergraph scaled = clique_expansion(g, CliquePairWeight::OverSizeMinusOne);
  CHECK(scaled.edge(0).weight == doctest::Approx(0.75));
}

TEST_CASE("clique expansion preserves vertex set and connectivity") {
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(trial));
    Hypergraph g = random_connected_hypergraph(15, 5, 2, 5, sub);
    const Hypergraph c = clique_expansion(g);
    CHECK(c.vertex_count() == g.vertex_count());
    CHECK(connected(c) == connected(g));
  }
  const Hypergraph disc = two_disjoint_edges();
  CHECK(connected(clique_expansion(disc)) == connected(disc));
}

TEST_CASE("knn structures on the documented 1-d instance") {
  const std::vector<std::vector<double>> pts{{0.0}, {1.0}, {3.0}};
  const KnnStructures knn = knn_structures(pts, 1);
  REQUIRE(knn.hypergraph.edge_count() == 2);
  CHECK(knn.hypergraph.edge(0).vertices == std::vector<int>{0, 1});
  CHECK(knn.hypergraph.edge(0).weight == 2.0);
  CHECK(knn.hypergraph.edge(1).vertices == std::vector<int>{1, 2});
  CHECK(knn.hypergraph.edge(1).weight == 1.0);
}

TEST_CASE("knn with k = n-1 merges into one full hyperedge") {
  const std::vector<std::vector<double>> pts{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const KnnStructures knn = knn_structures(pts, 3);
  REQUIRE(knn.hypergraph.edge_count() == 1);
  CHECK(knn.hypergraph.edge(0).vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(knn.hypergraph.edge(0).weight == 4.0);
}

TEST_CASE("knn ties break deterministically by index") {
  // three coincident points: neighbors resolve to the lowest index
  const std::vector<std::vector<double>> pts{{0.0}, {0.0}, {0.0}};
  const KnnStructures a = knn_structures(pts, 1);
  const KnnStructures b = knn_structures(pts, 1);
  REQUIRE(a.hypergraph.edge_count() == b.hypergraph.edge_count());
  for (std::size_t e = 0; e < a.hypergraph.edge_count(); ++e) {
    CHECK(a.hypergraph.edge(e).vertices == b.hypergraph.edge(e).vertices);
    CHECK(a.hypergraph.edge(e).weight == b.hypergraph.edge(e).weight);
  }
  CHECK(a.hypergraph.edge(0).vertices == std::vector<int>{0, 1});
}

TEST_CASE("text format round-trips field by field") {
  Rng rng(34);
  const Hypergraph g = random_connected_hypergraph(17, 9, 2, 6, rng);
  std::stringstream buf;
  write_hypergraph(buf, g);
  const Hypergraph back = read_hypergraph(buf);
  REQUIRE(back.vertex_count() == g.vertex_count());
  REQUIRE(back.edge_count() == g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    CHECK(back.edge(e).vertices == g.edge(e).vertices);
    CHECK(back.edge(e).weight == g.edge(e).weight);
  }
  CHECK(back.degrees() == g.degrees());
  CHECK(back.volume() == g.volume());
}

TEST_CASE("hypergraph parser rejects malformed input") {
  std::stringstream missing("3 2\n1 2 0 1\n");
  CHECK_THROWS_AS(read_hypergraph(missing), ParseError);
  std::stringstream short_row("2 1\n1 3 0 1\n");
  CHECK_THROWS_AS(read_hypergraph(short_row), ParseError);
}
