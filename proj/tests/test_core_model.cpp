#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "burn/core_model.hpp"
#include "burn/errors.hpp"
#include "burn/partitions.hpp"

using namespace burn;

namespace {

std::int64_t bfs_radius(const LabeledGraph& g) {
  std::int64_t best = -1;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto d = g.distances_from(v);
    const std::int64_t ecc = *std::max_element(d.begin(), d.end());
    if (best < 0 || ecc < best) best = ecc;
  }
  return best;
}

std::int64_t eccentricity(const LabeledGraph& g, const VertexId& v) {
  const auto d = g.distances_from(g.index_of(v));
  return *std::max_element(d.begin(), d.end());
}

}  // namespace

TEST_SUITE("core_model") {

TEST_CASE("path-forests are stored largest first") {
  const PathForest pf({11, 13, 11});
  CHECK(pf.orders() == std::vector<std::int64_t>{13, 11, 11});
  CHECK(pf.order() == 35);
  CHECK(pf.components() == 3);
  CHECK(pf.largest() == 13);
  CHECK_THROWS_AS(PathForest({}), InvalidArgument);
  CHECK_THROWS_AS(PathForest({3, 0}), InvalidArgument);
}

TEST_CASE("spiders need three arms") {
  const Spider sp({5, 6, 4});
  CHECK(sp.arms() == std::vector<std::int64_t>{6, 5, 4});
  CHECK(sp.order() == 16);
  CHECK(Spider({8, 8, 8}).order() == 25);
  CHECK_THROWS_AS(Spider({3, 3}), InvalidArgument);
  CHECK_THROWS_AS(Spider({3, 3, 0}), InvalidArgument);
}

TEST_CASE("path-forest graphs") {
  const auto single = path_forest_to_graph(PathForest({1}));
  CHECK(single.order() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(single.contains(VertexId::component(0, 0)));

  const auto two = path_forest_to_graph(PathForest({2, 2}));
  CHECK(two.order() == 4);
  CHECK(two.edge_count() == 2);
  CHECK(two.connected_components() == 2);

  const auto g = path_forest_to_graph(PathForest({13, 11, 11}));
  CHECK(g.order() == 35);
  CHECK(g.edge_count() == 32);
  CHECK(g.connected_components() == 3);
  CHECK(g.adjacent(VertexId::component(0, 3), VertexId::component(0, 4)));
  CHECK_FALSE(g.adjacent(VertexId::component(0, 12), VertexId::component(1, 0)));
}

TEST_CASE("path-forest graph components match the orders") {
  for (const auto& pf : all_path_forests(10)) {
    const auto g = path_forest_to_graph(pf);
    REQUIRE(g.order() == static_cast<std::size_t>(pf.order()));
    REQUIRE(g.edge_count() == static_cast<std::size_t>(pf.order() - pf.components()));
    REQUIRE(g.connected_components() == static_cast<std::size_t>(pf.components()));
    std::map<std::int32_t, std::int64_t> sizes;
    for (const auto& v : g.vertices()) ++sizes[v.index];
    std::vector<std::int64_t> got;
    for (const auto& [c, size] : sizes) got.push_back(size);
    CHECK(got == pf.orders());
  }
}

TEST_CASE("spider graphs are trees with one branch vertex") {
  const auto star = spider_to_graph(Spider({1, 1, 1}));
  CHECK(star.order() == 4);
  CHECK(star.degree(star.index_of(VertexId::head())) == 3);

  CHECK(spider_to_graph(Spider({6, 5, 4})).order() == 16);
  CHECK(spider_to_graph(Spider({8, 8, 8})).order() == 25);

  for (const auto& sp : all_spiders(14)) {
    const auto g = spider_to_graph(sp);
    REQUIRE(g.order() == static_cast<std::size_t>(sp.order()));
    REQUIRE(g.edge_count() == g.order() - 1);
    REQUIRE(g.connected_components() == 1);
    int branch = 0;
    for (std::size_t v = 0; v < g.order(); ++v) branch += g.degree(v) >= 3;
    CHECK(branch == 1);
  }
}

TEST_CASE("path radius and center") {
  CHECK(path_radius(1) == 0);
  CHECK(path_radius(4) == 2);
  CHECK(path_radius(13) == 6);
  CHECK_THROWS_AS(path_radius(0), InvalidArgument);
  for (std::int64_t n = 1; n <= 200; ++n) {
    const auto g = path_forest_to_graph(PathForest({n}));
    REQUIRE(bfs_radius(g) == path_radius(n));
    const auto c = static_cast<std::int32_t>(path_center(n));
    REQUIRE(eccentricity(g, VertexId::component(0, c)) == path_radius(n));
    if (c > 0) REQUIRE(eccentricity(g, VertexId::component(0, c - 1)) > path_radius(n));
  }
}

TEST_CASE("graph construction rejects malformed input") {
  const auto a = VertexId::node(0);
  const auto b = VertexId::node(1);
  const auto c = VertexId::node(2);
  std::vector<std::pair<VertexId, VertexId>> loop{{a, a}};
  CHECK_THROWS_AS(LabeledGraph::from_edges({a, b}, loop), InvalidArgument);
  std::vector<std::pair<VertexId, VertexId>> unknown{{a, c}};
  CHECK_THROWS_AS(LabeledGraph::from_edges({a, b}, unknown), InvalidArgument);
  CHECK_THROWS_AS(LabeledGraph::from_edges({a, a}, {}), InvalidArgument);

  std::vector<std::pair<VertexId, VertexId>> parallel{{a, b}, {b, a}, {a, b}};
  const auto g = LabeledGraph::from_edges({b, a}, parallel);
  CHECK(g.edge_count() == 1);
  CHECK(g.vertex(0) == a);
  const auto d = g.distances_from(0);
  CHECK(d == std::vector<std::int64_t>{0, 1});

  const auto split = LabeledGraph::from_edges({a, b, c}, std::vector<std::pair<VertexId, VertexId>>{{a, b}});
  CHECK(split.distances_from(0)[2] == -1);
}

TEST_CASE("packed vertex keys keep the label order") {
  std::vector<VertexId> labels{VertexId::head()};
  for (std::int32_t i : {0, 1, 7, 1 << 20, (1 << 30) + 5}) {
    for (std::int32_t p : {0, 1, 9, 1 << 30}) {
      labels.push_back(VertexId::component(i, p));
      labels.push_back(VertexId::arm(i, p));
      labels.push_back(VertexId::node(i));
    }
  }
  for (const auto& a : labels) {
    for (const auto& b : labels) REQUIRE((a < b) == (a.key() < b.key()));
  }
  CHECK_THROWS_AS(LabeledGraph::from_edges({VertexId::node(-1)}, {}), InvalidArgument);
  const auto g = path_forest_to_graph(PathForest({3}));
  CHECK_FALSE(g.find(VertexId::component(0, -1)).has_value());
}

TEST_CASE("edges given out of vertex order") {
  std::vector<VertexId> vertices;
  for (int i = 0; i < 6; ++i) vertices.push_back(VertexId::node(i));
  const std::vector<std::pair<VertexId, VertexId>> edges{
      {VertexId::node(5), VertexId::node(0)}, {VertexId::node(2), VertexId::node(4)},
      {VertexId::node(4), VertexId::node(3)}, {VertexId::node(0), VertexId::node(2)}};
  const auto g = LabeledGraph::from_edges(vertices, edges);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(VertexId::node(0), VertexId::node(5)));
  CHECK(g.adjacent(VertexId::node(3), VertexId::node(4)));
  CHECK_FALSE(g.adjacent(VertexId::node(1), VertexId::node(2)));
  CHECK(g.distances_from(g.index_of(VertexId::node(5)))[3] == 4);
  CHECK(g.connected_components() == 2);
}

TEST_CASE("schedules and covers check their invariants") {
  const auto v = VertexId::component(0, 0);
  const auto w = VertexId::component(0, 1);
  CHECK_NOTHROW(BurnSchedule({v, w}, 2));
  CHECK_THROWS_AS(BurnSchedule({v, w}, 1), InvalidArgument);
  CHECK_THROWS_AS(BurnSchedule({v, v}, 3), InvalidArgument);
  CHECK_THROWS_AS(BurnSchedule({v}, 0), InvalidArgument);

  CHECK_NOTHROW(BudgetedCover({{v, 1}, {w, 0}}, 2));
  CHECK_THROWS_AS(BudgetedCover({{v, 3}}, 3), InvalidArgument);
  CHECK_THROWS_AS(BudgetedCover({{v, 1}, {w, 1}}, 2), InvalidArgument);
  CHECK_THROWS_AS(BudgetedCover({{v, 0}, {v, 0}}, 3), InvalidArgument);
  CHECK_THROWS_AS(BudgetedCover({{v, -1}}, 3), InvalidArgument);
  CHECK_NOTHROW(BudgetedCover({{v, 0}, {v, 1}}, 3));

  const BudgetedCover c({{v, 0}, {w, 2}, {v, 1}}, 3);
  const auto sorted = c.by_radius();
  CHECK(sorted[0].radius == 2);
  CHECK(sorted[1].radius == 1);
  CHECK(sorted[2].radius == 0);
  CHECK(c.fits_budget(3));
  CHECK_FALSE(c.fits_budget(2));
}

}
