#include "doctest.h"
#include "oracles.hpp"

#include "burn/bounds.hpp"
#include "burn/burning.hpp"
#include "burn/exact.hpp"
#include "burn/greedy.hpp"
#include "burn/partitions.hpp"

using namespace burn;

namespace {

std::vector<std::int64_t> radii(const GreedyResult& r) {
  std::vector<std::int64_t> out;
  for (const auto& step : r.trace) out.push_back(step.radius);
  return out;
}

}  // namespace

TEST_SUITE("greedy") {

TEST_CASE("radius rule") {
  CHECK(greedy_radius(35, 3) == 5);
  CHECK(greedy_radius(15, 3) == 4);
  CHECK(greedy_radius(1, 1) == 0);
  CHECK(greedy_radius(6, 3) == 3);
}

TEST_CASE("single steps") {
  const auto first = greedy_step(PathForest({13, 11, 11}));
  CHECK(first.removed.radius == 5);
  CHECK(first.action == GreedyStep::Action::RemoveNeighborhood);
  REQUIRE(first.after.has_value());
  CHECK(first.after->orders() == std::vector<std::int64_t>{11, 11, 2});

  const auto trim = greedy_step(PathForest({11, 2, 2}));
  CHECK(trim.removed.radius == 4);
  REQUIRE(trim.after.has_value());
  CHECK(trim.after->orders() == std::vector<std::int64_t>{2, 2, 2});

  const auto last = greedy_step(PathForest({1}));
  CHECK(last.removed.radius == 0);
  CHECK(last.action == GreedyStep::Action::RemoveComponent);
  CHECK_FALSE(last.after.has_value());
}

TEST_CASE("worked trace on (13, 11, 11)") {
  const PathForest pf({13, 11, 11});
  const auto r = greedy_burn(pf);
  CHECK(radii(r) == std::vector<std::int64_t>{5, 4, 4, 3, 2, 1});
  CHECK(r.burn_time() == 7);
  CHECK(r.schedule.length() == 7);
  CHECK(verify_schedule(path_forest_to_graph(pf), r.schedule));
  CHECK(r.trace[1].before.orders() == std::vector<std::int64_t>{11, 11, 2});
  CHECK(r.trace[3].before.orders() == std::vector<std::int64_t>{2, 2, 2});
  CHECK(r.cover.budget() == 7);
}

TEST_CASE("small traces") {
  const auto co = greedy_burn(PathForest({1, 1, 1}));
  CHECK(radii(co) == std::vector<std::int64_t>{2, 1, 0});
  CHECK(co.burn_time() == 3);

  const auto p16 = greedy_burn(PathForest({16}));
  CHECK(radii(p16) == std::vector<std::int64_t>{3, 2, 1, 0});
  CHECK(p16.burn_time() == 4);
}

TEST_CASE("every path-forest up to 16: valid, within bounds, within 3/2") {
  std::size_t count = 0;
  for (const auto& pf : all_path_forests(16)) {
    ++count;
    const auto r = greedy_burn(pf);
    const auto g = path_forest_to_graph(pf);
    REQUIRE(verify_schedule(g, r.schedule));
    REQUIRE(oracle::completion_by_distance(oracle::forest_vertices(pf.orders()), r.schedule.sources(),
                                           oracle::forest_distance) <= r.burn_time());
    REQUIRE(r.burn_time() <= ub_floor(pf));
    if (const auto s = ub_sqrt(pf)) REQUIRE(r.burn_time() <= *s);
    REQUIRE(2 * r.burn_time() <= 3 * exact_pf(pf));
    REQUIRE(r.trace.size() <= static_cast<std::size_t>(pf.order()));
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      REQUIRE(r.trace[i].before.order() < r.trace[i - 1].before.order());
    }
  }
  CHECK(count == 914);
}

TEST_CASE("random larger path-forests stay within the bounds") {
  InstanceGenerator gen(7);
  for (int i = 0; i < 300; ++i) {
    const auto pf = gen.path_forest(3000);
    const auto r = greedy_burn(pf);
    REQUIRE(r.burn_time() <= greedy_budget(pf));
    REQUIRE(r.burn_time() <= ub_floor(pf));
    REQUIRE(r.burn_time() >= lower_bound(pf));
    if (pf.order() <= 200 && pf.components() <= 40) REQUIRE(2 * r.burn_time() <= 3 * exact_pf(pf));
  }
}

}
