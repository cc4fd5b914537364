#include "burn/greedy.hpp"

#include <algorithm>
#include <string>

#include "burn/bounds.hpp"
#include "burn/burning.hpp"
#include "burn/errors.hpp"
#include "burn/int_math.hpp"

namespace burn {

namespace {

struct Cut {
  std::int64_t radius;
  GreedyStep::Action action;
  std::int64_t center;     // position within the largest component
  std::int64_t remaining;  // order left in that component
};

Cut plan_cut(std::int64_t n, std::int64_t t, std::int64_t largest) {
  const std::int64_t r = greedy_radius(n, t);
  if (largest <= 2 * r + 1) {
    return {r, GreedyStep::Action::RemoveComponent, path_center(largest), 0};
  }
  return {r, GreedyStep::Action::RemoveNeighborhood, largest - 1 - r, largest - (2 * r + 1)};
}

// A shrinking component remembered by its index in the input forest. Cuts
// come off the high end, so positions 0..length-1 keep their input labels.
struct Part {
  std::int32_t source;
  std::int64_t length;
};

PathForest forest_of(const std::vector<Part>& parts) {
  std::vector<std::int64_t> orders;
  orders.reserve(parts.size());
  for (const auto& p : parts) orders.push_back(p.length);
  return PathForest(std::move(orders));
}

}  // namespace

std::int64_t greedy_radius(std::int64_t n, std::int64_t t) {
  if (n < 1 || t < 1 || t > n) throw InvalidArgument("greedy_radius needs n >= 1 and 1 <= t <= n");
  const auto un = static_cast<std::uint64_t>(n);
  if (t >= static_cast<std::int64_t>(isqrt(un))) return n / (2 * t) + t - 1;
  return static_cast<std::int64_t>(ceil_sqrt(un)) - 1;
}

GreedyStepResult greedy_step(const PathForest& pf) {
  const Cut cut = plan_cut(pf.order(), pf.components(), pf.largest());
  GreedyStepResult result;
  result.removed = {VertexId::component(0, static_cast<std::int32_t>(cut.center)), cut.radius};
  result.action = cut.action;
  std::vector<std::int64_t> rest(pf.orders().begin() + 1, pf.orders().end());
  if (cut.remaining > 0) rest.push_back(cut.remaining);
  if (!rest.empty()) result.after = PathForest(std::move(rest));
  return result;
}

std::int64_t greedy_budget(const PathForest& pf) {
  const auto s = ub_sqrt(pf);
  return s ? *s : ub_floor(pf);
}

GreedyResult greedy_burn(const PathForest& pf) {
  std::vector<Part> parts;
  parts.reserve(pf.orders().size());
  for (std::size_t c = 0; c < pf.orders().size(); ++c) {
    parts.push_back({static_cast<std::int32_t>(c), pf.orders()[c]});
  }

  std::vector<CoverBall> balls;
  std::vector<GreedyStep> trace;
  std::int64_t n = pf.order();
  while (!parts.empty()) {
    // Stable, so equal orders keep their previous relative order.
    std::stable_sort(parts.begin(), parts.end(),
                     [](const Part& a, const Part& b) { return a.length > b.length; });
    const auto t = static_cast<std::int64_t>(parts.size());
    const Cut cut = plan_cut(n, t, parts.front().length);

    trace.push_back({forest_of(parts), cut.radius, cut.action,
                     VertexId::component(0, static_cast<std::int32_t>(cut.center))});
    balls.push_back(
        {VertexId::component(parts.front().source, static_cast<std::int32_t>(cut.center)),
         cut.radius});

    n -= parts.front().length - cut.remaining;
    if (cut.remaining == 0) {
      parts.erase(parts.begin());
    } else {
      parts.front().length = cut.remaining;
    }
  }

  const std::int64_t budget = greedy_budget(pf);
  if (!BudgetedCover::fits_budget(balls, budget)) {
    throw InternalContradiction("GREEDY radii exceed the budget " + std::to_string(budget));
  }
  BudgetedCover cover(std::move(balls), budget);
  const LabeledGraph g = path_forest_to_graph(pf);
  BurnSchedule schedule = schedule_from_cover(g, cover);
  return {std::move(cover), std::move(schedule), std::move(trace)};
}

}  // namespace burn
