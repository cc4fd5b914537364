#ifndef BURN_GREEDY_HPP
#define BURN_GREEDY_HPP

// GREEDY for path-forests: repeatedly remove a closed neighborhood from a
// largest component, with the radius chosen from the two upper bounds. The
// removed neighborhoods form a budgeted cover, which becomes a burning
// schedule of length at most 3/2 times optimal.

#include <cstdint>
#include <optional>
#include <vector>

#include "burn/core_model.hpp"

namespace burn {

// floor(n/(2t)) + t - 1 when t >= floor(sqrt(n)), else ceil(sqrt(n)) - 1.
std::int64_t greedy_radius(std::int64_t n, std::int64_t t);

struct GreedyStep {
  enum class Action { RemoveComponent, RemoveNeighborhood };

  PathForest before;
  std::int64_t radius = 0;
  Action action = Action::RemoveComponent;
  // Center in the labels of `before` (component index within `before`).
  VertexId center;
};

// One GREEDY iteration on a (non-empty) path-forest. The neighborhood is cut
// from the high-position end of the first largest component, so the remainder
// of that component stays a single path with its low positions unchanged.
struct GreedyStepResult {
  CoverBall removed;                 // in the labels of the input forest
  std::optional<PathForest> after;   // nothing once the forest is empty
  GreedyStep::Action action = GreedyStep::Action::RemoveComponent;
};
GreedyStepResult greedy_step(const PathForest& pf);

struct GreedyResult {
  BudgetedCover cover;     // centers in the labels of the input forest
  BurnSchedule schedule;   // verified; claimed time is the completion round
  std::vector<GreedyStep> trace;

  std::int64_t burn_time() const { return schedule.claimed_time(); }
};

// Budget is ub_sqrt when t <= ceil(sqrt(n)), else ub_floor, on the input.
GreedyResult greedy_burn(const PathForest& pf);

// Budget GREEDY's cover is checked against for this instance.
std::int64_t greedy_budget(const PathForest& pf);

}  // namespace burn

#endif  // BURN_GREEDY_HPP
