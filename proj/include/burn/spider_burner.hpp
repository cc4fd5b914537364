#ifndef BURN_SPIDER_BURNER_HPP
#define BURN_SPIDER_BURNER_HPP

// Constructive burning of spiders within ceil(sqrt(n)) rounds.
//
// With alpha = ceil(sqrt(n)) the construction is:
//  - n <= 25: exact search (the small cases are settled by enumeration);
//  - an arm of length >= 2*alpha - 1: cut the 2*alpha - 1 tip vertices with a
//    ball of radius alpha - 1 and recurse on what is left (order at most
//    (alpha-1)^2, so it fits budget alpha - 1);
//  - alpha - 1 arms, all of length alpha + 1: ball of radius alpha - 1 around
//    a neighbor of the head, then the leftover paths largest-first with radii
//    alpha - 2, alpha - 3, ...;
//  - otherwise: ball of radius alpha - 1 at the head, leaving t paths of order
//    <= alpha - 1, handled by the size of t (small t, t = (alpha+1)/2,
//    t = alpha - 1, or GREEDY for everything in between).
// Each terminal branch checks its balls against the sub-spider it covers; a
// failed check on an instance of order <= 25 falls back to exact search.

#include <cstdint>
#include <variant>
#include <vector>

#include "burn/core_model.hpp"

namespace burn {

// Cover of P_order (labels component(0, p)) with budget ceil(sqrt(order)):
// radii ceil(sqrt(order)) - 1, ..., tiled left to right.
BudgetedCover burn_path(std::int64_t order);

struct LongArmReduction {
  CoverBall removed;  // radius alpha - 1, in the labels of the input spider
  // Spider while >= 3 arms survive, otherwise the single path through the
  // head (component 0 runs from the leaf of the longer arm to the other leaf).
  std::variant<Spider, PathForest> remainder;
};

// Requires alpha == ceil(sqrt(n)) and a longest arm of length >= 2*alpha - 1.
LongArmReduction reduce_long_arm(const Spider& sp, std::int64_t alpha);

// Exact cover with budget ceil(sqrt(n)) for spiders of order <= 25.
BudgetedCover burn_small_spider(const Spider& sp);

enum class SpiderBranch {
  SmallExact,
  LongArm,
  PathRemainder,
  NeighborOfHead,  // alpha - 1 arms of length alpha + 1
  HeadFewPaths,    // head ball, t <= alpha / 2
  HeadOddPaths,    // head ball, t = (alpha + 1) / 2 with alpha odd
  HeadPairedPaths, // head ball, t = alpha - 1
  HeadGreedy,      // head ball, GREEDY on the leftover path-forest
  ExactFallback,
};

const char* to_string(SpiderBranch b);

struct SpiderStep {
  SpiderBranch branch;
  std::int64_t order;
  std::int64_t alpha;
  std::int64_t leftover_paths;  // t after the head ball, else 0
};

struct SpiderBurnOptions {
  // Settle n <= 25 by exact search. When off, the constructive branches run
  // at every size and exact search only backs up a failed local check.
  bool exact_small_cases = true;
};

struct SpiderBurnResult {
  BudgetedCover cover;    // budget ceil(sqrt(n))
  BurnSchedule schedule;  // verified against spider_to_graph(sp)
  std::vector<SpiderStep> trace;

  std::int64_t burn_time() const { return schedule.claimed_time(); }
};

// Throws InternalContradiction if a branch cannot produce a valid cover.
SpiderBurnResult burn_spider(const Spider& sp, SpiderBurnOptions options = {});

}  // namespace burn

#endif  // BURN_SPIDER_BURNER_HPP
