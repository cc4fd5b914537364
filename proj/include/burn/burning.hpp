#ifndef BURN_BURNING_HPP
#define BURN_BURNING_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "burn/core_model.hpp"

namespace burn {

// Burn time of a vertex that never catches fire.
inline constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();

struct BurnResult {
  // First-burn round per dense vertex index of the simulated graph.
  std::vector<std::int64_t> burn_time;
  // Round in which the last vertex burns; kNever if some vertex never does.
  std::int64_t completion_time = kNever;

  bool complete() const { return completion_time != kNever; }
};

// Round-by-round burning process. Round t first spreads fire from every vertex
// that burned in round t-1, then ignites the round's source if it is still
// unburned (igniting a burned vertex is a no-op).
class BurnProcess {
 public:
  using Index = LabeledGraph::Index;

  explicit BurnProcess(const LabeledGraph& g);

  // Runs one round. `source` is a dense index or nothing.
  void advance(std::optional<Index> source);

  std::int64_t round() const { return round_; }
  bool finished() const { return burned_count_ == burn_time_.size(); }
  // True when no further spreading can happen without new sources.
  bool stalled() const { return frontier_.empty(); }
  bool is_burned(Index v) const { return burn_time_[v] != kNever; }
  std::size_t burned_count() const { return burned_count_; }
  const std::vector<std::int64_t>& burn_times() const { return burn_time_; }

  // Smallest unburned vertex in canonical order, if any.
  std::optional<Index> smallest_unburned();

 private:
  const LabeledGraph* graph_;
  std::vector<std::int64_t> burn_time_;
  std::vector<Index> frontier_;
  std::vector<Index> next_;
  std::int64_t round_ = 0;
  std::size_t burned_count_ = 0;
  Index scan_ = 0;
};

// Runs the process with the given sources, then keeps spreading until the
// graph is burned or the fire cannot reach the rest.
// Throws InvalidArgument for unknown or repeated sources.
BurnResult simulate(const LabeledGraph& g, std::span<const VertexId> sources);

// True iff the schedule's sources burn all of g by its claimed time.
bool verify_schedule(const LabeledGraph& g, const BurnSchedule& s);

// True iff the union of the cover's closed neighborhoods is V(g).
bool covers(const LabeledGraph& g, std::span<const CoverBall> balls);

// Turns a budgeted cover into a burning schedule: centers in order of
// non-increasing radius, an already-burned center replaced by the smallest
// unburned vertex, and filler sources (smallest unburned vertex) until the
// graph is burned or `budget` sources are placed. claimed_time is the
// simulated completion round, which never exceeds the budget.
// Throws InvalidArgument when the cover does not cover g.
BurnSchedule schedule_from_cover(const LabeledGraph& g, const BudgetedCover& c);

// Inverse direction: source i of a verified schedule with claimed time T
// becomes the ball (v_i, T - i), budget T.
// Throws InvalidArgument when the schedule does not verify.
BudgetedCover cover_from_schedule(const LabeledGraph& g, const BurnSchedule& s);

}  // namespace burn

#endif  // BURN_BURNING_HPP
