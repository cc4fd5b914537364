#ifndef BURN_EXACT_HPP
#define BURN_EXACT_HPP

// Exact burning numbers for small instances. Three independent routes:
//  - a cover search on arbitrary graphs (balls of radii k-1, k-2, ..., 0),
//  - an interval-multiset search specialised to path-forests,
//  - a naive enumeration of burning sequences, round by round.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "burn/core_model.hpp"

namespace burn {

inline constexpr std::size_t kExactMaxVertices = 40;
inline constexpr std::size_t kNaiveMaxVertices = 12;
inline constexpr std::int64_t kExactPfMaxRounds = 62;

struct ExactResult {
  std::int64_t value = 0;
  BudgetedCover witness;  // budget == value
};

// Throws SizeGuardExceeded above kExactMaxVertices, InvalidArgument when empty.
ExactResult exact_burning_number(const LabeledGraph& g);

// Whether balls of radii k-1, ..., 0 can cover g; fills `witness` on success.
bool cover_feasible(const LabeledGraph& g, std::int64_t k, std::vector<CoverBall>* witness = nullptr);

// Smallest k such that the interval lengths {1, 3, ..., 2k-1} can be handed out
// so that every component receives lengths summing to at least its order.
// Throws SizeGuardExceeded when k would pass kExactPfMaxRounds.
std::int64_t exact_pf(const PathForest& pf);

// exact_pf together with a witness cover (labels component(c, p)) obtained by
// tiling each component with its assigned intervals.
ExactResult exact_pf_witness(const PathForest& pf);

// The k-round feasibility test behind exact_pf. On success `assignment[c]`
// lists the interval lengths given to component c.
bool interval_assignment_feasible(const PathForest& pf, std::int64_t k,
                                  std::vector<std::vector<std::int64_t>>* assignment = nullptr);

// True iff some sequence of at most k distinct sources burns g by round k.
// Throws SizeGuardExceeded above kNaiveMaxVertices.
bool naive_schedule_search(const LabeledGraph& g, std::int64_t k);

// Smallest k accepted by naive_schedule_search.
std::int64_t naive_burning_number(const LabeledGraph& g);

}  // namespace burn

#endif  // BURN_EXACT_HPP
