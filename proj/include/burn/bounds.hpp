#ifndef BURN_BOUNDS_HPP
#define BURN_BOUNDS_HPP

// Closed-form bounds on the burning number of a path-forest of order n with t
// components. All arithmetic is exact integer arithmetic.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "burn/core_model.hpp"

namespace burn {

// max(ceil(sqrt(n)), t)
std::int64_t lower_bound(std::int64_t n, std::int64_t t);
// floor(n / (2t)) + t
std::int64_t ub_floor(std::int64_t n, std::int64_t t);
// ceil(sqrt(n) + (t-1)/2), defined only while t <= ceil(sqrt(n)).
std::optional<std::int64_t> ub_sqrt(std::int64_t n, std::int64_t t);

inline std::int64_t lower_bound(const PathForest& pf) {
  return lower_bound(pf.order(), pf.components());
}
inline std::int64_t ub_floor(const PathForest& pf) {
  return ub_floor(pf.order(), pf.components());
}
inline std::optional<std::int64_t> ub_sqrt(const PathForest& pf) {
  return ub_sqrt(pf.order(), pf.components());
}

// Best applicable upper bound.
std::int64_t best_upper_bound(std::int64_t n, std::int64_t t);

// Non-negative rational kept unreduced; compares by cross-multiplication.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

struct BoundRow {
  std::int64_t t = 0;
  std::int64_t lower = 0;
  std::int64_t ub_floor = 0;
  std::optional<std::int64_t> ub_sqrt;
  Ratio ratio;  // min(applicable upper bounds) / lower
};

// The balanced path-forest of order n with t components (orders ceil(n/t) or
// floor(n/t)).
PathForest balanced_path_forest(std::int64_t n, std::int64_t t);

BoundRow bound_row(std::int64_t n, std::int64_t t);
// One row per t = 1..n.
std::vector<BoundRow> bound_table(std::int64_t n);

}  // namespace burn

#endif  // BURN_BOUNDS_HPP
