#ifndef BURN_PARTITIONS_HPP
#define BURN_PARTITIONS_HPP

// Instance enumeration and seeded random instance generation.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "burn/core_model.hpp"

namespace burn {

// Calls `visit` with every partition of n as a non-increasing vector, in
// reverse lexicographic order ((n) first, (1,...,1) last).
void for_each_partition(std::int64_t n, const std::function<void(const std::vector<std::int64_t>&)>& visit);

// Same, restricted to partitions with at least `min_parts` parts.
void for_each_partition(std::int64_t n, std::int64_t min_parts,
                        const std::function<void(const std::vector<std::int64_t>&)>& visit);

// All path-forests of order 1..max_n.
std::vector<PathForest> all_path_forests(std::int64_t max_n);

// All spiders of order 4..max_n (partitions of n-1 into >= 3 parts).
std::vector<Spider> all_spiders(std::int64_t max_n);

// Seeded generator. Uses mt19937_64 with its own bounded draw so that streams
// are identical on every standard library.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Order uniform in [1, max_n], split into a uniform number of components.
  PathForest path_forest(std::int64_t max_n);
  // Order uniform in [min_n, max_n] (min_n >= 4), arm count uniform in
  // [3, min(max_arms, n-1)], arm lengths a random composition of n-1.
  Spider spider(std::int64_t min_n, std::int64_t max_n, std::int64_t max_arms);
  // Spider of order n with the given arm count and random arm lengths.
  Spider spider_with(std::int64_t n, std::int64_t arms);

 private:
  std::vector<std::int64_t> composition(std::int64_t total, std::int64_t parts);

  std::mt19937_64 rng_;
};

}  // namespace burn

#endif  // BURN_PARTITIONS_HPP
