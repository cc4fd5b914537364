#include "burn/partitions.hpp"

#include <algorithm>
#include <limits>

#include "burn/errors.hpp"

namespace burn {

namespace {

void partitions_rec(std::int64_t remaining, std::int64_t cap, std::vector<std::int64_t>& parts,
                    std::int64_t min_parts,
                    const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (remaining == 0) {
    if (static_cast<std::int64_t>(parts.size()) >= min_parts) visit(parts);
    return;
  }
  for (std::int64_t p = std::min(cap, remaining); p >= 1; --p) {
    parts.push_back(p);
    partitions_rec(remaining - p, p, parts, min_parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(std::int64_t n, const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  for_each_partition(n, 1, visit);
}

void for_each_partition(std::int64_t n, std::int64_t min_parts,
                        const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (n < 1) return;
  std::vector<std::int64_t> parts;
  partitions_rec(n, n, parts, min_parts, visit);
}

std::vector<PathForest> all_path_forests(std::int64_t max_n) {
  std::vector<PathForest> out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for_each_partition(n, [&](const std::vector<std::int64_t>& p) { out.emplace_back(p); });
  }
  return out;
}

std::vector<Spider> all_spiders(std::int64_t max_n) {
  std::vector<Spider> out;
  for (std::int64_t n = 4; n <= max_n; ++n) {
    for_each_partition(n - 1, 3, [&](const std::vector<std::int64_t>& p) { out.emplace_back(p); });
  }
  return out;
}

std::int64_t InstanceGenerator::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng_());
  // Rejection sampling for an unbiased draw.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % span);
  std::uint64_t x = rng_();
  while (x >= limit) x = rng_();
  return lo + static_cast<std::int64_t>(x % span);
}

std::vector<std::int64_t> InstanceGenerator::composition(std::int64_t total, std::int64_t parts) {
  // Distinct cut points in 1..total-1 chosen by partial Fisher-Yates when the
  // range is small, by rejection otherwise.
  std::vector<std::int64_t> cuts;
  const std::int64_t need = parts - 1;
  if (total - 1 <= 4 * need) {
    std::vector<std::int64_t> pool(static_cast<std::size_t>(total - 1));
    for (std::int64_t i = 0; i < total - 1; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    for (std::int64_t i = 0; i < need; ++i) {
      const auto j = static_cast<std::size_t>(uniform(i, total - 2));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      cuts.push_back(pool[static_cast<std::size_t>(i)]);
    }
  } else {
    while (static_cast<std::int64_t>(cuts.size()) < need) {
      const std::int64_t c = uniform(1, total - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int64_t> out;
  std::int64_t prev = 0;
  for (const auto c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

PathForest InstanceGenerator::path_forest(std::int64_t max_n) {
  if (max_n < 1) throw InvalidArgument("max_n must be >= 1");
  const std::int64_t n = uniform(1, max_n);
  const std::int64_t t = uniform(1, n);
  return PathForest(composition(n, t));
}

Spider InstanceGenerator::spider(std::int64_t min_n, std::int64_t max_n, std::int64_t max_arms) {
  if (min_n < 4 || max_n < min_n || max_arms < 3) throw InvalidArgument("bad spider generator range");
  const std::int64_t n = uniform(min_n, max_n);
  const std::int64_t m = uniform(3, std::min(max_arms, n - 1));
  return spider_with(n, m);
}

Spider InstanceGenerator::spider_with(std::int64_t n, std::int64_t arms) {
  if (arms < 3 || n - 1 < arms) throw InvalidArgument("spider needs 3 <= arms <= n - 1");
  return Spider(composition(n - 1, arms));
}

}  // namespace burn
