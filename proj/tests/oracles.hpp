#ifndef BURN_TESTS_ORACLES_HPP
#define BURN_TESTS_ORACLES_HPP

// Reference computations used only by the tests. None of these call into the
// library's algorithms; they work from the instance shape directly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "burn/core_model.hpp"

namespace oracle {

using burn::VertexId;

inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

// Small graph on bit positions 0..n-1 (n <= 64).
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::map<VertexId, int> index;

  void add_vertex(const VertexId& v) {
    index.emplace(v, n++);
    adj.push_back(0);
  }
  void add_edge(const VertexId& u, const VertexId& v) {
    const int a = index.at(u);
    const int b = index.at(v);
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
  std::uint64_t spread(std::uint64_t burned) const {
    std::uint64_t out = burned;
    for (int v = 0; v < n; ++v) {
      if (burned >> v & 1) out |= adj[v];
    }
    return out;
  }
};

inline MaskGraph forest_masks(const std::vector<std::int64_t>& sorted_orders) {
  MaskGraph g;
  for (std::size_t c = 0; c < sorted_orders.size(); ++c) {
    for (std::int32_t p = 0; p < sorted_orders[c]; ++p) {
      g.add_vertex(VertexId::component(static_cast<std::int32_t>(c), p));
      if (p > 0) {
        g.add_edge(VertexId::component(static_cast<std::int32_t>(c), p - 1),
                   VertexId::component(static_cast<std::int32_t>(c), p));
      }
    }
  }
  return g;
}

inline MaskGraph spider_masks(const std::vector<std::int64_t>& sorted_arms) {
  MaskGraph g;
  g.add_vertex(VertexId::head());
  for (std::size_t a = 0; a < sorted_arms.size(); ++a) {
    const auto ai = static_cast<std::int32_t>(a);
    for (std::int32_t p = 1; p <= sorted_arms[a]; ++p) {
      g.add_vertex(VertexId::arm(ai, p));
      g.add_edge(p == 1 ? VertexId::head() : VertexId::arm(ai, p - 1), VertexId::arm(ai, p));
    }
  }
  return g;
}

// Steps the process literally: spread, then ignite. Returns per-vertex burn
// rounds (kInf if never) after running until nothing changes.
inline std::vector<std::int64_t> step_burn_times(const MaskGraph& g, const std::vector<int>& sources) {
  std::vector<std::int64_t> times(static_cast<std::size_t>(g.n), kInf);
  std::uint64_t burned = 0;
  for (std::int64_t round = 1;; ++round) {
    std::uint64_t next = g.spread(burned);
    const std::size_t i = static_cast<std::size_t>(round - 1);
    if (i < sources.size()) next |= std::uint64_t{1} << sources[i];
    for (int v = 0; v < g.n; ++v) {
      if ((next >> v & 1) && !(burned >> v & 1)) times[static_cast<std::size_t>(v)] = round;
    }
    if (next == burned && i >= sources.size()) break;
    burned = next;
  }
  return times;
}

inline bool burns_within(const MaskGraph& g, std::uint64_t burned, std::int64_t rounds_left) {
  if (burned == g.all()) return true;
  if (rounds_left == 0) return false;
  const std::uint64_t spread = g.spread(burned);
  if (spread == g.all()) return true;
  for (int v = 0; v < g.n; ++v) {
    if (!(spread >> v & 1) && burns_within(g, spread | std::uint64_t{1} << v, rounds_left - 1)) return true;
  }
  return false;
}

// Burning number by trying every sequence of unburned sources. Tiny graphs only.
inline std::int64_t brute_burning_number(const MaskGraph& g) {
  for (std::int64_t k = 1;; ++k) {
    for (int v = 0; v < g.n; ++v) {
      if (burns_within(g, std::uint64_t{1} << v, k - 1)) return k;
    }
  }
}

// Closed-form distances. Spider vertices sit at (arm, depth); the head is depth 0.
inline std::int64_t spider_distance(const VertexId& u, const VertexId& v) {
  const bool uh = u.kind == VertexId::Kind::Head;
  const bool vh = v.kind == VertexId::Kind::Head;
  if (uh && vh) return 0;
  if (uh) return v.position;
  if (vh) return u.position;
  if (u.index == v.index) return std::abs(u.position - v.position);
  return std::int64_t{u.position} + v.position;
}

inline std::int64_t forest_distance(const VertexId& u, const VertexId& v) {
  if (u.index != v.index) return kInf;
  return std::abs(u.position - v.position);
}

// A vertex burns at min over sources s_i of i + d(s_i, v); a source that is
// already burned at its turn never improves on this minimum.
template <class Dist>
std::int64_t completion_by_distance(const std::vector<VertexId>& vertices, const std::vector<VertexId>& sources,
                                    Dist dist) {
  std::int64_t worst = 0;
  for (const auto& v : vertices) {
    std::int64_t best = kInf;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const std::int64_t d = dist(sources[i], v);
      if (d != kInf) best = std::min(best, static_cast<std::int64_t>(i + 1) + d);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

inline std::vector<VertexId> spider_vertices(const std::vector<std::int64_t>& sorted_arms) {
  std::vector<VertexId> out{VertexId::head()};
  for (std::size_t a = 0; a < sorted_arms.size(); ++a) {
    for (std::int32_t p = 1; p <= sorted_arms[a]; ++p) out.push_back(VertexId::arm(static_cast<std::int32_t>(a), p));
  }
  return out;
}

inline std::vector<VertexId> forest_vertices(const std::vector<std::int64_t>& sorted_orders) {
  std::vector<VertexId> out;
  for (std::size_t c = 0; c < sorted_orders.size(); ++c) {
    for (std::int32_t p = 0; p < sorted_orders[c]; ++p) {
      out.push_back(VertexId::component(static_cast<std::int32_t>(c), p));
    }
  }
  return out;
}

// Whether every vertex is within some ball, by closed-form distance.
template <class Dist>
bool balls_cover(const std::vector<VertexId>& vertices, const std::vector<burn::CoverBall>& balls, Dist dist) {
  return std::all_of(vertices.begin(), vertices.end(), [&](const VertexId& v) {
    return std::any_of(balls.begin(), balls.end(),
                       [&](const burn::CoverBall& b) { return dist(b.center, v) <= b.radius; });
  });
}

// Number of integer partitions of n (p(0) = 1).
inline std::int64_t partition_count(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  }
  return p[static_cast<std::size_t>(n)];
}

// Partitions of n into exactly k parts.
inline std::int64_t partition_count_parts(int n, int k) {
  std::vector<std::vector<std::int64_t>> q(static_cast<std::size_t>(n + 1),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(k + 1), 0));
  q[0][0] = 1;
  for (int s = 1; s <= n; ++s) {
    for (int j = 1; j <= std::min(s, k); ++j) {
      q[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] =
          q[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j - 1)] +
          q[static_cast<std::size_t>(s - j)][static_cast<std::size_t>(j)];
    }
  }
  return q[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Smallest k with k >= sqrt(n) + h/2, i.e. 2k - h >= 0 and (2k - h)^2 >= 4n.
// Fine in 64 bits for n up to about 10^17.
inline std::int64_t ceil_sqrt_plus_half_by_squares(std::int64_t n, std::int64_t h) {
  auto ok = [&](std::int64_t k) {
    const std::int64_t lhs = 2 * k - h;
    return lhs >= 0 && lhs * lhs >= 4 * n;
  };
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (!ok(hi)) hi *= 2;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid; else lo = mid + 1;
  }
  return lo;
}

inline std::int64_t ceil_sqrt_long_double(std::int64_t n, std::int64_t h) {
  return static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<long double>(n)) + static_cast<long double>(h) / 2));
}

}  // namespace oracle

#endif  // BURN_TESTS_ORACLES_HPP
