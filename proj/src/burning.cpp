#include "burn/burning.hpp"

#include <algorithm>
#include <string>

#include "burn/errors.hpp"

namespace burn {

BurnProcess::BurnProcess(const LabeledGraph& g) : graph_(&g), burn_time_(g.order(), kNever) {}

void BurnProcess::advance(std::optional<Index> source) {
  ++round_;
  next_.clear();
  for (const Index u : frontier_) {
    for (const Index w : graph_->neighbors(u)) {
      if (burn_time_[w] == kNever) {
        burn_time_[w] = round_;
        next_.push_back(w);
      }
    }
  }
  if (source && burn_time_[*source] == kNever) {
    burn_time_[*source] = round_;
    next_.push_back(*source);
  }
  burned_count_ += next_.size();
  frontier_.swap(next_);
}

std::optional<BurnProcess::Index> BurnProcess::smallest_unburned() {
  while (scan_ < burn_time_.size() && burn_time_[scan_] != kNever) ++scan_;
  if (scan_ == burn_time_.size()) return std::nullopt;
  return scan_;
}

namespace {

std::vector<LabeledGraph::Index> resolve_sources(const LabeledGraph& g,
                                                 std::span<const VertexId> sources) {
  std::vector<LabeledGraph::Index> idx;
  idx.reserve(sources.size());
  for (const auto& v : sources) idx.push_back(g.index_of(v));
  std::vector<LabeledGraph::Index> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("burning sources must be pairwise distinct");
  }
  return idx;
}

}  // namespace

BurnResult simulate(const LabeledGraph& g, std::span<const VertexId> sources) {
  const auto idx = resolve_sources(g, sources);
  BurnResult result;
  if (g.empty()) {
    result.completion_time = 0;
    return result;
  }
  BurnProcess process(g);
  std::size_t next = 0;
  while (!process.finished()) {
    if (next >= idx.size() && process.stalled()) break;
    std::optional<LabeledGraph::Index> src;
    if (next < idx.size()) src = idx[next++];
    process.advance(src);
  }
  result.burn_time = process.burn_times();
  result.completion_time = process.finished() ? process.round() : kNever;
  return result;
}

bool verify_schedule(const LabeledGraph& g, const BurnSchedule& s) {
  const BurnResult r = simulate(g, s.sources());
  return r.complete() && r.completion_time <= s.claimed_time();
}

bool covers(const LabeledGraph& g, std::span<const CoverBall> balls) {
  // Multi-source BFS keyed by remaining radius, largest first; each vertex is
  // settled at the best remaining reach any ball gives it.
  std::vector<std::int64_t> reach(g.order(), -1);
  std::vector<CoverBall> sorted(balls.begin(), balls.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const CoverBall& a, const CoverBall& b) { return a.radius > b.radius; });
  std::vector<std::vector<LabeledGraph::Index>> buckets;
  if (!sorted.empty()) buckets.resize(static_cast<std::size_t>(sorted.front().radius) + 1);
  for (const auto& b : sorted) {
    const auto i = g.index_of(b.center);
    if (reach[i] < b.radius) {
      reach[i] = b.radius;
      buckets[static_cast<std::size_t>(b.radius)].push_back(i);
    }
  }
  for (std::size_t r = buckets.size(); r-- > 0;) {
    for (std::size_t k = 0; k < buckets[r].size(); ++k) {
      const auto u = buckets[r][k];
      if (reach[u] != static_cast<std::int64_t>(r) || r == 0) continue;
      for (const auto w : g.neighbors(u)) {
        if (reach[w] < static_cast<std::int64_t>(r) - 1) {
          reach[w] = static_cast<std::int64_t>(r) - 1;
          buckets[r - 1].push_back(w);
        }
      }
    }
  }
  return std::all_of(reach.begin(), reach.end(), [](std::int64_t x) { return x >= 0; });
}

BurnSchedule schedule_from_cover(const LabeledGraph& g, const BudgetedCover& c) {
  if (g.empty()) throw InvalidArgument("cannot schedule an empty graph");
  if (!covers(g, c.balls())) throw InvalidArgument("cover does not cover every vertex");

  const auto ordered = c.by_radius();
  std::vector<LabeledGraph::Index> centers;
  centers.reserve(ordered.size());
  for (const auto& b : ordered) centers.push_back(g.index_of(b.center));

  BurnProcess process(g);
  std::vector<VertexId> sources;
  for (std::int64_t round = 1; round <= c.budget() && !process.finished(); ++round) {
    std::optional<LabeledGraph::Index> pick;
    const auto k = static_cast<std::size_t>(round - 1);
    if (k < centers.size() && !process.is_burned(centers[k])) {
      pick = centers[k];
    } else {
      pick = process.smallest_unburned();
    }
    sources.push_back(g.vertex(*pick));
    process.advance(pick);
  }
  while (!process.finished() && !process.stalled()) process.advance(std::nullopt);

  if (!process.finished() || process.round() > c.budget()) {
    throw InternalContradiction("cover within budget " + std::to_string(c.budget()) +
                                " did not burn the graph in time");
  }
  BurnSchedule schedule(std::move(sources), process.round());
  if (!verify_schedule(g, schedule)) {
    throw InternalContradiction("schedule built from a cover failed verification");
  }
  return schedule;
}

BudgetedCover cover_from_schedule(const LabeledGraph& g, const BurnSchedule& s) {
  if (!verify_schedule(g, s)) throw InvalidArgument("schedule does not burn the graph in time");
  std::vector<CoverBall> balls;
  balls.reserve(s.length());
  for (std::size_t i = 0; i < s.length(); ++i) {
    balls.push_back({s.sources()[i], s.claimed_time() - static_cast<std::int64_t>(i + 1)});
  }
  return BudgetedCover(std::move(balls), s.claimed_time());
}

}  // namespace burn
