#include "burn/core_model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "burn/errors.hpp"

namespace burn {

namespace {

std::vector<std::int64_t> sorted_non_increasing(std::vector<std::int64_t> values) {
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace

PathForest::PathForest(std::vector<std::int64_t> orders)
    : orders_(sorted_non_increasing(std::move(orders))) {
  if (orders_.empty()) throw InvalidArgument("path-forest needs at least one component");
  if (orders_.back() < 1) throw InvalidArgument("path-forest component orders must be >= 1");
  order_ = std::accumulate(orders_.begin(), orders_.end(), std::int64_t{0});
}

Spider::Spider(std::vector<std::int64_t> arms) : arms_(sorted_non_increasing(std::move(arms))) {
  if (arms_.size() < 3) {
    throw InvalidArgument("a spider needs at least 3 arms; model " +
                          std::to_string(arms_.size()) + " arms as a path");
  }
  if (arms_.back() < 1) throw InvalidArgument("spider arm lengths must be >= 1");
  order_ = 1 + std::accumulate(arms_.begin(), arms_.end(), std::int64_t{0});
}

LabeledGraph LabeledGraph::from_edges(std::vector<VertexId> vertices,
                                      std::span<const std::pair<VertexId, VertexId>> edges) {
  LabeledGraph g;
  if (!std::is_sorted(vertices.begin(), vertices.end())) {
    std::sort(vertices.begin(), vertices.end());
  }
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw InvalidArgument("duplicate vertex in graph");
  }
  g.vertices_ = std::move(vertices);
  g.keys_.reserve(g.vertices_.size());
  for (const auto& v : g.vertices_) {
    if (v.index < 0 || v.position < 0) throw InvalidArgument("vertex labels must be non-negative");
    g.keys_.push_back(v.key());
  }

  std::vector<std::pair<Index, Index>> ends;
  ends.reserve(edges.size());
  g.offsets_.assign(g.vertices_.size() + 1, 0);
  // Builders list edges in vertex order, so the slot after the previous hit
  // usually matches without a search.
  Index hint = 0;
  auto locate = [&](const VertexId& v) {
    for (Index probe : {hint, hint + 1}) {
      if (probe < g.keys_.size() && v.index >= 0 && v.position >= 0 && g.keys_[probe] == v.key()) {
        return hint = probe;
      }
    }
    return hint = g.index_of(v);
  };
  for (const auto& [u, v] : edges) {
    if (u == v) throw InvalidArgument("self-loop in graph");
    const Index a = locate(u);
    const Index b = locate(v);
    ends.emplace_back(a, b);
    ++g.offsets_[a + 1];
    ++g.offsets_[b + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  // Bucket arcs by tail, then sort and dedupe each row in place.
  std::vector<Index> raw(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : ends) {
    raw[fill[a]++] = b;
    raw[fill[b]++] = a;
  }
  g.neighbors_.reserve(raw.size());
  std::size_t row_start = 0;
  for (Index v = 0; v < g.vertices_.size(); ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    g.neighbors_.insert(g.neighbors_.end(), first, std::unique(first, last));
    g.offsets_[v] = row_start;
    row_start = g.neighbors_.size();
  }
  g.offsets_.back() = row_start;
  return g;
}

std::optional<LabeledGraph::Index> LabeledGraph::find(const VertexId& v) const {
  if (v.index < 0 || v.position < 0) return std::nullopt;
  const auto k = v.key();
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<Index>(it - keys_.begin());
}

LabeledGraph::Index LabeledGraph::index_of(const VertexId& v) const {
  const auto i = find(v);
  if (!i) {
    throw InvalidArgument("vertex (" + std::to_string(static_cast<int>(v.kind)) + "," +
                          std::to_string(v.index) + "," + std::to_string(v.position) +
                          ") is not in the graph");
  }
  return *i;
}

bool LabeledGraph::adjacent(const VertexId& u, const VertexId& v) const {
  const auto a = find(u);
  const auto b = find(v);
  if (!a || !b) return false;
  const auto nb = neighbors(*a);
  return std::binary_search(nb.begin(), nb.end(), *b);
}

std::vector<std::int64_t> LabeledGraph::distances_from(Index source) const {
  std::vector<std::int64_t> dist(order(), -1);
  std::queue<Index> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop();
    for (const Index w : neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::size_t LabeledGraph::connected_components() const {
  std::vector<bool> seen(order(), false);
  std::size_t count = 0;
  std::vector<Index> stack;
  for (Index s = 0; s < order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Index u = stack.back();
      stack.pop_back();
      for (const Index w : neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

BurnSchedule::BurnSchedule(std::vector<VertexId> sources, std::int64_t claimed_time)
    : sources_(std::move(sources)), claimed_time_(claimed_time) {
  if (claimed_time_ < 1) throw InvalidArgument("claimed time must be >= 1");
  if (static_cast<std::int64_t>(sources_.size()) > claimed_time_) {
    throw InvalidArgument("schedule has more sources than claimed rounds");
  }
  std::vector<VertexId> sorted = sources_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("schedule sources must be pairwise distinct");
  }
}

BudgetedCover::BudgetedCover(std::vector<CoverBall> balls, std::int64_t budget)
    : balls_(std::move(balls)), budget_(budget) {
  if (budget_ < 1) throw InvalidArgument("cover budget must be >= 1");
  for (const auto& b : balls_) {
    if (b.radius < 0) throw InvalidArgument("cover radius must be >= 0");
  }
  std::set<CoverBall> distinct(balls_.begin(), balls_.end());
  if (distinct.size() != balls_.size()) {
    throw InvalidArgument("cover repeats a (center, radius) pair");
  }
  if (!fits_budget(balls_, budget_)) {
    throw InvalidArgument("cover radii exceed the budget: r_(i) > M - i for some i (M = " +
                          std::to_string(budget_) + ")");
  }
}

std::vector<CoverBall> BudgetedCover::by_radius() const {
  std::vector<CoverBall> sorted = balls_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CoverBall& a, const CoverBall& b) { return a.radius > b.radius; });
  return sorted;
}

bool BudgetedCover::fits_budget(std::int64_t budget) const { return fits_budget(balls_, budget); }

bool BudgetedCover::fits_budget(std::span<const CoverBall> balls, std::int64_t budget) {
  std::vector<std::int64_t> radii;
  radii.reserve(balls.size());
  for (const auto& b : balls) radii.push_back(b.radius);
  std::sort(radii.begin(), radii.end(), std::greater<>());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] > budget - static_cast<std::int64_t>(i + 1)) return false;
  }
  return true;
}

LabeledGraph path_forest_to_graph(const PathForest& pf) {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
  vertices.reserve(static_cast<std::size_t>(pf.order()));
  edges.reserve(static_cast<std::size_t>(pf.order() - pf.components()));
  const auto& orders = pf.orders();
  for (std::size_t c = 0; c < orders.size(); ++c) {
    const auto ci = static_cast<std::int32_t>(c);
    for (std::int32_t p = 0; p < orders[c]; ++p) {
      vertices.push_back(VertexId::component(ci, p));
      if (p > 0) edges.emplace_back(VertexId::component(ci, p - 1), VertexId::component(ci, p));
    }
  }
  return LabeledGraph::from_edges(std::move(vertices), edges);
}

LabeledGraph spider_to_graph(const Spider& sp) {
  std::vector<VertexId> vertices{VertexId::head()};
  std::vector<std::pair<VertexId, VertexId>> edges;
  vertices.reserve(static_cast<std::size_t>(sp.order()));
  edges.reserve(static_cast<std::size_t>(sp.order() - 1));
  const auto& arms = sp.arms();
  for (std::size_t a = 0; a < arms.size(); ++a) {
    const auto ai = static_cast<std::int32_t>(a);
    for (std::int32_t p = 1; p <= arms[a]; ++p) {
      vertices.push_back(VertexId::arm(ai, p));
      edges.emplace_back(p == 1 ? VertexId::head() : VertexId::arm(ai, p - 1), VertexId::arm(ai, p));
    }
  }
  return LabeledGraph::from_edges(std::move(vertices), edges);
}

std::int64_t path_radius(std::int64_t order) {
  if (order < 1) throw InvalidArgument("path order must be >= 1");
  return order / 2;
}

std::int64_t path_center(std::int64_t order) {
  if (order < 1) throw InvalidArgument("path order must be >= 1");
  return (order - 1) / 2;
}

}  // namespace burn
