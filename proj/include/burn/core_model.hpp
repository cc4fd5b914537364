#ifndef BURN_CORE_MODEL_HPP
#define BURN_CORE_MODEL_HPP

// Domain types shared by every burning algorithm: vertex labels, the two
// structured graph families (path-forests and spiders), explicit graphs, and
// the two certificate forms (burn schedules and budgeted covers).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace burn {

// A vertex label. Path-forest vertices are (component c, position p) with p
// counted from 0; spider vertices are the head or (arm a, position p) with p
// the distance from the head (1..length); vertices of free-form graphs are
// plain node numbers. Labels order lexicographically on (kind, index,
// position); that order drives every deterministic tie-break.
struct VertexId {
  enum class Kind : std::uint8_t { Head = 0, Component = 1, Arm = 2, Node = 3 };

  Kind kind = Kind::Head;
  std::int32_t index = 0;
  std::int32_t position = 0;

  static constexpr VertexId head() { return {Kind::Head, 0, 0}; }
  static constexpr VertexId component(std::int32_t c, std::int32_t p) {
    return {Kind::Component, c, p};
  }
  static constexpr VertexId arm(std::int32_t a, std::int32_t p) {
    return {Kind::Arm, a, p};
  }
  static constexpr VertexId node(std::int32_t k) { return {Kind::Node, k, 0}; }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;

  // Packs kind, index and position into one integer with the same order.
  // Only meaningful when index and position are non-negative.
  constexpr std::uint64_t key() const {
    return std::uint64_t{static_cast<std::uint8_t>(kind)} << 62 |
           std::uint64_t{static_cast<std::uint32_t>(index)} << 31 | static_cast<std::uint32_t>(position);
  }
};

// Disjoint union of paths, held as its component orders in non-increasing
// order. Construction sorts stably, so an input that is already
// non-increasing keeps its component numbering.
class PathForest {
 public:
  explicit PathForest(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::int64_t order() const { return order_; }
  std::int64_t components() const { return static_cast<std::int64_t>(orders_.size()); }
  std::int64_t largest() const { return orders_.front(); }

  friend bool operator==(const PathForest&, const PathForest&) = default;

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t order_ = 0;
};

// A tree with exactly one vertex of degree >= 3. Arm lengths count edges from
// the head to the leaf, so the order is 1 + sum(arms).
class Spider {
 public:
  explicit Spider(std::vector<std::int64_t> arms);

  const std::vector<std::int64_t>& arms() const { return arms_; }
  std::int64_t order() const { return order_; }
  std::int64_t arm_count() const { return static_cast<std::int64_t>(arms_.size()); }

  friend bool operator==(const Spider&, const Spider&) = default;

 private:
  std::vector<std::int64_t> arms_;
  std::int64_t order_ = 0;
};

// Simple undirected graph over VertexId labels. Vertices are kept sorted, so
// the dense index of a vertex is its rank in the canonical order; adjacency is
// stored in CSR form over those indices.
class LabeledGraph {
 public:
  using Index = std::size_t;

  LabeledGraph() = default;

  // Builds from arbitrary vertices and edges. Rejects self-loops, duplicate
  // vertices and edges that mention unknown vertices; parallel edges collapse.
  static LabeledGraph from_edges(std::vector<VertexId> vertices,
                                 std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t order() const { return vertices_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  bool empty() const { return vertices_.empty(); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& vertex(Index i) const { return vertices_[i]; }
  std::optional<Index> find(const VertexId& v) const;
  Index index_of(const VertexId& v) const;  // throws InvalidArgument
  bool contains(const VertexId& v) const { return find(v).has_value(); }

  std::span<const Index> neighbors(Index i) const {
    return {neighbors_.data() + offsets_[i], neighbors_.data() + offsets_[i + 1]};
  }
  std::size_t degree(Index i) const { return offsets_[i + 1] - offsets_[i]; }
  bool adjacent(const VertexId& u, const VertexId& v) const;

  // BFS distances from one vertex; unreachable vertices get -1.
  std::vector<std::int64_t> distances_from(Index source) const;
  std::size_t connected_components() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Index> neighbors_;
};

// Ordered fire sources plus the round by which they claim to burn the graph.
class BurnSchedule {
 public:
  BurnSchedule(std::vector<VertexId> sources, std::int64_t claimed_time);

  const std::vector<VertexId>& sources() const { return sources_; }
  std::int64_t claimed_time() const { return claimed_time_; }
  std::size_t length() const { return sources_.size(); }

  friend bool operator==(const BurnSchedule&, const BurnSchedule&) = default;

 private:
  std::vector<VertexId> sources_;
  std::int64_t claimed_time_;
};

struct CoverBall {
  VertexId center;
  std::int64_t radius = 0;

  friend auto operator<=>(const CoverBall&, const CoverBall&) = default;
};

// Closed neighborhoods N_r[v] together with a budget M. Sorted by radius
// non-increasingly, the i-th radius (1-based) must not exceed M - i; a cover
// of V(G) in this form certifies that G burns within M rounds.
class BudgetedCover {
 public:
  BudgetedCover(std::vector<CoverBall> balls, std::int64_t budget);

  // Balls in the order given at construction.
  const std::vector<CoverBall>& balls() const { return balls_; }
  std::int64_t budget() const { return budget_; }
  std::size_t size() const { return balls_.size(); }

  // Balls sorted by radius non-increasingly; ties keep construction order.
  std::vector<CoverBall> by_radius() const;

  // True when the radii fit the given budget (used to re-budget a cover).
  bool fits_budget(std::int64_t budget) const;
  static bool fits_budget(std::span<const CoverBall> balls, std::int64_t budget);

 private:
  std::vector<CoverBall> balls_;
  std::int64_t budget_;
};

LabeledGraph path_forest_to_graph(const PathForest& pf);
LabeledGraph spider_to_graph(const Spider& sp);

// Radius of the path P_order, i.e. floor(order / 2).
std::int64_t path_radius(std::int64_t order);
// Leftmost center position of P_order (positions 0..order-1).
std::int64_t path_center(std::int64_t order);

}  // namespace burn

#endif  // BURN_CORE_MODEL_HPP
