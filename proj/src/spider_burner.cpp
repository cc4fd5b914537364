#include "burn/spider_burner.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "burn/burning.hpp"
#include "burn/errors.hpp"
#include "burn/exact.hpp"
#include "burn/greedy.hpp"
#include "burn/int_math.hpp"

namespace burn {

namespace {

constexpr std::int64_t kSmallSpiderOrder = 25;

std::int64_t alpha_of(std::int64_t n) {
  return static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(n)));
}

std::int32_t narrow(std::int64_t v) { return static_cast<std::int32_t>(v); }

// An arm of the original spider cut back to positions 1..length.
struct ArmRef {
  std::int32_t arm;
  std::int64_t length;
};

// What is left of the spider: the head plus a prefix of some arms. Every cut
// removes tips, so labels of surviving vertices never change.
struct SubSpider {
  std::vector<ArmRef> arms;  // length >= 1, sorted by (length desc, arm asc)

  std::int64_t order() const {
    std::int64_t n = 1;
    for (const auto& a : arms) n += a.length;
    return n;
  }

  void normalize() {
    std::erase_if(arms, [](const ArmRef& a) { return a.length <= 0; });
    std::sort(arms.begin(), arms.end(), [](const ArmRef& a, const ArmRef& b) {
      return a.length != b.length ? a.length > b.length : a.arm < b.arm;
    });
  }
};

// A path segment of one arm, positions lo..hi.
struct Segment {
  std::int32_t arm;
  std::int64_t lo;
  std::int64_t hi;

  std::int64_t order() const { return hi - lo + 1; }
};

// Exact coverage test of balls against a sub-spider, by interval arithmetic.
bool covers_sub(const SubSpider& s, const std::vector<CoverBall>& balls) {
  std::vector<std::pair<std::int32_t, std::size_t>> slot;
  slot.reserve(s.arms.size());
  for (std::size_t i = 0; i < s.arms.size(); ++i) slot.emplace_back(s.arms[i].arm, i);
  std::sort(slot.begin(), slot.end());
  auto local = [&](std::int32_t arm) -> std::optional<std::size_t> {
    const auto it = std::lower_bound(slot.begin(), slot.end(), std::make_pair(arm, std::size_t{0}));
    if (it == slot.end() || it->first != arm) return std::nullopt;
    return it->second;
  };

  bool head = false;
  std::int64_t reach_all = 0;  // positions 1..reach_all covered on every arm
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> spans(s.arms.size());
  for (const auto& b : balls) {
    std::int64_t p = 0;
    if (b.center.kind == VertexId::Kind::Arm) {
      const auto i = local(b.center.index);
      if (!i || b.center.position < 1 || b.center.position > s.arms[*i].length) return false;
      p = b.center.position;
      spans[*i].emplace_back(p - b.radius, p + b.radius);
    } else if (b.center.kind != VertexId::Kind::Head) {
      return false;
    }
    if (b.radius >= p) {
      head = true;
      reach_all = std::max(reach_all, b.radius - p);
    }
  }
  if (!head) return false;
  for (std::size_t i = 0; i < s.arms.size(); ++i) {
    auto& sp = spans[i];
    std::sort(sp.begin(), sp.end());
    std::int64_t covered = reach_all;
    for (const auto& [lo, hi] : sp) {
      if (lo > covered + 1) break;
      covered = std::max(covered, hi);
    }
    if (covered < s.arms[i].length) return false;
  }
  return true;
}

// Largest segment first with radii top, top-1, ...; each ball sits at the
// segment's center. Returns false when radii run out or a segment is too long.
bool cover_segments_descending(std::vector<Segment> segs, std::int64_t top,
                               std::vector<CoverBall>& out) {
  std::stable_sort(segs.begin(), segs.end(),
                   [](const Segment& a, const Segment& b) { return a.order() > b.order(); });
  std::int64_t r = top;
  for (const auto& seg : segs) {
    if (r < 0 || seg.order() > 2 * r + 1) return false;
    out.push_back({VertexId::arm(seg.arm, narrow(seg.lo + path_center(seg.order()))), r});
    --r;
  }
  return true;
}

class SpiderBurner {
 public:
  explicit SpiderBurner(SpiderBurnOptions options) : options_(options) {}

  std::vector<CoverBall> run(SubSpider s) {
    std::vector<CoverBall> balls;
    cover(std::move(s), balls);
    return balls;
  }

  std::vector<SpiderStep> take_trace() { return std::move(trace_); }

 private:
  // Appends balls covering `s` that fit budget ceil(sqrt(order(s))).
  void cover(SubSpider s, std::vector<CoverBall>& out) {
    const std::int64_t n = s.order();
    const std::int64_t alpha = alpha_of(n);

    if (s.arms.size() < 3) {
      trace_.push_back({SpiderBranch::PathRemainder, n, alpha, 0});
      cover_as_path(s, out);
      return;
    }
    if (options_.exact_small_cases && n <= kSmallSpiderOrder) {
      trace_.push_back({SpiderBranch::SmallExact, n, alpha, 0});
      cover_exact(s, alpha, out);
      return;
    }

    ArmRef& longest = s.arms.front();
    if (longest.length >= 2 * alpha - 1) {
      trace_.push_back({SpiderBranch::LongArm, n, alpha, 0});
      out.push_back({VertexId::arm(longest.arm, narrow(longest.length - (alpha - 1))), alpha - 1});
      longest.length -= 2 * alpha - 1;
      s.normalize();
      cover(std::move(s), out);
      return;
    }

    std::vector<CoverBall> local;
    SpiderStep step{SpiderBranch::HeadFewPaths, n, alpha, 0};
    const bool built = build_terminal(s, alpha, local, step);
    if (built && BudgetedCover::fits_budget(local, alpha) && covers_sub(s, local)) {
      trace_.push_back(step);
      out.insert(out.end(), local.begin(), local.end());
      return;
    }
    if (n <= kSmallSpiderOrder) {
      trace_.push_back({SpiderBranch::ExactFallback, n, alpha, step.leftover_paths});
      cover_exact(s, alpha, out);
      return;
    }
    throw InternalContradiction("spider branch " + std::string(to_string(step.branch)) +
                                " failed on a sub-spider of order " + std::to_string(n) +
                                " (alpha " + std::to_string(alpha) + ")");
  }

  // Terminal branches; all arms are shorter than 2*alpha - 1 here.
  bool build_terminal(const SubSpider& s, std::int64_t alpha, std::vector<CoverBall>& out,
                      SpiderStep& step) {
    const bool all_alpha_plus_one =
        std::all_of(s.arms.begin(), s.arms.end(),
                    [&](const ArmRef& a) { return a.length == alpha + 1; });
    if (static_cast<std::int64_t>(s.arms.size()) == alpha - 1 && all_alpha_plus_one) {
      step.branch = SpiderBranch::NeighborOfHead;
      return neighbor_of_head(s, alpha, out);
    }

    out.push_back({VertexId::head(), alpha - 1});
    std::vector<Segment> rest;
    for (const auto& a : s.arms) {
      if (a.length >= alpha) rest.push_back({a.arm, alpha, a.length});
    }
    std::stable_sort(rest.begin(), rest.end(),
                     [](const Segment& a, const Segment& b) { return a.order() > b.order(); });
    const auto t = static_cast<std::int64_t>(rest.size());
    step.leftover_paths = t;

    if (2 * t <= alpha) {
      step.branch = SpiderBranch::HeadFewPaths;
      return cover_segments_descending(rest, alpha - 2, out);
    }
    if (alpha % 2 == 1 && 2 * t == alpha + 1) {
      step.branch = SpiderBranch::HeadOddPaths;
      const Segment last = rest.back();
      rest.pop_back();
      if (!cover_segments_descending(rest, alpha - 2, out)) return false;
      const std::int64_t r = alpha - 1 - t;
      if (last.order() <= 2 * r + 1) {
        out.push_back({VertexId::arm(last.arm, narrow(last.lo + path_center(last.order()))), r});
      } else {
        // Covers lo..lo+2r = hi-1 for a segment of order alpha - 1; the leaf
        // gets its own radius-1 ball.
        out.push_back({VertexId::arm(last.arm, narrow(last.lo + r)), r});
        out.push_back({VertexId::arm(last.arm, narrow(last.hi)), 1});
      }
      return true;
    }
    if (t == alpha - 1) {
      step.branch = SpiderBranch::HeadPairedPaths;
      return cover_segments_descending(rest, alpha - 2, out);
    }
    if (t > alpha - 1) return false;

    step.branch = SpiderBranch::HeadGreedy;
    std::vector<std::int64_t> orders;
    for (const auto& seg : rest) orders.push_back(seg.order());
    // `rest` is already non-increasing, so component c of the forest is rest[c].
    const GreedyResult g = greedy_burn(PathForest(std::move(orders)));
    if (g.burn_time() > alpha - 1) return false;
    for (const auto& b : g.cover.balls()) {
      const Segment& seg = rest[static_cast<std::size_t>(b.center.index)];
      out.push_back({VertexId::arm(seg.arm, narrow(seg.lo + b.center.position)), b.radius});
    }
    return true;
  }

  bool neighbor_of_head(const SubSpider& s, std::int64_t alpha, std::vector<CoverBall>& out) {
    const ArmRef& lit = s.arms.front();
    out.push_back({VertexId::arm(lit.arm, 1), alpha - 1});
    // From position 1 of `lit`, radius alpha-1 reaches position alpha on that
    // arm and position alpha-2 on every other arm.
    std::vector<Segment> rest;
    for (const auto& a : s.arms) {
      const std::int64_t reached = a.arm == lit.arm ? alpha : alpha - 2;
      if (a.length > reached) rest.push_back({a.arm, reached + 1, a.length});
    }
    return cover_segments_descending(std::move(rest), alpha - 2, out);
  }

  // Fewer than three arms: the sub-spider is a path through the head.
  void cover_as_path(const SubSpider& s, std::vector<CoverBall>& out) {
    const std::int64_t n = s.order();
    const std::int64_t first = s.arms.empty() ? 0 : s.arms[0].length;
    auto label = [&](std::int64_t j) {
      if (j < first) return VertexId::arm(s.arms[0].arm, narrow(first - j));
      if (j == first) return VertexId::head();
      return VertexId::arm(s.arms[1].arm, narrow(j - first));
    };
    const BudgetedCover path = burn_path(n);
    std::vector<CoverBall> local;
    for (const auto& b : path.balls()) local.push_back({label(b.center.position), b.radius});
    if (!covers_sub(s, local)) {
      throw InternalContradiction("path cover did not map onto the sub-spider");
    }
    out.insert(out.end(), local.begin(), local.end());
  }

  void cover_exact(const SubSpider& s, std::int64_t alpha, std::vector<CoverBall>& out) {
    std::vector<std::int64_t> lengths;
    for (const auto& a : s.arms) lengths.push_back(a.length);
    // s.arms is sorted non-increasingly, so local arm a is s.arms[a].
    const Spider local(std::move(lengths));
    const ExactResult exact = exact_burning_number(spider_to_graph(local));
    if (exact.value > alpha) {
      throw InternalContradiction("spider of order " + std::to_string(local.order()) +
                                  " needs " + std::to_string(exact.value) + " > ceil(sqrt(n)) rounds");
    }
    for (const auto& b : exact.witness.balls()) {
      VertexId v = b.center;
      if (v.kind == VertexId::Kind::Arm) v.index = s.arms[static_cast<std::size_t>(v.index)].arm;
      out.push_back({v, b.radius});
    }
  }

  SpiderBurnOptions options_;
  std::vector<SpiderStep> trace_;
};

SubSpider root_of(const Spider& sp) {
  SubSpider s;
  for (std::size_t a = 0; a < sp.arms().size(); ++a) {
    s.arms.push_back({static_cast<std::int32_t>(a), sp.arms()[a]});
  }
  s.normalize();
  return s;
}

}  // namespace

const char* to_string(SpiderBranch b) {
  switch (b) {
    case SpiderBranch::SmallExact: return "small-exact";
    case SpiderBranch::LongArm: return "long-arm";
    case SpiderBranch::PathRemainder: return "path-remainder";
    case SpiderBranch::NeighborOfHead: return "neighbor-of-head";
    case SpiderBranch::HeadFewPaths: return "head-few-paths";
    case SpiderBranch::HeadOddPaths: return "head-odd-paths";
    case SpiderBranch::HeadPairedPaths: return "head-paired-paths";
    case SpiderBranch::HeadGreedy: return "head-greedy";
    case SpiderBranch::ExactFallback: return "exact-fallback";
  }
  return "unknown";
}

BudgetedCover burn_path(std::int64_t order) {
  if (order < 1) throw InvalidArgument("path order must be >= 1");
  const std::int64_t alpha = alpha_of(order);
  std::vector<CoverBall> balls;
  std::int64_t next = 0;  // first uncovered position
  for (std::int64_t r = alpha - 1; r >= 0 && next < order; --r) {
    const std::int64_t center = std::min(next + r, order - 1);
    balls.push_back({VertexId::component(0, narrow(center)), r});
    next += 2 * r + 1;
  }
  return BudgetedCover(std::move(balls), alpha);
}

LongArmReduction reduce_long_arm(const Spider& sp, std::int64_t alpha) {
  if (alpha != alpha_of(sp.order())) {
    throw InvalidArgument("alpha must equal ceil(sqrt(n)) = " + std::to_string(alpha_of(sp.order())));
  }
  const std::int64_t longest = sp.arms().front();
  if (longest < 2 * alpha - 1) {
    throw InvalidArgument("no arm of length >= 2*alpha - 1 = " + std::to_string(2 * alpha - 1));
  }
  LongArmReduction out{{VertexId::arm(0, narrow(longest - (alpha - 1))), alpha - 1}, PathForest({1})};
  std::vector<std::int64_t> arms = sp.arms();
  arms.front() -= 2 * alpha - 1;
  std::erase(arms, 0);
  if (arms.size() >= 3) {
    out.remainder = Spider(std::move(arms));
  } else {
    out.remainder = PathForest({1 + std::accumulate(arms.begin(), arms.end(), std::int64_t{0})});
  }
  return out;
}

BudgetedCover burn_small_spider(const Spider& sp) {
  if (sp.order() > kSmallSpiderOrder) {
    throw InvalidArgument("burn_small_spider expects order <= 25");
  }
  const std::int64_t alpha = alpha_of(sp.order());
  const ExactResult exact = exact_burning_number(spider_to_graph(sp));
  if (exact.value > alpha) {
    throw InternalContradiction("small spider needs more than ceil(sqrt(n)) rounds");
  }
  return BudgetedCover(exact.witness.balls(), alpha);
}

SpiderBurnResult burn_spider(const Spider& sp, SpiderBurnOptions options) {
  const std::int64_t alpha = alpha_of(sp.order());
  SpiderBurner burner(options);
  std::vector<CoverBall> balls = burner.run(root_of(sp));
  if (!BudgetedCover::fits_budget(balls, alpha)) {
    throw InternalContradiction("spider cover radii exceed budget " + std::to_string(alpha));
  }
  BudgetedCover cover(std::move(balls), alpha);
  const LabeledGraph g = spider_to_graph(sp);
  BurnSchedule schedule = schedule_from_cover(g, cover);
  if (!verify_schedule(g, schedule) || schedule.claimed_time() > alpha) {
    throw InternalContradiction("spider schedule failed verification");
  }
  return {std::move(cover), std::move(schedule), burner.take_trace()};
}

}  // namespace burn
