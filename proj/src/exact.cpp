#include "burn/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "burn/errors.hpp"

namespace burn {

namespace {

using Mask = std::uint64_t;

struct StateKey {
  Mask a;
  Mask b;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = k.a * 0x9E3779B97F4A7C15ULL;
    h ^= (k.b + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using FailedStates = std::unordered_set<StateKey, StateKeyHash>;

int popcount(Mask m) { return std::popcount(m); }

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Balls N_r[x] of every vertex for r = 0..k-1, as bit masks.
class CoverSearch {
 public:
  CoverSearch(const LabeledGraph& g, std::int64_t k) : n_(g.order()), k_(static_cast<int>(k)) {
    all_ = full_mask(n_);
    ball_.assign(n_, std::vector<Mask>(static_cast<std::size_t>(k_), 0));
    for (std::size_t x = 0; x < n_; ++x) {
      const auto dist = g.distances_from(x);
      for (std::size_t y = 0; y < n_; ++y) {
        if (dist[y] < 0) continue;
        for (auto r = dist[y]; r < k_; ++r) ball_[x][static_cast<std::size_t>(r)] |= Mask{1} << y;
      }
    }
  }

  bool run(std::vector<CoverBall>* witness, const LabeledGraph& g) {
    if (!search(0, full_mask(static_cast<std::size_t>(k_)))) return false;
    if (witness) {
      witness->clear();
      for (const auto& [x, r] : chosen_) witness->push_back({g.vertex(x), r});
    }
    return true;
  }

 private:
  bool search(Mask covered, Mask unused) {
    if (covered == all_) return true;
    if (unused == 0) return false;
    const Mask open = all_ & ~covered;

    // Bound: each remaining radius covers at most its best fresh gain.
    int capacity = 0;
    for (int r = 0; r < k_; ++r) {
      if (!(unused >> r & 1)) continue;
      int best = 0;
      for (std::size_t x = 0; x < n_; ++x) best = std::max(best, popcount(ball_[x][r] & open));
      capacity += best;
    }
    if (capacity < popcount(open)) return false;

    const StateKey key{covered, unused};
    if (failed_.contains(key)) return false;

    // Branch on the open vertex with the fewest (radius, center) options.
    std::size_t pivot = n_;
    int fewest = 0;
    for (Mask m = open; m != 0; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      int options = 0;
      for (int r = 0; r < k_; ++r) {
        if (unused >> r & 1) options += popcount(ball_[u][static_cast<std::size_t>(r)]);
      }
      if (pivot == n_ || options < fewest) {
        pivot = u;
        fewest = options;
      }
    }

    for (int r = k_ - 1; r >= 0; --r) {
      if (!(unused >> r & 1)) continue;
      const auto ru = static_cast<std::size_t>(r);
      struct Option {
        std::size_t center;
        Mask gain;
      };
      std::vector<Option> options;
      for (Mask m = ball_[pivot][ru]; m != 0; m &= m - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(m));
        options.push_back({x, ball_[x][ru] & open});
      }
      // Drop centers whose fresh gain is contained in another's.
      std::vector<Option> kept;
      for (std::size_t i = 0; i < options.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < options.size() && !dominated; ++j) {
          if (i == j) continue;
          const Mask gi = options[i].gain;
          const Mask gj = options[j].gain;
          if ((gi & ~gj) == 0 && (gi != gj || j < i)) dominated = true;
        }
        if (!dominated) kept.push_back(options[i]);
      }
      std::stable_sort(kept.begin(), kept.end(), [](const Option& a, const Option& b) {
        return popcount(a.gain) > popcount(b.gain);
      });
      for (const auto& opt : kept) {
        chosen_.emplace_back(opt.center, r);
        if (search(covered | opt.gain, unused & ~(Mask{1} << r))) return true;
        chosen_.pop_back();
      }
    }
    failed_.insert(key);
    return false;
  }

  std::size_t n_;
  int k_;
  Mask all_ = 0;
  std::vector<std::vector<Mask>> ball_;
  FailedStates failed_;
  std::vector<std::pair<std::size_t, std::int64_t>> chosen_;
};

class IntervalSearch {
 public:
  IntervalSearch(const PathForest& pf, std::int64_t k) : orders_(pf.orders()), k_(k) {
    suffix_.assign(orders_.size() + 1, 0);
    for (std::size_t c = orders_.size(); c-- > 0;) suffix_[c] = suffix_[c + 1] + orders_[c];
    picks_.resize(orders_.size());
  }

  bool run(std::vector<std::vector<std::int64_t>>* assignment) {
    const Mask all = full_mask(static_cast<std::size_t>(k_));
    if (!search(0, all)) return false;
    if (assignment) {
      assignment->assign(orders_.size(), {});
      for (std::size_t c = 0; c < orders_.size(); ++c) {
        for (Mask m = picks_[c]; m != 0; m &= m - 1) {
          (*assignment)[c].push_back(2 * std::countr_zero(m) + 1);
        }
        std::sort((*assignment)[c].begin(), (*assignment)[c].end(), std::greater<>());
      }
    }
    return true;
  }

 private:
  static std::int64_t length(int bit) { return 2 * bit + 1; }

  static std::int64_t total(Mask m) {
    std::int64_t s = 0;
    for (; m != 0; m &= m - 1) s += length(std::countr_zero(m));
    return s;
  }

  bool search(std::size_t c, Mask free) {
    if (c == orders_.size()) return true;
    if (static_cast<std::size_t>(popcount(free)) < orders_.size() - c) return false;
    if (total(free) < suffix_[c]) return false;
    const StateKey key{c, free};
    if (failed_.contains(key)) return false;
    if (pick(c, free, free, 0, 0)) return true;
    failed_.insert(key);
    return false;
  }

  // Chooses lengths for component c, largest first; every emitted subset is
  // minimal because the last length added is its smallest element.
  bool pick(std::size_t c, Mask free, Mask candidates, Mask taken, std::int64_t sum) {
    if (sum >= orders_[c]) {
      picks_[c] = taken;
      return search(c + 1, free & ~taken);
    }
    for (Mask m = candidates; m != 0;) {
      const int bit = 63 - std::countl_zero(m);
      const Mask b = Mask{1} << bit;
      m &= ~b;
      // Even all remaining smaller lengths cannot close the gap: stop.
      if (sum + length(bit) + total(m) < orders_[c]) break;
      if (pick(c, free, m, taken | b, sum + length(bit))) return true;
    }
    return false;
  }

  const std::vector<std::int64_t>& orders_;
  std::int64_t k_;
  std::vector<std::int64_t> suffix_;
  std::vector<Mask> picks_;
  FailedStates failed_;
};

class NaiveSearch {
 public:
  NaiveSearch(const LabeledGraph& g, std::int64_t k) : n_(g.order()), k_(k) {
    all_ = full_mask(n_);
    adj_.assign(n_, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      for (const auto w : g.neighbors(u)) adj_[u] |= Mask{1} << w;
    }
  }

  bool run() { return step(0, 0); }

 private:
  // `burned` is the burned set at the end of round `round`.
  bool step(std::int64_t round, Mask burned) {
    if (burned == all_) return true;
    if (round == k_) return false;
    const StateKey key{static_cast<Mask>(round), burned};
    if (failed_.contains(key)) return false;
    Mask spread = burned;
    for (Mask m = burned; m != 0; m &= m - 1) spread |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
    if (spread == all_) return true;
    for (Mask m = all_ & ~spread; m != 0; m &= m - 1) {
      const Mask source = m & (~m + 1);
      if (step(round + 1, spread | source)) return true;
    }
    failed_.insert(key);
    return false;
  }

  std::size_t n_;
  std::int64_t k_;
  Mask all_ = 0;
  std::vector<Mask> adj_;
  FailedStates failed_;
};

}  // namespace

bool cover_feasible(const LabeledGraph& g, std::int64_t k, std::vector<CoverBall>* witness) {
  if (g.order() > kExactMaxVertices) {
    throw SizeGuardExceeded("exact cover search is limited to " + std::to_string(kExactMaxVertices) +
                            " vertices (got " + std::to_string(g.order()) + ")");
  }
  if (k < 1) return g.empty();
  // Radii beyond the order never help: k = n already covers with singletons.
  k = std::min<std::int64_t>(k, static_cast<std::int64_t>(g.order()));
  CoverSearch search(g, k);
  return search.run(witness, g);
}

ExactResult exact_burning_number(const LabeledGraph& g) {
  if (g.empty()) throw InvalidArgument("exact burning number of an empty graph");
  if (g.order() > kExactMaxVertices) {
    throw SizeGuardExceeded("exact cover search is limited to " + std::to_string(kExactMaxVertices) +
                            " vertices (got " + std::to_string(g.order()) + ")");
  }
  for (std::int64_t k = 1;; ++k) {
    std::vector<CoverBall> balls;
    if (cover_feasible(g, k, &balls)) return {k, BudgetedCover(std::move(balls), k)};
  }
}

bool interval_assignment_feasible(const PathForest& pf, std::int64_t k,
                                  std::vector<std::vector<std::int64_t>>* assignment) {
  if (k < 1) return false;
  if (k > kExactPfMaxRounds) {
    throw SizeGuardExceeded("interval search is limited to " + std::to_string(kExactPfMaxRounds) +
                            " rounds");
  }
  IntervalSearch search(pf, k);
  return search.run(assignment);
}

std::int64_t exact_pf(const PathForest& pf) {
  for (std::int64_t k = 1;; ++k) {
    if (interval_assignment_feasible(pf, k)) return k;
  }
}

ExactResult exact_pf_witness(const PathForest& pf) {
  for (std::int64_t k = 1;; ++k) {
    std::vector<std::vector<std::int64_t>> assignment;
    if (!interval_assignment_feasible(pf, k, &assignment)) continue;
    std::vector<CoverBall> balls;
    for (std::size_t c = 0; c < assignment.size(); ++c) {
      const std::int64_t order = pf.orders()[c];
      std::int64_t next = 0;
      for (const std::int64_t len : assignment[c]) {
        const std::int64_t r = (len - 1) / 2;
        const std::int64_t center = std::min(next + r, order - 1);
        balls.push_back({VertexId::component(static_cast<std::int32_t>(c),
                                             static_cast<std::int32_t>(center)),
                         r});
        next += len;
      }
    }
    return {k, BudgetedCover(std::move(balls), k)};
  }
}

bool naive_schedule_search(const LabeledGraph& g, std::int64_t k) {
  if (g.order() > kNaiveMaxVertices) {
    throw SizeGuardExceeded("naive schedule search is limited to " +
                            std::to_string(kNaiveMaxVertices) + " vertices (got " +
                            std::to_string(g.order()) + ")");
  }
  if (k < 1) return g.empty();
  NaiveSearch search(g, k);
  return search.run();
}

std::int64_t naive_burning_number(const LabeledGraph& g) {
  if (g.empty()) throw InvalidArgument("naive burning number of an empty graph");
  for (std::int64_t k = 1;; ++k) {
    if (naive_schedule_search(g, k)) return k;
  }
}

}  // namespace burn
