#include "burn/bounds.hpp"

#include <algorithm>

#include "burn/errors.hpp"
#include "burn/int_math.hpp"

namespace burn {

namespace {

void check_shape(std::int64_t n, std::int64_t t) {
  if (n < 1 || t < 1 || t > n) throw InvalidArgument("need n >= 1 and 1 <= t <= n");
}

std::int64_t ceil_root(std::int64_t n) {
  return static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(n)));
}

}  // namespace

std::int64_t lower_bound(std::int64_t n, std::int64_t t) {
  check_shape(n, t);
  return std::max(ceil_root(n), t);
}

std::int64_t ub_floor(std::int64_t n, std::int64_t t) {
  check_shape(n, t);
  return n / (2 * t) + t;
}

std::optional<std::int64_t> ub_sqrt(std::int64_t n, std::int64_t t) {
  check_shape(n, t);
  if (t > ceil_root(n)) return std::nullopt;
  return static_cast<std::int64_t>(
      ceil_sqrt_plus_half(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t - 1)));
}

std::int64_t best_upper_bound(std::int64_t n, std::int64_t t) {
  const std::int64_t f = ub_floor(n, t);
  const auto s = ub_sqrt(n, t);
  return s ? std::min(f, *s) : f;
}

PathForest balanced_path_forest(std::int64_t n, std::int64_t t) {
  check_shape(n, t);
  const std::int64_t q = n / t;
  const std::int64_t extra = n % t;
  std::vector<std::int64_t> orders(static_cast<std::size_t>(t), q);
  for (std::int64_t i = 0; i < extra; ++i) ++orders[static_cast<std::size_t>(i)];
  return PathForest(std::move(orders));
}

BoundRow bound_row(std::int64_t n, std::int64_t t) {
  BoundRow row;
  row.t = t;
  row.lower = lower_bound(n, t);
  row.ub_floor = ub_floor(n, t);
  row.ub_sqrt = ub_sqrt(n, t);
  row.ratio = {best_upper_bound(n, t), row.lower};
  return row;
}

std::vector<BoundRow> bound_table(std::int64_t n) {
  if (n < 1) throw InvalidArgument("bound table needs n >= 1");
  std::vector<BoundRow> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (std::int64_t t = 1; t <= n; ++t) {
    // The bounds depend on (n, t) only; the balanced forest is the witness
    // instance each row describes.
    const PathForest pf = balanced_path_forest(n, t);
    rows.push_back(bound_row(pf.order(), pf.components()));
  }
  return rows;
}

}  // namespace burn
