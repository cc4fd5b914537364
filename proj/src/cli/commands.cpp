#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "burn/bounds.hpp"
#include "burn/burning.hpp"
#include "burn/cli.hpp"
#include "burn/errors.hpp"
#include "burn/exact.hpp"
#include "burn/greedy.hpp"
#include "burn/partitions.hpp"
#include "burn/spider_burner.hpp"

namespace burn::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for malformed input that is not a library precondition failure.
class UsageError : public BurnError {
 public:
  using BurnError::BurnError;
};

struct InstanceArgs {
  std::string pf;
  std::string spider;
  std::int64_t path = 0;
  std::string graph;

  void attach(CLI::App* cmd, bool allow_graph) {
    auto* g = cmd->add_option_group("instance", "exactly one instance");
    g->add_option("--pf", pf, "path-forest component orders, e.g. 13,11,11");
    g->add_option("--spider", spider, "spider arm lengths (>= 3 arms), e.g. 8,8,8");
    g->add_option("--path", path, "single path of the given order");
    if (allow_graph) g->add_option("--graph", graph, "edge-list file, one 'u v' pair per line");
    g->require_option(1);
  }

  Instance build() const {
    if (!pf.empty()) return Instance::path_forest(pf);
    if (!spider.empty()) return Instance::spider(spider);
    if (path != 0) return Instance::path(path);
    if (!graph.empty()) return Instance::graph_from_file(graph);
    throw UsageError("no instance given");
  }
};

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Json instance_json(const Instance& inst) {
  Json j;
  switch (inst.kind()) {
    case Instance::Kind::PathForest:
      j["type"] = "path_forest";
      j["orders"] = inst.forest()->orders();
      break;
    case Instance::Kind::Path:
      j["type"] = "path";
      j["order"] = inst.forest()->order();
      break;
    case Instance::Kind::Spider:
      j["type"] = "spider";
      j["arms"] = inst.spider_shape()->arms();
      break;
    case Instance::Kind::Graph:
      j["type"] = "graph";
      break;
  }
  j["n"] = inst.graph().order();
  return j;
}

Json schedule_json(const Instance& inst, const BurnSchedule& s) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < s.length(); ++i) {
    steps.push_back(Json::array({i + 1, inst.format_vertex(s.sources()[i])}));
  }
  return steps;
}

Json cover_json(const Instance& inst, const BudgetedCover& c) {
  Json balls = Json::array();
  for (const auto& b : c.by_radius()) {
    balls.push_back(Json::array({inst.format_vertex(b.center), b.radius}));
  }
  return balls;
}

int cmd_burn(const InstanceArgs& args, const std::string& algo, std::ostream& out) {
  const Instance inst = args.build();
  std::optional<BudgetedCover> cover;
  std::optional<BurnSchedule> schedule;

  if (algo == "greedy") {
    if (!inst.forest()) throw UsageError("greedy needs a path-forest instance (--pf or --path)");
    GreedyResult r = greedy_burn(*inst.forest());
    cover.emplace(std::move(r.cover));
    schedule.emplace(std::move(r.schedule));
  } else if (algo == "spider") {
    if (!inst.spider_shape()) throw UsageError("spider needs a spider instance (--spider)");
    SpiderBurnResult r = burn_spider(*inst.spider_shape());
    cover.emplace(std::move(r.cover));
    schedule.emplace(std::move(r.schedule));
  } else if (algo == "path") {
    if (!inst.forest() || inst.forest()->components() != 1) {
      throw UsageError("path needs a single path (--path or a one-component --pf)");
    }
    cover.emplace(burn_path(inst.forest()->order()));
    schedule.emplace(schedule_from_cover(inst.graph(), *cover));
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }

  const bool verified = verify_schedule(inst.graph(), *schedule);
  Json doc;
  doc["instance"] = instance_json(inst);
  doc["algorithm"] = algo;
  doc["budget"] = cover->budget();
  doc["schedule"] = schedule_json(inst, *schedule);
  doc["cover"] = cover_json(inst, *cover);
  doc["claimed_time"] = schedule->claimed_time();
  doc["completion_time"] = schedule->claimed_time();
  doc["verified"] = verified;
  out << doc.dump(2) << '\n';
  return verified ? kOk : kVerificationFailed;
}

int cmd_exact(const InstanceArgs& args, std::ostream& out) {
  const Instance inst = args.build();
  // Path-forests go through the interval oracle, which scales past the
  // vertex guard of the general cover search.
  const ExactResult r = inst.forest() ? exact_pf_witness(*inst.forest())
                                      : exact_burning_number(inst.graph());
  const BurnSchedule schedule = schedule_from_cover(inst.graph(), r.witness);
  const bool verified = verify_schedule(inst.graph(), schedule) && schedule.claimed_time() <= r.value;
  Json doc;
  doc["instance"] = instance_json(inst);
  doc["value"] = r.value;
  doc["witness"] = cover_json(inst, r.witness);
  doc["schedule"] = schedule_json(inst, schedule);
  doc["completion_time"] = schedule.claimed_time();
  doc["verified"] = verified;
  out << doc.dump(2) << '\n';
  return verified ? kOk : kVerificationFailed;
}

void write_bound_row(std::ostream& out, const BoundRow& row) {
  out << row.t << ',' << row.lower << ',' << row.ub_floor << ',';
  if (row.ub_sqrt) out << *row.ub_sqrt;
  out << ',' << fixed4(row.ratio.value()) << '\n';
}

int cmd_bounds(std::int64_t n, std::optional<std::int64_t> t, std::ostream& out) {
  if (n < 1) throw UsageError("--n must be >= 1");
  out << "t,lower,ub_floor,ub_sqrt,ratio\n";
  if (t) {
    if (*t < 1 || *t > n) throw UsageError("--t must be in 1..n");
    write_bound_row(out, bound_row(n, *t));
  } else {
    for (const auto& row : bound_table(n)) write_bound_row(out, row);
  }
  return kOk;
}

// Schedule document: {"schedule": [[1, "0:1"], [2, "0:3"]], "claimed_time": 2}.
// "completion_time" is accepted in place of "claimed_time", so documents
// written by `burn` and `exact` verify as they are.
BurnSchedule read_schedule(const Instance& inst, std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed schedule JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schedule") || !doc["schedule"].is_array()) {
    throw UsageError("schedule document needs a \"schedule\" array");
  }
  const Json& steps = doc["schedule"];
  if (steps.empty()) throw UsageError("schedule is empty");
  std::vector<VertexId> sources;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Json& step = steps[i];
    if (!step.is_array() || step.size() != 2 || !step[0].is_number_integer() || !step[1].is_string()) {
      throw UsageError("schedule entries must be [step, \"vertex\"] pairs");
    }
    if (step[0].get<std::int64_t>() != static_cast<std::int64_t>(i + 1)) {
      throw UsageError("schedule steps must be numbered 1, 2, ... in order");
    }
    sources.push_back(inst.parse_vertex(step[1].get<std::string>()));
  }
  const char* key = doc.contains("claimed_time") ? "claimed_time" : "completion_time";
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw UsageError("schedule document needs an integer \"claimed_time\"");
  }
  return BurnSchedule(std::move(sources), doc[key].get<std::int64_t>());
}

int cmd_verify(const InstanceArgs& args, const std::string& schedule_file, std::ostream& out) {
  const Instance inst = args.build();
  std::ifstream in(schedule_file);
  if (!in) throw UsageError("cannot open schedule file '" + schedule_file + "'");
  const BurnSchedule schedule = read_schedule(inst, in);
  const BurnResult r = simulate(inst.graph(), schedule.sources());
  const LabeledGraph& g = inst.graph();

  Json doc;
  doc["instance"] = instance_json(inst);
  doc["claimed_time"] = schedule.claimed_time();
  const bool ok = r.complete() && r.completion_time <= schedule.claimed_time();
  doc["verified"] = ok;
  if (ok) {
    doc["completion_time"] = r.completion_time;
    Json times = Json::object();
    for (std::size_t i = 0; i < g.order(); ++i) times[inst.format_vertex(g.vertex(i))] = r.burn_time[i];
    doc["burn_times"] = times;
  } else {
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (r.burn_time[i] > schedule.claimed_time()) {
        doc["first_unburned"] = inst.format_vertex(g.vertex(i));
        if (r.burn_time[i] != kNever) doc["burns_at"] = r.burn_time[i];
        break;
      }
    }
  }
  out << doc.dump(2) << '\n';
  return ok ? kOk : kVerificationFailed;
}

struct BenchOptions {
  std::int64_t max_n = 0;
  std::vector<std::int64_t> random;  // {count, seed}
  std::int64_t random_max_n = 40;
  std::int64_t exact_max_n = 40;
  bool timing = false;
};

struct BenchRow {
  PathForest pf;
  std::int64_t lower = 0;
  std::optional<std::int64_t> exact;
  std::int64_t greedy_t = 0;
  Ratio ratio;
  std::int64_t micros = 0;
};

std::string quoted_orders(const PathForest& pf) {
  std::string s = "\"";
  for (std::size_t i = 0; i < pf.orders().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pf.orders()[i]);
  }
  return s + "\"";
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<PathForest> instances;
  if (opt.max_n > 0) {
    instances = all_path_forests(opt.max_n);
  } else if (opt.random.size() == 2) {
    if (opt.random[0] < 0) throw UsageError("--random count must be >= 0");
    InstanceGenerator gen(static_cast<std::uint64_t>(opt.random[1]));
    for (std::int64_t i = 0; i < opt.random[0]; ++i) instances.push_back(gen.path_forest(opt.random_max_n));
  } else {
    throw UsageError("bench needs --max-n N or --random COUNT SEED");
  }

  std::vector<BenchRow> rows;
  rows.reserve(instances.size());
  for (const auto& pf : instances) {
    BenchRow row{pf, 0, std::nullopt, 0, Ratio{}, 0};
    row.lower = lower_bound(pf);
    const auto start = std::chrono::steady_clock::now();
    row.greedy_t = greedy_burn(pf).burn_time();
    const auto stop = std::chrono::steady_clock::now();
    row.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    if (pf.order() <= opt.exact_max_n) row.exact = exact_pf(pf);
    row.ratio = {row.greedy_t, row.exact ? *row.exact : row.lower};
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.pf.order() != b.pf.order()) return a.pf.order() < b.pf.order();
    return a.pf.orders() > b.pf.orders();
  });

  out << "instance,n,t,lower,exact,greedy_T,ratio,micros\n";
  Ratio worst{0, 1};
  std::size_t violations = 0;
  for (const auto& row : rows) {
    out << quoted_orders(row.pf) << ',' << row.pf.order() << ',' << row.pf.components() << ','
        << row.lower << ',';
    if (row.exact) out << *row.exact;
    out << ',' << row.greedy_t << ',' << fixed4(row.ratio.value()) << ',';
    if (opt.timing) out << row.micros;
    out << '\n';
    if (row.exact) {
      worst = std::max(worst, row.ratio);
      if (2 * row.greedy_t > 3 * *row.exact) ++violations;
    }
  }
  err << "instances=" << rows.size() << " max_ratio_vs_exact=" << fixed4(worst.value())
      << " violations=" << violations << '\n';
  return violations == 0 ? kOk : kVerificationFailed;
}

struct GenOptions {
  std::string kind = "pf";
  std::int64_t count = 10;
  std::uint64_t seed = 1;
  std::int64_t min_n = 4;
  std::int64_t max_n = 40;
  std::int64_t max_arms = 8;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  InstanceGenerator gen(opt.seed);
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  for (std::int64_t i = 0; i < opt.count; ++i) {
    if (opt.kind == "pf") {
      out << "--pf " << join(gen.path_forest(opt.max_n).orders()) << '\n';
    } else if (opt.kind == "spider") {
      out << "--spider " << join(gen.spider(std::max<std::int64_t>(opt.min_n, 4), opt.max_n, opt.max_arms).arms())
          << '\n';
    } else {
      throw UsageError("--kind must be pf or spider");
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph burning: schedules, bounds and exact values for path-forests and spiders",
               args.empty() ? "burnctl" : args.front()};
  app.require_subcommand(1);

  InstanceArgs burn_args;
  std::string algo = "greedy";
  auto* burn_cmd = app.add_subcommand("burn", "build and verify a burning schedule");
  burn_args.attach(burn_cmd, false);
  burn_cmd->add_option("--algo", algo, "greedy | spider | path")
      ->check(CLI::IsMember({"greedy", "spider", "path"}));

  InstanceArgs exact_args;
  auto* exact_cmd = app.add_subcommand("exact", "exact burning number with a witness cover");
  exact_args.attach(exact_cmd, true);

  std::int64_t bounds_n = 0;
  std::optional<std::int64_t> bounds_t;
  auto* bounds_cmd = app.add_subcommand("bounds", "bound table for path-forests of order n (CSV)");
  bounds_cmd->add_option("--n", bounds_n, "order")->required();
  bounds_cmd->add_option("--t", bounds_t, "single component count");

  InstanceArgs verify_args;
  std::string schedule_file;
  auto* verify_cmd = app.add_subcommand("verify", "check a schedule document against an instance");
  verify_args.attach(verify_cmd, true);
  verify_cmd->add_option("--schedule", schedule_file, "schedule JSON file")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "GREEDY against the exact oracle (CSV)");
  auto* bench_mode = bench_cmd->add_option_group("mode");
  bench_mode->add_option("--max-n", bench.max_n, "every path-forest of order 1..N");
  bench_mode->add_option("--random", bench.random, "COUNT SEED random path-forests")->expected(2);
  bench_mode->require_option(1);
  bench_cmd->add_option("--random-max-n", bench.random_max_n, "largest order of random instances");
  bench_cmd->add_option("--exact-max-n", bench.exact_max_n, "largest order solved exactly");
  bench_cmd->add_flag("--timing", bench.timing, "fill the micros column");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "seeded random instances, one per line");
  gen_cmd->add_option("--kind", gen.kind, "pf | spider");
  gen_cmd->add_option("--count", gen.count);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--min-n", gen.min_n);
  gen_cmd->add_option("--max-n", gen.max_n);
  gen_cmd->add_option("--max-arms", gen.max_arms);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*burn_cmd) return cmd_burn(burn_args, algo, out);
    if (*exact_cmd) return cmd_exact(exact_args, out);
    if (*bounds_cmd) return cmd_bounds(bounds_n, bounds_t, out);
    if (*verify_cmd) return cmd_verify(verify_args, schedule_file, out);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*gen_cmd) return cmd_gen(gen, out);
  } catch (const SizeGuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const InternalContradiction& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const BurnError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace burn::cli
