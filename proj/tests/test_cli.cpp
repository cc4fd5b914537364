#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "burn/cli.hpp"

using burn::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "burnctl");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("burnctl_test_" + name);
  std::ofstream(path) << text;
  return path;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("burn with greedy") {
  const auto r = call({"burn", "--pf", "13,11,11"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["algorithm"] == "greedy");
  CHECK(doc["budget"] == 7);
  CHECK(doc["claimed_time"] == 7);
  CHECK(doc["verified"] == true);
  CHECK(doc["schedule"].size() == 7);
  std::vector<int> radii;
  for (const auto& ball : doc["cover"]) radii.push_back(ball[1].get<int>());
  CHECK(radii == std::vector<int>{5, 4, 4, 3, 2, 1});
}

TEST_CASE("burn with the spider and path constructions") {
  const auto sp = call({"burn", "--algo", "spider", "--spider", "8,8,8"});
  REQUIRE(sp.code == 0);
  CHECK(Json::parse(sp.out)["claimed_time"] == 5);
  const auto p = call({"burn", "--algo", "path", "--path", "16"});
  REQUIRE(p.code == 0);
  CHECK(Json::parse(p.out)["claimed_time"] == 4);
  CHECK(call({"burn", "--algo", "spider", "--pf", "3,3"}).code == 2);
  CHECK(call({"burn", "--algo", "greedy", "--spider", "3,3,3"}).code == 2);
}

TEST_CASE("exact") {
  const auto r = call({"exact", "--pf", "13,11,11"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["value"] == 6);
  CHECK(doc["verified"] == true);

  const auto graph = write_temp("graph.txt", "# a triangle with a tail\na b\nb c\nc a\nc d\nlonely\n");
  const auto g = call({"exact", "--graph", graph.string()});
  REQUIRE(g.code == 0);
  CHECK(Json::parse(g.out)["value"] == 2);
  CHECK(Json::parse(g.out)["instance"]["n"] == 5);

  std::string big;
  for (int i = 0; i < 45; ++i) big += "v" + std::to_string(i) + "\n";
  CHECK(call({"exact", "--graph", write_temp("big.txt", big).string()}).code == 3);
  CHECK(call({"exact", "--graph", write_temp("bad.txt", "a b c\n").string()}).code == 2);
  CHECK(call({"exact", "--graph", "/nonexistent/graph.txt"}).code == 2);
}

TEST_CASE("bounds CSV") {
  const auto r = call({"bounds", "--n", "35", "--t", "3"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"t,lower,ub_floor,ub_sqrt,ratio", "3,6,8,7,1.1667"});
  const auto one = call({"bounds", "--n", "1"});
  CHECK(lines(one.out) == std::vector<std::string>{"t,lower,ub_floor,ub_sqrt,ratio", "1,1,1,1,1.0000"});
  const auto table = call({"bounds", "--n", "10"});
  const auto rows = lines(table.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[10] == "10,10,10,,1.0000");
  CHECK(call({"bounds", "--n", "10", "--t", "11"}).code == 2);
  CHECK(call({"bounds"}).code == 2);
}

TEST_CASE("verify accepts what burn produces") {
  const auto burned = call({"burn", "--pf", "13,11,11"});
  const auto file = write_temp("schedule.json", burned.out);
  const auto r = call({"verify", "--pf", "13,11,11", "--schedule", file.string()});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["verified"] == true);

  const auto p4 = write_temp("p4.json", R"({"schedule": [[1, "0:1"], [2, "0:3"]], "claimed_time": 2})");
  const auto ok = call({"verify", "--path", "4", "--schedule", p4.string()});
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["burn_times"]["0:0"] == 2);

  const auto short_one = write_temp("p4_bad.json", R"({"schedule": [[1, "0:0"]], "claimed_time": 2})");
  const auto bad = call({"verify", "--path", "4", "--schedule", short_one.string()});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out)["first_unburned"] == "0:2");

  const auto spider = call({"burn", "--algo", "spider", "--spider", "6,6,6,6"});
  const auto sfile = write_temp("spider.json", spider.out);
  CHECK(call({"verify", "--spider", "6,6,6,6", "--schedule", sfile.string()}).code == 0);
}

TEST_CASE("verify rejects malformed documents") {
  auto code_for = [](const std::string& text) {
    const auto f = write_temp("malformed.json", text);
    return call({"verify", "--path", "4", "--schedule", f.string()}).code;
  };
  CHECK(code_for("not json") == 2);
  CHECK(code_for(R"({"schedule": [], "claimed_time": 2})") == 2);
  CHECK(code_for(R"({"schedule": [[2, "0:1"]], "claimed_time": 2})") == 2);
  CHECK(code_for(R"({"schedule": [[1, "9:9"]], "claimed_time": 2})") == 2);
  CHECK(code_for(R"({"schedule": [[1, "0:1"], [2, "0:1"]], "claimed_time": 2})") == 2);
  CHECK(code_for(R"({"schedule": [[1, "0:1"]]})") == 2);
  CHECK(call({"verify", "--path", "4", "--schedule", "/nonexistent.json"}).code == 2);
}

TEST_CASE("bench is deterministic") {
  const auto a = call({"bench", "--max-n", "8"});
  const auto b = call({"bench", "--max-n", "8"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto rows = lines(a.out);
  CHECK(rows[0] == "instance,n,t,lower,exact,greedy_T,ratio,micros");
  CHECK(rows.size() == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22);
  CHECK(rows[1] == "\"1\",1,1,1,1,1,1.0000,");

  const auto r1 = call({"bench", "--random", "50", "9"});
  const auto r2 = call({"bench", "--random", "50", "9"});
  CHECK(r1.out == r2.out);
  CHECK(lines(r1.out).size() == 51);
  CHECK(call({"bench"}).code == 2);
}

TEST_CASE("gen is seeded") {
  const auto a = call({"gen", "--kind", "spider", "--count", "5", "--seed", "3"});
  const auto b = call({"gen", "--kind", "spider", "--count", "5", "--seed", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(lines(a.out).size() == 5);
  CHECK(call({"gen", "--kind", "tree"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"burn"}).code == 2);
  CHECK(call({"burn", "--pf", "1,x"}).code == 2);
  CHECK(call({"burn", "--pf", "3", "--path", "3"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

}
