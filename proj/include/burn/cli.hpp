#ifndef BURN_CLI_HPP
#define BURN_CLI_HPP

// Command-line front end: instance parsing, vertex text format, and the
// burn / exact / bounds / verify / bench / gen subcommands.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burn/core_model.hpp"

namespace burn::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kSizeGuard = 3,
};

// A parsed instance plus the text labels of its vertices.
//   path-forest / path vertex: "c:p"   spider head: "head"   arm vertex: "a:i:j"
//   free-form graph vertex: its name from the edge-list file.
class Instance {
 public:
  enum class Kind { PathForest, Path, Spider, Graph };

  static Instance path_forest(const std::string& orders);  // "13,11,11"
  static Instance path(std::int64_t order);
  static Instance spider(const std::string& arms);          // "8,8,8"
  // Edge list: one "u v" pair per line; a line with a single name adds an
  // isolated vertex; blank lines and lines starting with '#' are skipped.
  static Instance graph_from_stream(std::istream& in);
  static Instance graph_from_file(const std::string& path);

  Kind kind() const { return kind_; }
  const LabeledGraph& graph() const { return graph_; }
  const std::optional<PathForest>& forest() const { return forest_; }
  const std::optional<Spider>& spider_shape() const { return spider_; }

  std::string format_vertex(const VertexId& v) const;
  VertexId parse_vertex(const std::string& text) const;  // throws InvalidArgument

  // Short canonical description, e.g. "pf:13,11,11" or "spider:8,8,8".
  std::string describe() const;

 private:
  Kind kind_ = Kind::Graph;
  LabeledGraph graph_;
  std::optional<PathForest> forest_;
  std::optional<Spider> spider_;
  std::vector<std::string> names_;
};

std::vector<std::int64_t> parse_int_list(const std::string& text);

// Runs the CLI with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burn::cli

#endif  // BURN_CLI_HPP
