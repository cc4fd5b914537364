#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "burn/cli.hpp"
#include "burn/errors.hpp"

namespace burn::cli {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    values.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return values;
}

Instance Instance::path_forest(const std::string& orders) {
  Instance inst;
  inst.kind_ = Kind::PathForest;
  inst.forest_ = PathForest(parse_int_list(orders));
  inst.graph_ = path_forest_to_graph(*inst.forest_);
  return inst;
}

Instance Instance::path(std::int64_t order) {
  Instance inst;
  inst.kind_ = Kind::Path;
  inst.forest_ = PathForest({order});
  inst.graph_ = path_forest_to_graph(*inst.forest_);
  return inst;
}

Instance Instance::spider(const std::string& arms) {
  Instance inst;
  inst.kind_ = Kind::Spider;
  inst.spider_ = Spider(parse_int_list(arms));
  inst.graph_ = spider_to_graph(*inst.spider_);
  return inst;
}

Instance Instance::graph_from_stream(std::istream& in) {
  Instance inst;
  inst.kind_ = Kind::Graph;
  std::map<std::string, std::int32_t> ids;
  auto id_of = [&](const std::string& name) {
    const auto [it, fresh] = ids.emplace(name, static_cast<std::int32_t>(inst.names_.size()));
    if (fresh) inst.names_.push_back(name);
    return VertexId::node(it->second);
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string u;
    std::string v;
    std::string extra;
    if (!(fields >> u) || u.front() == '#') continue;
    if (!(fields >> v)) {
      id_of(u);
      continue;
    }
    if (fields >> extra) {
      throw InvalidArgument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u == v) throw InvalidArgument("edge list line " + std::to_string(line_no) + ": self-loop");
    const VertexId a = id_of(u);
    const VertexId b = id_of(v);
    edges.emplace_back(a, b);
  }
  if (inst.names_.empty()) throw InvalidArgument("edge list has no vertices");

  std::vector<VertexId> vertices;
  for (std::size_t k = 0; k < inst.names_.size(); ++k) {
    vertices.push_back(VertexId::node(static_cast<std::int32_t>(k)));
  }
  inst.graph_ = LabeledGraph::from_edges(std::move(vertices), edges);
  return inst;
}

Instance Instance::graph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
  return graph_from_stream(in);
}

std::string Instance::format_vertex(const VertexId& v) const {
  switch (v.kind) {
    case VertexId::Kind::Head:
      return "head";
    case VertexId::Kind::Component:
      return std::to_string(v.index) + ":" + std::to_string(v.position);
    case VertexId::Kind::Arm:
      return "a:" + std::to_string(v.index) + ":" + std::to_string(v.position);
    case VertexId::Kind::Node:
      return names_.at(static_cast<std::size_t>(v.index));
  }
  return "?";
}

VertexId Instance::parse_vertex(const std::string& text) const {
  VertexId v;
  if (kind_ == Kind::Graph) {
    const auto it = std::find(names_.begin(), names_.end(), text);
    if (it == names_.end()) throw InvalidArgument("unknown vertex '" + text + "'");
    return VertexId::node(static_cast<std::int32_t>(it - names_.begin()));
  }
  if (text == "head") {
    v = VertexId::head();
  } else if (text.starts_with("a:")) {
    const std::string_view rest = std::string_view(text).substr(2);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("bad arm vertex '" + text + "'");
    v = VertexId::arm(static_cast<std::int32_t>(parse_int(rest.substr(0, colon))),
                      static_cast<std::int32_t>(parse_int(rest.substr(colon + 1))));
  } else {
    const std::string_view all = text;
    const auto colon = all.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("bad vertex '" + text + "'");
    v = VertexId::component(static_cast<std::int32_t>(parse_int(all.substr(0, colon))),
                            static_cast<std::int32_t>(parse_int(all.substr(colon + 1))));
  }
  if (!graph_.contains(v)) throw InvalidArgument("vertex '" + text + "' is not in the instance");
  return v;
}

std::string Instance::describe() const {
  switch (kind_) {
    case Kind::PathForest: return "pf:" + join(forest_->orders());
    case Kind::Path: return "path:" + std::to_string(forest_->order());
    case Kind::Spider: return "spider:" + join(spider_->arms());
    case Kind::Graph:
      return "graph:" + std::to_string(graph_.order()) + "v" + std::to_string(graph_.edge_count()) + "e";
  }
  return "?";
}

}  // namespace burn::cli
