#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netcg/graph.hpp"

namespace netcg {

// NETCG v1: one header line "NETCG v1 <n> <m>", optional "# key=value"
// metadata lines, then m edge lines "u v" with u < v, sorted.  Serialization
// is byte-stable: parse(serialize(G)) reproduces G and the metadata order.
struct GraphFile {
  Graph graph;
  std::vector<std::pair<std::string, std::string>> metadata;

  void set_meta(const std::string& key, const std::string& value);
  std::string meta(const std::string& key) const;  // "" when absent
};

std::string serialize_netcg(const GraphFile& file);
GraphFile parse_netcg(const std::string& text);  // throws ParseError

std::string serialize_dot(const Graph& g);

}  // namespace netcg
