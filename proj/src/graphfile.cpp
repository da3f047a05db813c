#include "netcg/graphfile.hpp"

#include <sstream>

namespace netcg {

void GraphFile::set_meta(const std::string& key, const std::string& value) {
  for (auto& [k, v] : metadata) {
    if (k == key) {
      v = value;
      return;
    }
  }
  metadata.emplace_back(key, value);
}

std::string GraphFile::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return "";
}

std::string serialize_netcg(const GraphFile& file) {
  std::ostringstream os;
  os << "NETCG v1 " << file.graph.vertex_count() << " " << file.graph.edge_count() << "\n";
  for (const auto& [k, v] : file.metadata) os << "# " << k << "=" << v << "\n";
  for (auto [u, v] : file.graph.edges()) os << u << " " << v << "\n";
  return os.str();
}

GraphFile parse_netcg(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) fail(Err::ParseError, "empty input");

  std::istringstream header(line);
  std::string magic, version;
  long long n = -1, m = -1;
  header >> magic >> version >> n >> m;
  if (magic != "NETCG" || version != "v1" || n < 0 || m < 0 || !header)
    fail(Err::ParseError, "bad header; expected 'NETCG v1 <n> <m>'");

  GraphFile file;
  file.graph = Graph(static_cast<int>(n));
  long long edges_seen = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      const std::size_t start = body.find_first_not_of(' ');
      if (start == std::string::npos) continue;
      body = body.substr(start);
      const std::size_t eq = body.find('=');
      if (eq == std::string::npos) fail(Err::ParseError, "metadata line without '='");
      file.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      continue;
    }
    std::istringstream es(line);
    long long u = -1, v = -1;
    es >> u >> v;
    if (!es || u < 0 || v < 0 || u >= n || v >= n || u == v)
      fail(Err::ParseError, "bad edge line: " + line);
    file.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++edges_seen;
  }
  if (edges_seen != m || file.graph.edge_count() != m)
    fail(Err::ParseError, "edge count does not match header");
  return file;
}

std::string serialize_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph netcg {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace netcg
