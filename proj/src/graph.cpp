#include "netcg/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace netcg {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), degree_(n, 0) {
  if (n < 0) fail(Err::BadParameters, "negative vertex count");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) fail(Err::OutOfRange, "vertex out of range");
  if (u == v) fail(Err::BadParameters, "loops are not allowed");
  if (has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
  ++degree_[u];
  ++degree_[v];
  ++edges_;
}

bool Graph::has_edge(int u, int v) const {
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(degree_[v]);
  const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(v) * words_;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word) {
      const int bit = __builtin_ctzll(word);
      out.push_back(w * 64 + bit);
      word &= word - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_regular() const {
  for (int v = 1; v < n_; ++v)
    if (degree_[v] != degree_[0]) return false;
  return true;
}

int Graph::valency() const { return n_ == 0 ? 0 : degree_[0]; }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  if (n < 3) return g;
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph relabel(const Graph& g, const Perm& p) {
  if (p.degree() != g.vertex_count()) fail(Err::BadParameters, "relabeling degree mismatch");
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(p[u], p[v]);
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      const int u = bfs.front();
      bfs.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          bfs.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

CayleySet make_cayley_set(const GroupTable& G, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int s : members) {
    if (s < 0 || s >= G.size()) fail(Err::OutOfRange, "connection-set index out of range");
    if (s == G.identity_index())
      fail(Err::InvalidCayleySet, "connection set contains the identity");
    if (!std::binary_search(members.begin(), members.end(), G.inv(s)))
      fail(Err::InvalidCayleySet, "connection set is not inverse-closed");
  }
  return CayleySet{std::move(members)};
}

std::vector<int> inverse_set(const GroupTable& G, const std::vector<int>& members) {
  std::vector<int> out;
  out.reserve(members.size());
  for (int s : members) out.push_back(G.inv(s));
  std::sort(out.begin(), out.end());
  return out;
}

Graph cayley_graph(const GroupTable& G, const CayleySet& S) {
  Graph g(G.size());
  for (int x = 0; x < G.size(); ++x) {
    for (int s : S.members) {
      // y = s x so that y x^-1 = s
      g.add_edge(x, G.mul(s, x));
    }
  }
  return g;
}

Graph gamma_GHg(const GroupTable& G, std::span<const AffineElement> h_generators,
                const AffineElement& g) {
  if (g == aff_identity(G.p())) fail(Err::IdentityElement, "g must not be the identity");
  std::vector<int> members = conj_orbit(G, g, h_generators);
  const std::vector<int> inv_orbit = conj_orbit(G, aff_inverse(g), h_generators);
  members.insert(members.end(), inv_orbit.begin(), inv_orbit.end());
  return cayley_graph(G, make_cayley_set(G, std::move(members)));
}

Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& partition) {
  std::vector<int> block_of(g.vertex_count(), -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (int v : partition[b]) {
      if (v < 0 || v >= g.vertex_count() || block_of[v] >= 0)
        fail(Err::NotAPartition, "blocks must partition the vertex set");
      block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (block_of[v] < 0) fail(Err::NotAPartition, "vertex missing from partition");

  Graph q(static_cast<int>(partition.size()));
  for (auto [u, v] : g.edges()) {
    if (block_of[u] != block_of[v]) q.add_edge(block_of[u], block_of[v]);
  }
  return q;
}

Graph lex_product(const Graph& sigma, const Graph& delta) {
  const int ns = sigma.vertex_count(), nd = delta.vertex_count();
  Graph g(ns * nd);
  for (int a1 = 0; a1 < ns; ++a1) {
    for (int b1 = 0; b1 < nd; ++b1) {
      const int u = a1 * nd + b1;
      for (int a2 : sigma.neighbors(a1))
        for (int b2 = 0; b2 < nd; ++b2) {
          const int v = a2 * nd + b2;
          if (u < v) g.add_edge(u, v);
        }
      for (int b2 : delta.neighbors(b1)) {
        const int v = a1 * nd + b2;
        if (u < v) g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph direct_product(const Graph& sigma, const Graph& delta) {
  const int nd = delta.vertex_count();
  Graph g(sigma.vertex_count() * nd);
  for (auto [a1, a2] : sigma.edges()) {
    for (auto [b1, b2] : delta.edges()) {
      g.add_edge(a1 * nd + b1, a2 * nd + b2);
      g.add_edge(a1 * nd + b2, a2 * nd + b1);
    }
  }
  return g;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int v : g.neighbors(comp[head])) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

void check_subgroup(const GroupTable& G, const std::vector<int>& M) {
  std::set<int> mem(M.begin(), M.end());
  if (!mem.count(G.identity_index())) fail(Err::NotASubgroup, "subgroup must contain 1");
  for (int x : M) {
    if (!mem.count(G.inv(x))) fail(Err::NotASubgroup, "set not closed under inverse");
    for (int y : M)
      if (!mem.count(G.mul(x, y))) fail(Err::NotASubgroup, "set not closed under product");
  }
}

void check_normal(const GroupTable& G, const std::vector<int>& M) {
  std::set<int> mem(M.begin(), M.end());
  for (int g = 0; g < G.size(); ++g) {
    const int gi = G.inv(g);
    for (int x : M)
      if (!mem.count(G.mul(G.mul(gi, x), g))) fail(Err::NotNormal, "subgroup is not normal");
  }
}

}  // namespace

std::vector<std::vector<int>> coset_partition(const GroupTable& G,
                                              const std::vector<int>& subgroup) {
  check_subgroup(G, subgroup);
  std::vector<char> seen(static_cast<std::size_t>(G.size()), 0);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < G.size(); ++g) {
    if (seen[g]) continue;
    std::vector<int> coset;
    for (int x : subgroup) {
      const int e = G.mul(x, g);
      seen[e] = 1;
      coset.push_back(e);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool is_coset_union(const GroupTable& G, const CayleySet& S, const std::vector<int>& M) {
  check_subgroup(G, M);
  check_normal(G, M);
  for (int s : S.members) {
    for (int x : M) {
      if (!std::binary_search(S.members.begin(), S.members.end(), G.mul(s, x))) return false;
    }
  }
  return true;
}

}  // namespace netcg
