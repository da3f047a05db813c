#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "netcg/affine.hpp"
#include "netcg/error.hpp"
#include "netcg/perm.hpp"

namespace netcg {

// Undirected simple graph over indexed vertices, adjacency kept as bitset
// rows.  Immutable in practice: built once, then only queried.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return edges_; }

  void add_edge(int u, int v);  // u != v; adding twice is a no-op
  bool has_edge(int u, int v) const;
  int degree(int v) const { return degree_[v]; }

  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  bool is_regular() const;
  int valency() const;  // degree of vertex 0 (meaningful for regular graphs)

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::int64_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degree_;
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);  // 1 -> K_1, 2 -> K_2
Graph path_graph(int n);
Graph relabel(const Graph& g, const Perm& p);  // vertex v becomes p[v]
bool is_bipartite(const Graph& g);

// An inverse-closed, identity-free subset of a GroupTable, kept as sorted
// element indices.
struct CayleySet {
  std::vector<int> members;
};

CayleySet make_cayley_set(const GroupTable& G, std::vector<int> members);
std::vector<int> inverse_set(const GroupTable& G, const std::vector<int>& members);

// Cay(G, S): edges {x, y} with y x^-1 in S.  Regular of valency |S|.
Graph cayley_graph(const GroupTable& G, const CayleySet& S);

// Gamma(G, H, g) = Cay(G, g^H u g^-H) for H given by conjugating generators.
Graph gamma_GHg(const GroupTable& G, std::span<const AffineElement> h_generators,
                const AffineElement& g);

// Simple quotient: blocks adjacent when some pair across them is adjacent.
Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& partition);

// Lexicographic product Sigma[Delta]; vertex (a, b) -> a*|VDelta| + b.
Graph lex_product(const Graph& sigma, const Graph& delta);

// Direct (tensor) product; same row-major vertex indexing.
Graph direct_product(const Graph& sigma, const Graph& delta);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Right cosets of a subgroup (given as element indices), each sorted, the
// list sorted by minimum element.
std::vector<std::vector<int>> coset_partition(const GroupTable& G,
                                              const std::vector<int>& subgroup);

// SM = S test for a normal subgroup M; throws NotASubgroup / NotNormal.
bool is_coset_union(const GroupTable& G, const CayleySet& S, const std::vector<int>& M);

}  // namespace netcg
