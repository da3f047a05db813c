#pragma once

// Independent brute-force oracles used by the test suites.  Everything here
// is deliberately naive so it cannot share a bug with the engine under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "netcg/graph.hpp"
#include "netcg/perm.hpp"

namespace netcg::testing {

// Full enumeration of the group generated by `gens` via BFS closure.
inline std::vector<Perm> enumerate_group(int degree, const std::vector<Perm>& gens,
                                         std::size_t limit = 2'000'000) {
  std::set<std::vector<int>> seen;
  std::vector<Perm> frontier{Perm(degree)};
  seen.insert(frontier[0].img);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = frontier[head] * g;
      if (seen.insert(next.img).second) {
        frontier.push_back(std::move(next));
        if (frontier.size() > limit) throw std::runtime_error("enumeration limit hit");
      }
    }
  }
  return frontier;
}

inline bool preserves_edges(const Graph& g, const std::vector<int>& img) {
  for (auto [u, v] : g.edges())
    if (!g.has_edge(img[u], img[v])) return false;
  return true;
}

// |Aut(g)| by trying all n! permutations.  Usable up to n = 10 or so.
inline std::uint64_t brute_force_aut_order(const Graph& g) {
  std::vector<int> img(g.vertex_count());
  std::iota(img.begin(), img.end(), 0);
  std::uint64_t count = 0;
  do {
    if (preserves_edges(g, img)) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

// Isomorphism by exhaustive search over vertex bijections.
inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> img(a.vertex_count());
  std::iota(img.begin(), img.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.has_edge(img[u], img[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

}  // namespace netcg::testing
