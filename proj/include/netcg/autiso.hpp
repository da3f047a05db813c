#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcg/graph.hpp"
#include "netcg/perm.hpp"

namespace netcg {

// Relabeling-invariant canonical form: two graphs are isomorphic exactly when
// their canonical edge lists (and vertex counts) coincide.
struct CanonicalForm {
  Perm to_canonical;                                // vertex -> canonical label
  std::vector<std::pair<int, int>> canonical_edges; // sorted, u < v
  int vertex_count = 0;

  std::string fingerprint_hex() const;  // short stable id for reports

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.vertex_count == b.vertex_count && a.canonical_edges == b.canonical_edges;
  }
};

// Full automorphism group via equitable partition refinement with
// backtracking; generators are pruned against already-found automorphisms,
// so large symmetry collapses the search tree rather than growing it.
PermGroup automorphism_group(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

// Witness isomorphism when one exists; verified edge-by-edge before return.
std::optional<Perm> isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace netcg
