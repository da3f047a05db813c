#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netcg/error.hpp"
#include "netcg/graph.hpp"

namespace netcg {

// Point-line incidence structure; lines are kept as sorted point lists.
struct IncidenceStructure {
  int point_count = 0;
  std::vector<std::vector<int>> lines;

  bool incident(int point, int line) const;
  std::vector<std::pair<int, int>> flags() const;  // (point, line), sorted
};

// PG(2,r) for r in {2, 3, 4, 8}.  Points are 1-spaces of F_r^3 in normalized
// homogeneous coordinates, ordered lexicographically; GF(4) uses x^2+x+1 and
// GF(8) uses x^3+x+1, so the output is byte-stable.
IncidenceStructure projective_plane(int r);

// The (11,5,2)-biplane on Z_11 with blocks QR+i, QR = {1,3,4,5,9}; the
// design axioms are re-verified at construction.
IncidenceStructure biplane_11_5_2();

// Vertices are flags; two flags adjacent when they share the point or the
// line.
Graph flag_graph(const IncidenceStructure& inc);

// Bipartite point-line graph, points first.
Graph incidence_graph(const IncidenceStructure& inc);

}  // namespace netcg
