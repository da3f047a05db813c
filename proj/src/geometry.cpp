#include "netcg/geometry.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace netcg {

bool IncidenceStructure::incident(int point, int line) const {
  const auto& L = lines[line];
  return std::binary_search(L.begin(), L.end(), point);
}

std::vector<std::pair<int, int>> IncidenceStructure::flags() const {
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l < static_cast<int>(lines.size()); ++l)
    for (int pt : lines[l]) out.emplace_back(pt, l);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Arithmetic tables for the small fields the planes need.  GF(4) and GF(8)
// elements are bit patterns of polynomials over F_2.
struct SmallField {
  int r;
  std::array<std::array<int, 8>, 8> mul{};
  std::array<std::array<int, 8>, 8> add{};

  explicit SmallField(int order) : r(order) {
    if (order == 2 || order == 3) {
      for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
          add[a][b] = (a + b) % order;
          mul[a][b] = (a * b) % order;
        }
      return;
    }
    // binary fields: GF(4) modulo x^2+x+1, GF(8) modulo x^3+x+1
    const int poly = (order == 4) ? 0b111 : 0b1011;
    const int bits = (order == 4) ? 2 : 3;
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        add[a][b] = a ^ b;
        int prod = 0, x = a;
        for (int k = 0; k < bits; ++k) {
          if (b & (1 << k)) prod ^= x << k;
        }
        for (int k = 2 * bits - 2; k >= bits; --k) {
          if (prod & (1 << k)) prod ^= poly << (k - bits);
        }
        mul[a][b] = prod;
      }
  }
};

using Triple = std::array<int, 3>;

// normalized representative: first nonzero coordinate equals 1
Triple normalize(Triple v, const SmallField& F, const std::array<int, 8>& inv) {
  for (int k = 0; k < 3; ++k) {
    if (v[k] != 0) {
      const int c = inv[v[k]];
      for (int t = 0; t < 3; ++t) v[t] = F.mul[c][v[t]];
      return v;
    }
  }
  return v;
}

}  // namespace

IncidenceStructure projective_plane(int r) {
  if (r != 2 && r != 3 && r != 4 && r != 8)
    fail(Err::UnsupportedOrder, "supported plane orders are 2, 3, 4, 8");
  const SmallField F(r);
  std::array<int, 8> inv{};
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      if (F.mul[a][b] == 1) inv[a] = b;

  std::vector<Triple> points;
  for (int c0 = 0; c0 < r; ++c0)
    for (int c1 = 0; c1 < r; ++c1)
      for (int c2 = 0; c2 < r; ++c2) {
        if (c0 == 0 && c1 == 0 && c2 == 0) continue;
        Triple v = normalize({c0, c1, c2}, F, inv);
        if (v == Triple{c0, c1, c2}) points.push_back(v);
      }
  std::sort(points.begin(), points.end());  // lexicographic canonical order

  IncidenceStructure inc;
  inc.point_count = static_cast<int>(points.size());
  // lines are dual triples [a0,a1,a2]: point on line iff the dot product is 0
  for (const Triple& a : points) {
    std::vector<int> line;
    for (int pi = 0; pi < inc.point_count; ++pi) {
      const Triple& x = points[pi];
      const int dot = F.add[F.add[F.mul[a[0]][x[0]]][F.mul[a[1]][x[1]]]][F.mul[a[2]][x[2]]];
      if (dot == 0) line.push_back(pi);
    }
    inc.lines.push_back(std::move(line));
  }

  // plane axioms, checked exhaustively at these sizes
  const int expected = r * r + r + 1;
  if (inc.point_count != expected || static_cast<int>(inc.lines.size()) != expected)
    fail(Err::InternalInconsistency, "wrong point or line count for PG(2,r)");
  for (const auto& line : inc.lines)
    if (static_cast<int>(line.size()) != r + 1)
      fail(Err::InternalInconsistency, "line of wrong size in PG(2,r)");
  for (int a = 0; a < inc.point_count; ++a)
    for (int b = a + 1; b < inc.point_count; ++b) {
      int common = 0;
      for (const auto& line : inc.lines)
        if (std::binary_search(line.begin(), line.end(), a) &&
            std::binary_search(line.begin(), line.end(), b))
          ++common;
      if (common != 1)
        fail(Err::InternalInconsistency, "two points not on exactly one line");
    }
  return inc;
}

IncidenceStructure biplane_11_5_2() {
  IncidenceStructure inc;
  inc.point_count = 11;
  const std::array<int, 5> qr{1, 3, 4, 5, 9};  // quadratic residues mod 11
  for (int i = 0; i < 11; ++i) {
    std::vector<int> block;
    for (int s : qr) block.push_back((s + i) % 11);
    std::sort(block.begin(), block.end());
    inc.lines.push_back(std::move(block));
  }
  // (11,5,2) design axioms
  for (int a = 0; a < 11; ++a)
    for (int b = a + 1; b < 11; ++b) {
      int common = 0;
      for (const auto& block : inc.lines)
        if (std::binary_search(block.begin(), block.end(), a) &&
            std::binary_search(block.begin(), block.end(), b))
          ++common;
      if (common != 2)
        fail(Err::InternalInconsistency, "two points not in exactly two blocks");
    }
  return inc;
}

Graph flag_graph(const IncidenceStructure& inc) {
  const auto flags = inc.flags();
  const int n = static_cast<int>(flags.size());
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (flags[a].first == flags[b].first || flags[a].second == flags[b].second)
        g.add_edge(a, b);
    }
  return g;
}

Graph incidence_graph(const IncidenceStructure& inc) {
  Graph g(inc.point_count + static_cast<int>(inc.lines.size()));
  for (int l = 0; l < static_cast<int>(inc.lines.size()); ++l)
    for (int pt : inc.lines[l]) g.add_edge(pt, inc.point_count + l);
  return g;
}

}  // namespace netcg
