#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netcg/affine.hpp"
#include "netcg/autiso.hpp"
#include "netcg/graph.hpp"
#include "netcg/perm.hpp"

namespace netcg {

// Parameters of the graph Gamma(pq, ell, i) = Gamma(G_pq, H_(ell,1), z^i),
// with i already in canonical range: i = 1 when q = 2, else 1 <= i <= (q-1)/2.
struct GammaParams {
  std::int64_t p, q, ell, i;

  friend bool operator==(const GammaParams&, const GammaParams&) = default;
};

GammaParams make_gamma_params(std::int64_t p, std::int64_t q, std::int64_t ell,
                              std::int64_t i);

struct NetVerdict {
  bool is_net = false;
  bool is_arc_transitive = false;
  std::vector<int> witness_orbit;  // orbit T with S = T u T^-1 (element indices)
  PermGroup aut_g_s;               // Aut(G)_S as permutations of G
};

// Subgroup of Aut(G_pq) fixing S setwise, filtered from all p(p-1)
// conjugation automorphisms.
PermGroup aut_G_fixing_S(const GroupTable& G, const CayleySet& S);

// Normal edge-transitivity decided by the orbit criterion and cross-checked
// against the edge orbits of rho(G).Aut(G)_S; the two must agree.
NetVerdict is_normal_edge_transitive(const GroupTable& G, const CayleySet& S);

// Gamma(pq) = Gamma(G_pq, T, z): C_q[empty_p] for odd q, K_{p,p} for q = 2.
Graph construction1(std::int64_t p, std::int64_t q);

// Connection set z^(iH) u z^(-iH) for H = H_(ell,1).
CayleySet construction2_connection_set(const GroupTable& G, const GammaParams& params);
Graph construction2(const GammaParams& params);

// Brings Gamma(G, H_(ell,j), g) to the canonical Gamma(pq, ell, i') shape by
// conjugation; the claimed isomorphism is verified explicitly.
GammaParams normalize_parameters(std::int64_t p, std::int64_t q, std::int64_t ell,
                                 std::int64_t j, const AffineElement& g);

// rho(T) x lambda(X) as a subgroup of Aut Gamma, available exactly when
// q | ell; verified regular, abelian, and edge-preserving before return.
std::optional<PermGroup> regular_abelian_subgroup(const GammaParams& params);

}  // namespace netcg
