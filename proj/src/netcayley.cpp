#include "netcg/netcayley.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "netcg/modarith.hpp"

namespace netcg {

GammaParams make_gamma_params(std::int64_t p, std::int64_t q, std::int64_t ell,
                              std::int64_t i) {
  if (!is_prime(p) || !is_prime(q) || q >= p || (p - 1) % q != 0)
    fail(Err::BadParameters, "need primes q < p with q | p-1");
  if (ell <= 1 || ell > p - 1 || (p - 1) % ell != 0)
    fail(Err::BadParameters, "ell must exceed 1 and divide p-1");
  if (q == 2) {
    if (i != 1) fail(Err::BadParameters, "i must be 1 when q = 2");
  } else if (i < 1 || i > (q - 1) / 2) {
    fail(Err::BadParameters, "i must lie in [1, (q-1)/2]");
  }
  return GammaParams{p, q, ell, i};
}

PermGroup aut_G_fixing_S(const GroupTable& G, const CayleySet& S) {
  make_cayley_set(G, S.members);  // re-validate; throws InvalidCayleySet
  std::vector<Perm> fixing;
  for (Perm& perm : all_automorphism_perms(G)) {
    bool ok = true;
    for (int s : S.members) {
      if (!std::binary_search(S.members.begin(), S.members.end(), perm.img[s])) {
        ok = false;
        break;
      }
    }
    if (ok) fixing.push_back(std::move(perm));
  }
  return PermGroup(G.size(), std::move(fixing));
}

namespace {

// Orbits of a set of permutations restricted to the points of S.
std::vector<std::vector<int>> orbits_on(const std::vector<Perm>& perms,
                                        const std::vector<int>& points) {
  std::vector<std::vector<int>> orbits;
  std::set<int> left(points.begin(), points.end());
  while (!left.empty()) {
    std::vector<int> orbit{*left.begin()};
    left.erase(left.begin());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& p : perms) {
        const int im = p.img[orbit[head]];
        if (left.erase(im)) orbit.push_back(im);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

bool edge_transitive_direct(const GroupTable& G, const CayleySet& S,
                            const std::vector<Perm>& aut_gs_perms) {
  const Graph gamma = cayley_graph(G, S);
  const auto edges = gamma.edges();
  if (edges.empty()) return false;
  std::vector<Perm> gens = aut_gs_perms;
  gens.push_back(right_mult_perm(G, G.index_of(aff_make(1, 1, G.p()))));
  gens.push_back(right_mult_perm(G, G.index_of(G.z())));

  const int n = G.size();
  auto edge_id = [n](int u, int v) { return u < v ? u * n + v : v * n + u; };
  std::set<int> all;
  for (auto [u, v] : edges) all.insert(edge_id(u, v));
  std::vector<std::pair<int, int>> frontier{edges.front()};
  std::set<int> seen{edge_id(edges.front().first, edges.front().second)};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    auto [u, v] = frontier[head];
    for (const Perm& g : gens) {
      const int iu = g.img[u], iv = g.img[v];
      if (seen.insert(edge_id(iu, iv)).second) frontier.emplace_back(iu, iv);
    }
  }
  return seen.size() == all.size();
}

}  // namespace

NetVerdict is_normal_edge_transitive(const GroupTable& G, const CayleySet& S) {
  if (S.members.empty()) fail(Err::InvalidCayleySet, "connection set is empty");
  NetVerdict verdict;
  verdict.aut_g_s = aut_G_fixing_S(G, S);

  const auto orbits = orbits_on(verdict.aut_g_s.generators(), S.members);
  if (orbits.size() == 1) {
    verdict.is_net = true;
    verdict.is_arc_transitive = true;
    verdict.witness_orbit = orbits[0];
  } else if (orbits.size() == 2 && inverse_set(G, orbits[0]) == orbits[1]) {
    verdict.is_net = true;
    verdict.is_arc_transitive = false;
    verdict.witness_orbit = orbits[0];
  }

  const bool direct = edge_transitive_direct(G, S, verdict.aut_g_s.generators());
  if (direct != verdict.is_net)
    fail(Err::InternalInconsistency,
         "orbit criterion and edge-orbit computation disagree");
  return verdict;
}

Graph construction1(std::int64_t p, std::int64_t q) {
  const GroupTable G = GroupTable::frobenius(p, q);
  const AffineElement t = G.t();
  return gamma_GHg(G, std::span<const AffineElement>(&t, 1), G.z());
}

CayleySet construction2_connection_set(const GroupTable& G, const GammaParams& params) {
  const CyclicSubgroupH H = subgroup_H(params.p, params.q, params.ell, 1);
  const AffineElement gens[] = {H.generator};
  const AffineElement zi = aff_pow(G.z(), params.i);
  std::vector<int> members = conj_orbit(G, zi, gens);
  const std::vector<int> inv_orbit = conj_orbit(G, aff_inverse(zi), gens);
  members.insert(members.end(), inv_orbit.begin(), inv_orbit.end());
  return make_cayley_set(G, std::move(members));
}

Graph construction2(const GammaParams& params) {
  const GammaParams checked = make_gamma_params(params.p, params.q, params.ell, params.i);
  const GroupTable G = GroupTable::frobenius(checked.p, checked.q);
  return cayley_graph(G, construction2_connection_set(G, checked));
}

GammaParams normalize_parameters(std::int64_t p, std::int64_t q, std::int64_t ell,
                                 std::int64_t j, const AffineElement& g) {
  const CyclicSubgroupH H = subgroup_H(p, q, ell, j);
  const GroupTable G = GroupTable::frobenius(p, q);
  if (!G.contains(g)) fail(Err::OutOfRange, "g does not belong to G_pq");
  const int g_idx = G.index_of(g);
  const std::int64_t i_raw = g_idx / p;  // g = z^i t^k under the table indexing
  const std::int64_t k = g_idx % p;
  if (i_raw == 0)
    fail(Err::DisconnectedInput, "g lies in the translation subgroup T");

  // y1 = t^(k (z^i - 1)^-1) conjugates g to z^i and H_(ell,j) to H_(ell,j').
  const std::int64_t zi = mod_pow(G.z_value(), i_raw, p);
  const AffineElement y1 = aff_make(1, mod_mul(k, mod_inverse(zi - 1, p), p), p);
  if (aff_conjugate(g, y1) != aff_pow(G.z(), i_raw))
    fail(Err::InternalInconsistency, "y1 does not conjugate g to z^i");
  const AffineElement h_conj = aff_conjugate(H.generator, y1);
  const std::int64_t j_prime = h_conj.b;
  if (j_prime == 0)
    fail(Err::CentralizingH, "H_(ell,0) centralises z^i; the graph is p.C_q");

  // m^r with j' m^r = 1 sends H_(ell,j') to H_(ell,1) and fixes z^i
  std::int64_t r = 0, acc = j_prime;
  while (acc != 1) {
    acc = mod_mul(acc, G.m(), p);
    ++r;
  }
  const AffineElement mr = aff_make(mod_pow(G.m(), r, p), 0, p);
  if (aff_conjugate(h_conj, mr) != subgroup_H(p, q, ell, 1).generator)
    fail(Err::InternalInconsistency, "m^r does not conjugate H to H_(ell,1)");

  std::int64_t i_canon = i_raw;
  if (q == 2) {
    i_canon = 1;
  } else if (i_canon > (q - 1) / 2) {
    i_canon = q - i_canon;  // Gamma(G,H,z^i) = Gamma(G,H,z^(q-i))
  }
  const GammaParams result = make_gamma_params(p, q, ell, i_canon);

  const AffineElement h_gens[] = {H.generator};
  const Graph original = gamma_GHg(G, h_gens, g);
  if (!are_isomorphic(original, construction2(result)))
    fail(Err::InternalInconsistency, "normalized parameters are not isomorphic");
  return result;
}

std::optional<PermGroup> regular_abelian_subgroup(const GammaParams& params) {
  const GammaParams checked = make_gamma_params(params.p, params.q, params.ell, params.i);
  if (checked.ell % checked.q != 0) return std::nullopt;

  const GroupTable G = GroupTable::frobenius(checked.p, checked.q);
  const Graph gamma = construction2(checked);
  const AffineElement x = fixed_subgroup_X(checked.p, checked.q, checked.ell, 1);

  std::vector<Perm> gens;
  gens.push_back(right_mult_perm(G, G.index_of(G.t())));
  gens.push_back(left_mult_perm(G, G.index_of(x)));

  // abelian: the two generators commute
  if (!(gens[0] * gens[1] == gens[1] * gens[0]))
    fail(Err::InternalInconsistency, "rho(t) and lambda(x) do not commute");
  // inside Aut Gamma: both preserve the edge set
  for (const Perm& perm : gens) {
    for (auto [u, v] : gamma.edges()) {
      if (!gamma.has_edge(perm[u], perm[v]))
        fail(Err::InternalInconsistency, "regular abelian generator breaks an edge");
    }
  }
  PermGroup L(G.size(), std::move(gens));
  if (!L.is_transitive() || L.order() != static_cast<std::uint64_t>(G.size()))
    fail(Err::InternalInconsistency, "rho(T) x lambda(X) is not regular");
  return L;
}

}  // namespace netcg
