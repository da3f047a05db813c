#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netcg/error.hpp"
#include "netcg/perm.hpp"

namespace netcg {

// An element of AGL(1,p): the map x |-> x*a + b over Z_p with a != 0.
// Products compose left-to-right, "apply g, then h":
//   (a,b)(c,d) = (ac, bc+d).
// This is the unique convention under which
//   (m^i t^j)^(t^k) = m^i t^(j + k(1-m^i))
// holds literally, with t = (1,1), m = (m,0) and m^i t^j = (m^i, j).
struct AffineElement {
  std::int64_t a, b, p;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

AffineElement aff_identity(std::int64_t p);
AffineElement aff_make(std::int64_t a, std::int64_t b, std::int64_t p);
AffineElement aff_compose(const AffineElement& g, const AffineElement& h);
AffineElement aff_inverse(const AffineElement& g);
AffineElement aff_conjugate(const AffineElement& g, const AffineElement& h);  // h^-1 g h
AffineElement aff_pow(const AffineElement& g, std::int64_t k);
std::int64_t aff_order(const AffineElement& g);

// The Frobenius group G_pq = <z, t> <= AGL(1,p) of order pq, where
// z = m^((p-1)/q) for the smallest primitive root m, with the canonical
// vertex indexing idx(z^i t^j) = i*p + j.
class GroupTable {
 public:
  static GroupTable frobenius(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t m() const { return m_; }
  std::int64_t z_value() const { return z_; }
  int size() const { return static_cast<int>(p_ * q_); }

  const AffineElement& element(int idx) const;
  int index_of(const AffineElement& g) const;  // OutOfRange if not in G_pq
  bool contains(const AffineElement& g) const;

  int identity_index() const { return 0; }
  int mul(int i, int j) const;
  int inv(int i) const;

  AffineElement t() const { return aff_make(1, 1, p_); }
  AffineElement z() const { return aff_make(z_, 0, p_); }

 private:
  std::int64_t p_ = 0, q_ = 0, m_ = 0, z_ = 0;
  std::vector<AffineElement> elems_;
  std::vector<int> zlog_;  // zlog_[a] = i when a = z^i, else -1
};

// H_(ell,j) = < m^((p-1)/ell) t^j >, cyclic of order ell, meeting the
// translations trivially.
struct CyclicSubgroupH {
  std::int64_t p, ell, j;
  AffineElement generator;

  std::vector<AffineElement> elements() const;  // size ell, by powers
};

CyclicSubgroupH subgroup_H(std::int64_t p, std::int64_t q, std::int64_t ell, std::int64_t j);

// Generator x of the order-q subgroup X of G_pq fixed pointwise by
// conjugation by H_(ell,j):  x = z t^(j(z-1)(m^((p-1)/ell)-1)^-1).
AffineElement fixed_subgroup_X(std::int64_t p, std::int64_t q, std::int64_t ell, std::int64_t j);

// Orbit of g under conjugation by <conjugators>, as sorted table indices.
std::vector<int> conj_orbit(const GroupTable& G, const AffineElement& g,
                            std::span<const AffineElement> conjugators);

// Same orbit returned as elements, sorted by canonical index.
std::vector<AffineElement> h_orbit(const GroupTable& G, const AffineElement& g,
                                   const CyclicSubgroupH& H);

// Permutation of the table induced by conjugation g |-> c^-1 g c.
Perm conjugation_perm(const GroupTable& G, const AffineElement& c);
// Right multiplication rho(g): x |-> xg.
Perm right_mult_perm(const GroupTable& G, int g_idx);
// Left action lambda(g): x |-> g^-1 x.
Perm left_mult_perm(const GroupTable& G, int g_idx);

// Aut(G_pq) as a permutation group on the pq table indices: conjugation by
// the generators t and m of AGL(1,p); order p(p-1).
PermGroup automorphism_group_of_G(std::int64_t p, std::int64_t q);

// All p(p-1) automorphisms, one conjugation permutation per element of
// AGL(1,p).  Desk-scale helper for setwise-stabilizer filtering.
std::vector<Perm> all_automorphism_perms(const GroupTable& G);

}  // namespace netcg
