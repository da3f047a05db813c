#include "netcg/affine.hpp"

#include <algorithm>
#include <string>

#include "netcg/modarith.hpp"

namespace netcg {

AffineElement aff_identity(std::int64_t p) { return {1 % p, 0, p}; }

AffineElement aff_make(std::int64_t a, std::int64_t b, std::int64_t p) {
  a = mod_reduce(a, p);
  b = mod_reduce(b, p);
  if (a == 0) fail(Err::BadParameters, "affine multiplier must be nonzero");
  return {a, b, p};
}

AffineElement aff_compose(const AffineElement& g, const AffineElement& h) {
  if (g.p != h.p) fail(Err::ModulusMismatch, "affine elements over different primes");
  return {mod_mul(g.a, h.a, g.p), mod_reduce(g.b * h.a + h.b, g.p), g.p};
}

AffineElement aff_inverse(const AffineElement& g) {
  const std::int64_t ai = mod_inverse(g.a, g.p);
  return {ai, mod_reduce(-g.b * ai, g.p), g.p};
}

AffineElement aff_conjugate(const AffineElement& g, const AffineElement& h) {
  return aff_compose(aff_compose(aff_inverse(h), g), h);
}

AffineElement aff_pow(const AffineElement& g, std::int64_t k) {
  AffineElement base = g;
  if (k < 0) {
    base = aff_inverse(g);
    k = -k;
  }
  AffineElement acc = aff_identity(g.p);
  while (k > 0) {
    if (k & 1) acc = aff_compose(acc, base);
    base = aff_compose(base, base);
    k >>= 1;
  }
  return acc;
}

std::int64_t aff_order(const AffineElement& g) {
  // a != 1: order of a in Z_p^*.  a == 1: translation of order p (or 1).
  if (g.a != 1) return element_order(Residue(g.a, g.p));
  return g.b == 0 ? 1 : g.p;
}

// ---------------------------------------------------------------------------

GroupTable GroupTable::frobenius(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || !is_prime(q))
    fail(Err::BadParameters, "p and q must be prime");
  if (q >= p) fail(Err::BadParameters, "q must be smaller than p");
  if ((p - 1) % q != 0) fail(Err::BadParameters, "q must divide p-1");

  GroupTable G;
  G.p_ = p;
  G.q_ = q;
  G.m_ = primitive_root(p).value;
  G.z_ = mod_pow(G.m_, (p - 1) / q, p);
  G.zlog_.assign(p, -1);
  std::int64_t zi = 1;
  for (std::int64_t i = 0; i < q; ++i) {
    G.zlog_[zi] = static_cast<int>(i);
    zi = mod_mul(zi, G.z_, p);
  }
  G.elems_.reserve(static_cast<std::size_t>(p * q));
  zi = 1;
  for (std::int64_t i = 0; i < q; ++i) {
    for (std::int64_t j = 0; j < p; ++j) G.elems_.push_back({zi, j, p});
    zi = mod_mul(zi, G.z_, p);
  }
  return G;
}

const AffineElement& GroupTable::element(int idx) const {
  if (idx < 0 || idx >= size()) fail(Err::OutOfRange, "element index out of range");
  return elems_[idx];
}

bool GroupTable::contains(const AffineElement& g) const {
  return g.p == p_ && g.a >= 0 && g.a < p_ && zlog_[g.a] >= 0;
}

int GroupTable::index_of(const AffineElement& g) const {
  if (!contains(g))
    fail(Err::OutOfRange, "element does not belong to G_" + std::to_string(p_ * q_));
  return static_cast<int>(zlog_[g.a] * p_ + g.b);
}

int GroupTable::mul(int i, int j) const {
  return index_of(aff_compose(element(i), element(j)));
}

int GroupTable::inv(int i) const { return index_of(aff_inverse(element(i))); }

// ---------------------------------------------------------------------------

CyclicSubgroupH subgroup_H(std::int64_t p, std::int64_t q, std::int64_t ell, std::int64_t j) {
  if (!is_prime(p) || !is_prime(q) || q >= p || (p - 1) % q != 0)
    fail(Err::BadParameters, "invalid (p, q) for G_pq");
  if (ell <= 1 || (p - 1) % ell != 0)
    fail(Err::BadParameters, "ell must exceed 1 and divide p-1");
  if (j < 0 || j >= p) fail(Err::BadParameters, "j must lie in [0, p)");
  const std::int64_t m = primitive_root(p).value;
  return CyclicSubgroupH{p, ell, j, aff_make(mod_pow(m, (p - 1) / ell, p), j, p)};
}

std::vector<AffineElement> CyclicSubgroupH::elements() const {
  std::vector<AffineElement> out;
  out.reserve(static_cast<std::size_t>(ell));
  AffineElement cur = aff_identity(p);
  for (std::int64_t k = 0; k < ell; ++k) {
    out.push_back(cur);
    cur = aff_compose(cur, generator);
  }
  return out;
}

AffineElement fixed_subgroup_X(std::int64_t p, std::int64_t q, std::int64_t ell,
                               std::int64_t j) {
  const CyclicSubgroupH H = subgroup_H(p, q, ell, j);
  const std::int64_t m = primitive_root(p).value;
  const std::int64_t z = mod_pow(m, (p - 1) / q, p);
  const std::int64_t w = mod_pow(m, (p - 1) / ell, p);
  const std::int64_t expo = mod_mul(mod_mul(j, z - 1, p), mod_inverse(w - 1, p), p);
  const AffineElement x = aff_make(z, expo, p);
  if (aff_conjugate(x, H.generator) != x)
    fail(Err::InternalInconsistency, "fixed element is not fixed by H");
  return x;
}

std::vector<int> conj_orbit(const GroupTable& G, const AffineElement& g,
                            std::span<const AffineElement> conjugators) {
  std::vector<char> seen(static_cast<std::size_t>(G.size()), 0);
  std::vector<int> frontier{G.index_of(g)};
  seen[frontier[0]] = 1;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const AffineElement& cur = G.element(frontier[head]);
    for (const AffineElement& c : conjugators) {
      const int im = G.index_of(aff_conjugate(cur, c));
      if (!seen[im]) {
        seen[im] = 1;
        frontier.push_back(im);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

std::vector<AffineElement> h_orbit(const GroupTable& G, const AffineElement& g,
                                   const CyclicSubgroupH& H) {
  const AffineElement gens[] = {H.generator};
  std::vector<AffineElement> out;
  for (int idx : conj_orbit(G, g, gens)) out.push_back(G.element(idx));
  return out;
}

Perm conjugation_perm(const GroupTable& G, const AffineElement& c) {
  std::vector<int> img(static_cast<std::size_t>(G.size()));
  for (int i = 0; i < G.size(); ++i)
    img[i] = G.index_of(aff_conjugate(G.element(i), c));
  return Perm(std::move(img));
}

Perm right_mult_perm(const GroupTable& G, int g_idx) {
  std::vector<int> img(static_cast<std::size_t>(G.size()));
  for (int i = 0; i < G.size(); ++i) img[i] = G.mul(i, g_idx);
  return Perm(std::move(img));
}

Perm left_mult_perm(const GroupTable& G, int g_idx) {
  const int gi = G.inv(g_idx);
  std::vector<int> img(static_cast<std::size_t>(G.size()));
  for (int i = 0; i < G.size(); ++i) img[i] = G.mul(gi, i);
  return Perm(std::move(img));
}

PermGroup automorphism_group_of_G(std::int64_t p, std::int64_t q) {
  const GroupTable G = GroupTable::frobenius(p, q);
  std::vector<Perm> gens;
  gens.push_back(conjugation_perm(G, aff_make(1, 1, p)));       // iota(t)
  gens.push_back(conjugation_perm(G, aff_make(G.m(), 0, p)));   // iota(m)
  return PermGroup(G.size(), std::move(gens));
}

std::vector<Perm> all_automorphism_perms(const GroupTable& G) {
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(G.p() * (G.p() - 1)));
  for (std::int64_t a = 1; a < G.p(); ++a)
    for (std::int64_t b = 0; b < G.p(); ++b)
      out.push_back(conjugation_perm(G, aff_make(a, b, G.p())));
  return out;
}

}  // namespace netcg
