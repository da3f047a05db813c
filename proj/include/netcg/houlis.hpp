#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "netcg/error.hpp"
#include "netcg/graph.hpp"

namespace netcg {

// Parameters (d2, d1, d) of the subgroup H(d2,d1,d) <= Z_p^* x Z_q^*:
//   d2 > 0, d2 | q-1, d1 | p-1, 0 <= d < d1, d1 d2 | d(q-1),
// with (q-1)/d2 even if q > 2 and (p-1)/gcd(d,d1) even if p > 2
// (gcd(0,n) = n), so that H contains the inversion (-1,-1).
struct AbelianParams {
  std::int64_t p, q, d2, d1, d;

  friend bool operator==(const AbelianParams&, const AbelianParams&) = default;
};

AbelianParams make_abelian_params(std::int64_t p, std::int64_t q, std::int64_t d2,
                                  std::int64_t d1, std::int64_t d);

// All valid triples for the pair (p, q), sorted lexicographically by
// (d2, d1, d).
std::vector<AbelianParams> valid_params(std::int64_t p, std::int64_t q);

// Indexed abelian group underlying the Cayley constructions below.  Product
// types use idx(a, b) = a * (second factor size) + b.
struct AbelianGroupTable {
  enum class Kind { ZpZq, ZpZp, ZpSquared, Zp };

  Kind kind;
  std::int64_t first, second;  // factor sizes; second = 1 for cyclic kinds

  static AbelianGroupTable zp_zq(std::int64_t p, std::int64_t q) {
    return {Kind::ZpZq, p, q};
  }
  static AbelianGroupTable zp_zp(std::int64_t p) { return {Kind::ZpZp, p, p}; }
  static AbelianGroupTable zp_squared(std::int64_t p) {
    return {Kind::ZpSquared, p * p, 1};
  }
  static AbelianGroupTable zp(std::int64_t p) { return {Kind::Zp, p, 1}; }

  int size() const { return static_cast<int>(first * second); }
  int add(int a, int b) const;
  int neg(int a) const;
};

// Cay(table, S) for an inverse-closed, identity-free S of element indices.
Graph cayley_graph_abelian(const AbelianGroupTable& table, const std::vector<int>& connection);

// Generator pair ((x^d, y^d2), (x^d1, 1)) for the smallest primitive roots
// x mod p and y mod q.
using UnitPair = std::pair<std::int64_t, std::int64_t>;
std::pair<UnitPair, UnitPair> subgroup_H_abelian(const AbelianParams& params);

// The subgroup itself, enumerated; its size is (p-1)(q-1)/(d1 d2).
std::vector<UnitPair> subgroup_H_elements(const AbelianParams& params);

// Cayley graph of Z_p x Z_q on (1,1)^H u (-1,-1)^H, vertex (a,b) -> a*q + b.
Graph gamma_abelian(const AbelianParams& params);

// The (c2, c1, c) triple describing the same subgroup with p and q swapped.
AbelianParams reparametrize(const AbelianParams& params);

// Abelian parameters with gamma_abelian isomorphic to Gamma(pq, ell, i),
// defined when q | ell for odd q and 1 < ell < p-1.
AbelianParams qdividesl_params(std::int64_t p, std::int64_t q, std::int64_t ell);

// Circulant Gamma(p, ell) = Gamma(Z_p, H_ell, 1) of valency ell.
Graph gamma_prime(std::int64_t p, std::int64_t ell);

// The order-p^2 constructions: the common lexicographic blow-up, the
// Z_{p^2} unit-subgroup circulant, and the Z_p x Z_p diagonal case.
enum class PrimeSquareCase { Lex, Units, Diag };
Graph gamma_prime_square(std::int64_t p, std::int64_t ell, PrimeSquareCase which,
                         std::optional<std::array<std::int64_t, 3>> diag_params = {});

}  // namespace netcg
