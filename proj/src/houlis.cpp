#include "netcg/houlis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "netcg/modarith.hpp"

namespace netcg {

namespace {

// smallest generator of Z_n^* for n prime or a prime square
std::int64_t smallest_primitive_root_mod(std::int64_t n, std::int64_t unit_count) {
  if (n == 2) return 1;  // trivial unit group
  for (std::int64_t c = 2; c < n; ++c) {
    if (std::gcd(c, n) != 1) continue;
    std::int64_t ord = 1, acc = c % n;
    while (acc != 1) {
      acc = mod_mul(acc, c, n);
      ++ord;
    }
    if (ord == unit_count) return c;
  }
  fail(Err::InternalInconsistency, "no primitive root found");
}

bool parity_conditions_hold(std::int64_t p, std::int64_t q, std::int64_t d2,
                            std::int64_t d1, std::int64_t d) {
  if (q > 2 && ((q - 1) / d2) % 2 != 0) return false;
  if (p > 2 && ((p - 1) / std::gcd(d, d1)) % 2 != 0) return false;
  return true;
}

bool base_conditions_hold(std::int64_t p, std::int64_t q, std::int64_t d2,
                          std::int64_t d1, std::int64_t d) {
  if (d2 <= 0 || (q - 1) % d2 != 0) return false;
  if (d1 <= 0 || (p - 1) % d1 != 0) return false;
  if (d < 0 || d >= d1) return false;
  if ((d * (q - 1)) % (d1 * d2) != 0) return false;
  return true;
}

std::vector<UnitPair> subgroup_elements_raw(std::int64_t p, std::int64_t q,
                                            std::int64_t d2, std::int64_t d1,
                                            std::int64_t d) {
  const std::int64_t x = smallest_primitive_root_mod(p, p - 1);
  const std::int64_t y = smallest_primitive_root_mod(q, q - 1);
  const UnitPair g1{mod_pow(x, d, p), mod_pow(y, d2, q)};
  const UnitPair g2{mod_pow(x, d1, p), 1 % q};
  std::set<UnitPair> seen;
  std::vector<UnitPair> frontier{{1 % p, 1 % q}};
  seen.insert(frontier[0]);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto [a, b] = frontier[head];
    for (const UnitPair& g : {g1, g2}) {
      UnitPair im{mod_mul(a, g.first, p), mod_mul(b, g.second, q)};
      if (seen.insert(im).second) frontier.push_back(im);
    }
  }
  return {seen.begin(), seen.end()};
}

// The subgroup must contain the inversion (-1,-1), so that the connection
// set of gamma_abelian is the subgroup itself.  The parity clauses are
// necessary for this but not sufficient (e.g. (p,q,d2,d1,d) = (5,3,1,2,1)
// passes them while H = <(x,y),(x^2,1)> misses (-1,-1)); membership is
// therefore checked directly.
bool contains_inversion(std::int64_t p, std::int64_t q, std::int64_t d2,
                        std::int64_t d1, std::int64_t d) {
  const UnitPair inv{mod_reduce(-1, p), mod_reduce(-1, q)};
  const auto H = subgroup_elements_raw(p, q, d2, d1, d);
  return std::find(H.begin(), H.end(), inv) != H.end();
}

}  // namespace

int AbelianGroupTable::add(int a, int b) const {
  if (second == 1) return static_cast<int>(mod_reduce(a + b, first));
  const std::int64_t a1 = a / second, a2 = a % second;
  const std::int64_t b1 = b / second, b2 = b % second;
  return static_cast<int>(mod_reduce(a1 + b1, first) * second + mod_reduce(a2 + b2, second));
}

int AbelianGroupTable::neg(int a) const {
  if (second == 1) return static_cast<int>(mod_reduce(-a, first));
  return static_cast<int>(mod_reduce(-(a / second), first) * second +
                          mod_reduce(-(a % second), second));
}

Graph cayley_graph_abelian(const AbelianGroupTable& table, const std::vector<int>& connection) {
  Graph g(table.size());
  for (int s : connection) {
    if (s == 0) fail(Err::InvalidCayleySet, "connection set contains the identity");
    if (std::find(connection.begin(), connection.end(), table.neg(s)) == connection.end())
      fail(Err::InvalidCayleySet, "connection set is not inverse-closed");
  }
  for (int v = 0; v < table.size(); ++v)
    for (int s : connection) {
      const int u = table.add(v, s);
      if (v < u) g.add_edge(v, u);
    }
  return g;
}

AbelianParams make_abelian_params(std::int64_t p, std::int64_t q, std::int64_t d2,
                                  std::int64_t d1, std::int64_t d) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    fail(Err::InvalidParams, "p and q must be distinct primes");
  if (!base_conditions_hold(p, q, d2, d1, d))
    fail(Err::InvalidParams, "conditions on (d2, d1, d) violated");
  if (!parity_conditions_hold(p, q, d2, d1, d))
    fail(Err::InvalidParams, "parity conditions violated (H must contain inversion)");
  if (!contains_inversion(p, q, d2, d1, d))
    fail(Err::InvalidParams, "H(d2,d1,d) does not contain the inversion");
  return AbelianParams{p, q, d2, d1, d};
}

std::vector<AbelianParams> valid_params(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    fail(Err::InvalidParams, "p and q must be distinct primes");
  std::vector<AbelianParams> out;
  for (std::int64_t d2 = 1; d2 <= q - 1; ++d2) {
    if ((q - 1) % d2 != 0) continue;
    for (std::int64_t d1 = 1; d1 <= p - 1; ++d1) {
      if ((p - 1) % d1 != 0) continue;
      for (std::int64_t d = 0; d < d1; ++d) {
        if (!base_conditions_hold(p, q, d2, d1, d)) continue;
        if (!parity_conditions_hold(p, q, d2, d1, d)) continue;
        if (!contains_inversion(p, q, d2, d1, d)) continue;
        out.push_back(AbelianParams{p, q, d2, d1, d});
      }
    }
  }
  return out;  // loop order is already lexicographic in (d2, d1, d)
}

std::pair<UnitPair, UnitPair> subgroup_H_abelian(const AbelianParams& params) {
  const auto [p, q, d2, d1, d] = params;
  make_abelian_params(p, q, d2, d1, d);
  const std::int64_t x = smallest_primitive_root_mod(p, p - 1);
  const std::int64_t y = smallest_primitive_root_mod(q, q - 1);
  return {{mod_pow(x, d, p), mod_pow(y, d2, q)}, {mod_pow(x, d1, p), 1 % q}};
}

std::vector<UnitPair> subgroup_H_elements(const AbelianParams& params) {
  make_abelian_params(params.p, params.q, params.d2, params.d1, params.d);
  return subgroup_elements_raw(params.p, params.q, params.d2, params.d1, params.d);
}

Graph gamma_abelian(const AbelianParams& params) {
  const std::int64_t p = params.p, q = params.q;
  const AbelianGroupTable table = AbelianGroupTable::zp_zq(p, q);
  // S = (1,1)^H u (-1,-1)^H; the orbits under the multiplicative action are
  // the element sets H and (-1,-1)H inside Z_p x Z_q
  std::set<int> S;
  for (const auto& [a, b] : subgroup_H_elements(params)) {
    const int s = static_cast<int>(a * q + b);
    S.insert(s);
    S.insert(table.neg(s));
  }
  return cayley_graph_abelian(table, {S.begin(), S.end()});
}

AbelianParams reparametrize(const AbelianParams& params) {
  const auto [p, q, d2, d1, d] = params;
  make_abelian_params(p, q, d2, d1, d);
  std::int64_t c2, c1, c;
  if (d == 0) {
    c1 = d2;
    c2 = d1;
    c = 0;
  } else {
    c2 = std::gcd(d, d1);
    c1 = (d1 * d2) / c2;
    c = c1 / std::gcd(c1, (p - 1) / c2);
  }
  return make_abelian_params(q, p, c2, c1, c);
}

AbelianParams qdividesl_params(std::int64_t p, std::int64_t q, std::int64_t ell) {
  if (!is_prime(p) || !is_prime(q) || q < 3 || (p - 1) % q != 0)
    fail(Err::BadParameters, "need an odd prime q dividing p-1");
  if (ell <= 1 || ell >= p - 1 || (p - 1) % ell != 0 || ell % q != 0)
    fail(Err::BadParameters, "need q | ell and 1 < ell < p-1 with ell | p-1");
  const std::int64_t d2 = (q - 1) / 2;
  const std::int64_t d1 = (p - 1) / ell;
  const std::int64_t d = (ell % 2 == 0) ? 0 : (p - 1) / (2 * ell);
  return make_abelian_params(p, q, d2, d1, d);
}

Graph gamma_prime(std::int64_t p, std::int64_t ell) {
  if (!is_prime(p)) fail(Err::BadParameters, "p must be prime");
  if (p == 2) {
    if (ell != 1) fail(Err::BadParameters, "p = 2 requires ell = 1");
    return complete_graph(2);
  }
  if (ell < 1 || (p - 1) % ell != 0 || ell % 2 != 0)
    fail(Err::BadParameters, "ell must be an even divisor of p-1");
  const std::int64_t m = primitive_root(p).value;
  const std::int64_t w = mod_pow(m, (p - 1) / ell, p);
  std::set<int> S;
  std::int64_t acc = 1;
  for (std::int64_t k = 0; k < ell; ++k) {
    S.insert(static_cast<int>(acc));
    S.insert(static_cast<int>(mod_reduce(-acc, p)));
    acc = mod_mul(acc, w, p);
  }
  return cayley_graph_abelian(AbelianGroupTable::zp(p), {S.begin(), S.end()});
}

Graph gamma_prime_square(std::int64_t p, std::int64_t ell, PrimeSquareCase which,
                         std::optional<std::array<std::int64_t, 3>> diag_params) {
  if (!is_prime(p) || p == 2) fail(Err::BadParameters, "p must be an odd prime");
  switch (which) {
    case PrimeSquareCase::Lex:
      return lex_product(gamma_prime(p, ell), empty_graph(static_cast<int>(p)));
    case PrimeSquareCase::Units: {
      if (ell < 1 || (p - 1) % ell != 0 || ell % 2 != 0)
        fail(Err::BadParameters, "ell must be an even divisor of p-1");
      const std::int64_t n = p * p;
      const std::int64_t units = p * (p - 1);
      const std::int64_t g0 = smallest_primitive_root_mod(n, units);
      // unique subgroup of Z_{p^2}^* of order ell
      const std::int64_t w = mod_pow(g0, units / ell, n);
      std::set<int> S;
      std::int64_t acc = 1;
      for (std::int64_t k = 0; k < ell; ++k) {
        S.insert(static_cast<int>(acc));
        acc = mod_mul(acc, w, n);
      }
      return cayley_graph_abelian(AbelianGroupTable::zp_squared(p), {S.begin(), S.end()});
    }
    case PrimeSquareCase::Diag: {
      if (!diag_params) fail(Err::BadParameters, "diagonal case requires (d2, d1, d)");
      const auto [d2, d1, d] = *diag_params;
      // same machinery as Z_p x Z_q with q := p
      if (!base_conditions_hold(p, p, d2, d1, d) || !parity_conditions_hold(p, p, d2, d1, d) ||
          !contains_inversion(p, p, d2, d1, d))
        fail(Err::InvalidParams, "conditions on (d2, d1, d) violated");
      const AbelianGroupTable table = AbelianGroupTable::zp_zp(p);
      std::set<int> S;
      for (const auto& [a, b] : subgroup_elements_raw(p, p, d2, d1, d)) {
        const int s = static_cast<int>(a * p + b);
        S.insert(s);
        S.insert(table.neg(s));
      }
      return cayley_graph_abelian(table, {S.begin(), S.end()});
    }
  }
  fail(Err::BadParameters, "unknown case");
}

}  // namespace netcg
