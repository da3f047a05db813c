#pragma once

#include <cstdint>

#include "netcg/error.hpp"

namespace netcg {

// Exact arithmetic over Z_p for a prime modulus. Desk scale: p < 10^6, so
// products fit comfortably in 64 bits and primality is checked by trial
// division.

bool is_prime(std::int64_t n);

// One element of the field Z_p. The modulus is validated once at
// construction; everything downstream may assume it is prime.
struct Residue {
  std::int64_t value;    // in [0, p)
  std::int64_t modulus;  // prime

  Residue(std::int64_t v, std::int64_t p);

  friend bool operator==(const Residue&, const Residue&) = default;
};

Residue operator*(const Residue& a, const Residue& b);
Residue operator+(const Residue& a, const Residue& b);
Residue operator-(const Residue& a);

// Multiplicative inverse of a nonzero residue.  Throws ZeroInverse on 0.
Residue mod_inv(const Residue& a);

// Least k >= 1 with a^k = 1; divides p-1.  Throws ZeroInput on 0.
std::int64_t element_order(const Residue& a);

// Smallest positive integer generating Z_p^*, for odd prime p.  Fixing the
// smallest makes every derived indexing reproducible across runs.
Residue primitive_root(std::int64_t p);

// Low-level helpers on raw int64 values; the modulus is assumed valid.
std::int64_t mod_reduce(std::int64_t x, std::int64_t p);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace netcg
