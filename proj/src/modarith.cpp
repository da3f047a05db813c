#include "netcg/modarith.hpp"

#include <string>

namespace netcg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t p) {
  std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return mod_reduce(a * b, p);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  std::int64_t acc = mod_reduce(base, p);
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, acc, p);
    acc = mod_mul(acc, acc, p);
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) fail(Err::ZeroInverse, "no inverse of 0 mod " + std::to_string(p));
  return mod_pow(a, p - 2, p);  // Fermat; p is prime by contract
}

Residue::Residue(std::int64_t v, std::int64_t p) : value(0), modulus(p) {
  if (!is_prime(p)) fail(Err::NotPrime, "modulus " + std::to_string(p) + " is not prime");
  value = mod_reduce(v, p);
}

Residue operator*(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus)
    fail(Err::ModulusMismatch, "residues over different moduli");
  return Residue(mod_mul(a.value, b.value, a.modulus), a.modulus);
}

Residue operator+(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus)
    fail(Err::ModulusMismatch, "residues over different moduli");
  return Residue(mod_reduce(a.value + b.value, a.modulus), a.modulus);
}

Residue operator-(const Residue& a) { return Residue(mod_reduce(-a.value, a.modulus), a.modulus); }

Residue mod_inv(const Residue& a) {
  if (a.value == 0)
    fail(Err::ZeroInverse, "no inverse of 0 mod " + std::to_string(a.modulus));
  return Residue(mod_inverse(a.value, a.modulus), a.modulus);
}

std::int64_t element_order(const Residue& a) {
  if (a.value == 0) fail(Err::ZeroInput, "0 has no multiplicative order");
  const std::int64_t n = a.modulus - 1;  // order divides p-1
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (mod_pow(a.value, d, a.modulus) == 1) return d;
  }
  fail(Err::InternalInconsistency, "unit with no order dividing p-1");
}

Residue primitive_root(std::int64_t p) {
  if (!is_prime(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
  if (p < 3) fail(Err::BadParameters, "primitive_root requires an odd prime");
  for (std::int64_t m = 2; m < p; ++m) {
    if (element_order(Residue(m, p)) == p - 1) return Residue(m, p);
  }
  fail(Err::InternalInconsistency, "no primitive root found");
}

}  // namespace netcg
