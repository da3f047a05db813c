#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "netcg/error.hpp"

namespace netcg {

// A permutation of [0, n) given by its image table.  Products compose
// left-to-right: (a * b) applies a first, then b, matching the affine
// composition convention used everywhere in this library.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(int n);  // identity
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img.size()); }
  int operator[](int x) const { return img[x]; }
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
};

Perm operator*(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_permutation(const std::vector<int>& images);

// Generator-based permutation group with a deterministic Schreier-Sims
// stabilizer chain, built lazily.  Base points are chosen as the smallest
// moved point at each level, so orders and membership answers are
// reproducible across runs.  The chain build is guarded so concurrent
// readers observe either no chain or a complete one.
class PermGroup {
 public:
  PermGroup();  // trivial group of degree 0
  PermGroup(int degree, std::vector<Perm> generators);

  PermGroup(const PermGroup& other);
  PermGroup& operator=(const PermGroup& other);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::vector<int> orbit(int point) const;  // sorted ascending
  bool is_transitive() const;

  std::uint64_t order() const;  // throws GroupOrderOverflow past 2^64
  bool contains(const Perm& p) const;

  // Point stabilizer, read off a chain whose first base point is `point`.
  PermGroup stabilizer(int point) const;

  // Smallest block of imprimitivity containing {a, b}; the whole point set
  // iff no proper block contains both.  Requires a transitive group.
  std::vector<int> minimal_block(int a, int b) const;

  // True iff transitive and every minimal_block(0, b) is the full set.
  bool is_primitive() const;

 private:
  struct Chain;
  const Chain& chain() const;
  std::shared_ptr<const Chain> build_chain(int forced_first_base) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<const Chain> chain_;
  mutable std::mutex chain_mu_;
};

// Orbit of a set of points under generators, as sorted vertex sets; used for
// block-closure checks.
bool is_block(const PermGroup& g, const std::vector<int>& candidate);

}  // namespace netcg
