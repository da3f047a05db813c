#include "netcg/perm.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

namespace netcg {

Perm::Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
  if (!is_permutation(img)) fail(Err::BadParameters, "image table is not a permutation");
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

bool is_permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(Err::BadParameters, "permutation degree mismatch");
  Perm r;
  r.img.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) r.img[i] = b.img[a.img[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r;
  r.img.resize(p.degree());
  for (int i = 0; i < p.degree(); ++i) r.img[p.img[i]] = i;
  return r;
}

namespace {

int min_moved_point(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.img[i] != i) return i;
  return -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Stabilizer chain

struct PermGroup::Chain {
  struct Level {
    int base = -1;
    std::vector<Perm> gens;        // strong generators fixing earlier base points
    std::vector<int> orbit;        // BFS order from base
    std::vector<int> orbit_pos;    // point -> index in orbit, or -1
    std::vector<Perm> transversal; // transversal[k] maps base -> orbit[k]
  };
  int degree = 0;
  std::vector<Level> levels;

  void recompute_orbit(int li) {
    Level& L = levels[li];
    L.orbit.assign(1, L.base);
    L.orbit_pos.assign(degree, -1);
    L.orbit_pos[L.base] = 0;
    L.transversal.assign(1, Perm(degree));
    for (std::size_t head = 0; head < L.orbit.size(); ++head) {
      const int pt = L.orbit[head];
      for (const Perm& g : L.gens) {
        const int im = g.img[pt];
        if (L.orbit_pos[im] < 0) {
          L.orbit_pos[im] = static_cast<int>(L.orbit.size());
          L.orbit.push_back(im);
          L.transversal.push_back(L.transversal[head] * g);
        }
      }
    }
  }

  // Reduce g through levels from..end; returns the residue and the level at
  // which reduction stopped (levels.size() if it ran off the end).
  std::pair<Perm, int> strip(Perm g, int from) const {
    for (int li = from; li < static_cast<int>(levels.size()); ++li) {
      if (g.is_identity()) return {g, li};
      const Level& L = levels[li];
      const int im = g.img[L.base];
      const int pos = L.orbit_pos[im];
      if (pos < 0) return {g, li};
      g = g * inverse(L.transversal[pos]);
    }
    return {g, static_cast<int>(levels.size())};
  }

  void add_level(int base_point) {
    Level L;
    L.base = base_point;
    levels.push_back(std::move(L));
  }

  // Re-establishes the Schreier condition at level li, assuming it already
  // holds at every deeper level.  Levels are indexed afresh on every access:
  // add_level() may reallocate the vector.
  void schreier_sims(int li) {
    recompute_orbit(li);
    for (std::size_t oi = 0; oi < levels[li].orbit.size(); ++oi) {
      for (std::size_t gi = 0; gi < levels[li].gens.size(); ++gi) {
        const Perm x = levels[li].gens[gi];
        const int im = x.img[levels[li].orbit[oi]];
        const Perm schreier = levels[li].transversal[oi] * x *
                              inverse(levels[li].transversal[levels[li].orbit_pos[im]]);
        if (schreier.is_identity()) continue;
        auto [res, j] = strip(schreier, li + 1);
        if (res.is_identity()) continue;
        if (j == static_cast<int>(levels.size())) add_level(min_moved_point(res));
        for (int l = li + 1; l <= j; ++l) levels[l].gens.push_back(res);
        for (int l = j; l > li; --l) schreier_sims(l);
      }
    }
  }

  void build(const std::vector<Perm>& gens, int forced_first_base) {
    if (forced_first_base >= 0) add_level(forced_first_base);
    for (const Perm& g : gens) {
      if (g.is_identity()) continue;
      int li = 0;
      for (;; ++li) {
        if (li == static_cast<int>(levels.size())) add_level(min_moved_point(g));
        levels[li].gens.push_back(g);
        if (g.img[levels[li].base] != levels[li].base) break;
      }
    }
    for (int li = static_cast<int>(levels.size()) - 1; li >= 0; --li) schreier_sims(li);
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const Level& L : levels) {
      const std::uint64_t k = L.orbit.size();
      if (result > UINT64_MAX / k)
        fail(Err::GroupOrderOverflow, "group order exceeds 64 bits");
      result *= k;
    }
    return result;
  }

  bool contains(const Perm& g) const {
    auto [res, li] = strip(g, 0);
    (void)li;
    return res.is_identity();
  }
};

// ---------------------------------------------------------------------------

PermGroup::PermGroup() = default;

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_) {
    if (g.degree() != degree_) fail(Err::BadParameters, "generator degree mismatch");
  }
}

PermGroup::PermGroup(const PermGroup& other) : degree_(other.degree_), gens_(other.gens_) {
  std::lock_guard lk(other.chain_mu_);
  chain_ = other.chain_;
}

PermGroup& PermGroup::operator=(const PermGroup& other) {
  if (this == &other) return *this;
  std::scoped_lock lk(chain_mu_, other.chain_mu_);
  degree_ = other.degree_;
  gens_ = other.gens_;
  chain_ = other.chain_;
  return *this;
}

std::shared_ptr<const PermGroup::Chain> PermGroup::build_chain(int forced_first_base) const {
  auto c = std::make_shared<Chain>();
  c->degree = degree_;
  c->build(gens_, forced_first_base);
  return c;
}

const PermGroup::Chain& PermGroup::chain() const {
  std::lock_guard lk(chain_mu_);
  if (!chain_) chain_ = build_chain(-1);
  return *chain_;
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) fail(Err::OutOfRange, "point out of range");
  std::vector<int> reached{point};
  std::vector<char> seen(degree_, 0);
  seen[point] = 1;
  for (std::size_t head = 0; head < reached.size(); ++head) {
    for (const Perm& g : gens_) {
      const int im = g.img[reached[head]];
      if (!seen[im]) {
        seen[im] = 1;
        reached.push_back(im);
      }
    }
  }
  std::sort(reached.begin(), reached.end());
  return reached;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit(0).size()) == degree_;
}

std::uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return chain().contains(p);
}

PermGroup PermGroup::stabilizer(int point) const {
  if (point < 0 || point >= degree_) fail(Err::OutOfRange, "point out of range");
  auto c = build_chain(point);
  std::vector<Perm> stab_gens;
  if (c->levels.size() > 1) stab_gens = c->levels[1].gens;
  // dedup; the chain may record a residue at several levels
  std::sort(stab_gens.begin(), stab_gens.end(),
            [](const Perm& a, const Perm& b) { return a.img < b.img; });
  stab_gens.erase(std::unique(stab_gens.begin(), stab_gens.end()), stab_gens.end());
  return PermGroup(degree_, std::move(stab_gens));
}

std::vector<int> PermGroup::minimal_block(int a, int b) const {
  if (a < 0 || a >= degree_ || b < 0 || b >= degree_)
    fail(Err::OutOfRange, "point out of range");
  if (a == b) fail(Err::BadParameters, "minimal_block requires distinct points");
  if (!is_transitive()) fail(Err::NotTransitive, "minimal_block requires a transitive group");

  std::vector<int> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<std::pair<int, int>> queue{{a, b}};
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    const int rx = find(x), ry = find(y);
    if (rx == ry) continue;
    parent[ry] = rx;
    for (const Perm& g : gens_) queue.emplace_back(g.img[x], g.img[y]);
  }

  std::vector<int> block;
  const int ra = find(a);
  for (int v = 0; v < degree_; ++v)
    if (find(v) == ra) block.push_back(v);
  return block;
}

bool PermGroup::is_primitive() const {
  if (degree_ < 2) return false;
  if (!is_transitive()) return false;
  for (int b = 1; b < degree_; ++b) {
    if (static_cast<int>(minimal_block(0, b).size()) != degree_) return false;
  }
  return true;
}

bool is_block(const PermGroup& g, const std::vector<int>& candidate) {
  std::vector<int> start = candidate;
  std::sort(start.begin(), start.end());
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> queue{start};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    for (const Perm& p : g.generators()) {
      std::vector<int> im(cur.size());
      for (std::size_t k = 0; k < cur.size(); ++k) im[k] = p.img[cur[k]];
      std::sort(im.begin(), im.end());
      std::vector<int> meet;
      std::set_intersection(im.begin(), im.end(), start.begin(), start.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && im != start) return false;
      if (seen.insert(im).second) queue.push_back(std::move(im));
    }
  }
  return true;
}

}  // namespace netcg
