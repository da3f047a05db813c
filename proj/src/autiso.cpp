#include "netcg/autiso.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <numeric>

namespace netcg {

namespace {

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// Ordered partition of the vertex set: cells are contiguous runs of `order`.
struct Coloring {
  std::vector<int> order;       // vertices in position order
  std::vector<int> pos;         // pos[v] = position of v
  std::vector<int> cell;        // cell[p] = start position of the cell containing p
  std::vector<int> len;         // len[s] = cell length, valid at cell starts
  int cells = 0;

  static Coloring unit(int n) {
    Coloring c;
    c.order.resize(n);
    std::iota(c.order.begin(), c.order.end(), 0);
    c.pos = c.order;
    c.cell.assign(n, 0);
    c.len.assign(n, 0);
    if (n > 0) c.len[0] = n;
    c.cells = n > 0 ? 1 : 0;
    return c;
  }

  bool discrete() const { return cells == static_cast<int>(order.size()); }

  // First largest non-singleton cell, by start position.  Large target
  // cells keep the search depth close to the length of a stabilizer chain,
  // so sibling subtrees stay automorphic images of each other; with small
  // cells the incidence graph of PG(2,8) needs twice the depth and its
  // sibling subtrees carry genuinely distinct certificates, which no amount
  // of pruning recovers.
  int target_cell() const {
    int best = -1, best_len = 1;
    for (int s = 0; s < static_cast<int>(order.size());) {
      const int L = len[s];
      if (L > best_len) {
        best = s;
        best_len = L;
      }
      s += L;
    }
    return best;
  }
};

struct NodeInv {
  std::uint64_t hash = 0;
  int cells = 0;

  friend auto operator<=>(const NodeInv&, const NodeInv&) = default;
};

using Cert = std::vector<std::pair<int, int>>;

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.vertex_count()), edges_(g.edges()) {
    adj_.resize(n_);
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
  }

  void run() {
    if (n_ == 0) return;
    Coloring root = Coloring::unit(n_);
    std::deque<std::vector<int>> splitters;
    std::vector<int> all = root.order;
    splitters.push_back(std::move(all));
    std::uint64_t h = 0;
    refine(root, splitters, h);
    const NodeInv root_inv{h, root.cells};
    std::vector<int> prefix;
    dfs(std::move(root), 0, root_inv, prefix, true, Cmp::Eq);
  }

  static constexpr int kNoJump = INT32_MAX;

  std::vector<Perm> autos;
  Perm best_leaf;   // position -> vertex (the leaf order)
  Cert best_cert;

 private:
  enum class Cmp { Lt, Eq, Gt };

  const Graph& g_;
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;

  bool have_first_ = false;
  std::vector<NodeInv> first_inv_;
  Cert first_cert_;
  Perm first_leaf_;
  std::vector<int> first_prefix_;  // individualized vertices along the first path

  bool have_best_leaf_ = false;
  std::vector<NodeInv> best_inv_;
  std::vector<int> best_prefix_;
  int version_ = 0;  // bumped when autos grows

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  }

  // Equitable refinement; consumes the splitter queue, updates h with
  // label-independent split events.
  void refine(Coloring& c, std::deque<std::vector<int>>& queue, std::uint64_t& h) {
    std::vector<int> cnt(n_, 0);
    std::vector<int> touched;
    std::vector<int> scratch;
    while (!queue.empty()) {
      std::vector<int> W = std::move(queue.front());
      queue.pop_front();
      touched.clear();
      for (int w : W)
        for (int u : adj_[w]) {
          if (cnt[u]++ == 0) {
            const int s = c.cell[c.pos[u]];
            touched.push_back(s);
          }
        }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int s : touched) {
        const int L = c.len[s];
        if (L == 1) {
          h = mix64(h, 0x51ull);
          h = mix64(h, static_cast<std::uint64_t>(s));
          h = mix64(h, static_cast<std::uint64_t>(cnt[c.order[s]]));
          continue;
        }
        scratch.assign(c.order.begin() + s, c.order.begin() + s + L);
        std::stable_sort(scratch.begin(), scratch.end(),
                         [&](int a, int b) { return cnt[a] < cnt[b]; });
        if (cnt[scratch.front()] == cnt[scratch.back()]) {
          h = mix64(h, 0x52ull);
          h = mix64(h, static_cast<std::uint64_t>(s));
          h = mix64(h, static_cast<std::uint64_t>(cnt[scratch.front()]));
          continue;  // uniform counts, no split
        }
        h = mix64(h, 0x53ull);
        h = mix64(h, static_cast<std::uint64_t>(s));
        int frag_begin = 0;
        for (int k = 0; k <= L; ++k) {
          if (k == L || (k > 0 && cnt[scratch[k]] != cnt[scratch[k - 1]])) {
            const int frag_len = k - frag_begin;
            const int frag_start = s + frag_begin;
            c.len[frag_start] = frag_len;
            for (int t = 0; t < frag_len; ++t) {
              const int v = scratch[frag_begin + t];
              c.order[frag_start + t] = v;
              c.pos[v] = frag_start + t;
              c.cell[frag_start + t] = frag_start;
            }
            h = mix64(h, static_cast<std::uint64_t>(cnt[scratch[frag_begin]]));
            h = mix64(h, static_cast<std::uint64_t>(frag_len));
            queue.emplace_back(scratch.begin() + frag_begin, scratch.begin() + k);
            if (frag_begin > 0) ++c.cells;
            frag_begin = k;
          }
        }
      }
      for (int w : W)
        for (int u : adj_[w]) cnt[u] = 0;
    }
  }

  Cert leaf_cert(const Coloring& c) const {
    Cert cert;
    cert.reserve(edges_.size());
    for (auto [u, v] : edges_) {
      int a = c.pos[u], b = c.pos[v];
      if (a > b) std::swap(a, b);
      cert.emplace_back(a, b);
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  // sigma maps from[k] -> to[k]; record it if it is a genuine automorphism.
  void record_automorphism(const Perm& from_leaf, const Perm& to_leaf) {
    std::vector<int> img(n_);
    for (int k = 0; k < n_; ++k) img[from_leaf.img[k]] = to_leaf.img[k];
    Perm sigma(std::move(img));
    if (sigma.is_identity()) return;
    for (auto [u, v] : edges_)
      if (!g_.has_edge(sigma[u], sigma[v])) return;  // not sound: discard
    for (const Perm& a : autos)
      if (a == sigma) return;
    autos.push_back(std::move(sigma));
    ++version_;
  }

  // Returns the depth to backjump to (kNoJump if none).  On a leaf
  // equivalent to the first or best leaf, the search resumes at the deepest
  // ancestor shared with that reference path: the rest of the abandoned
  // subtree is covered by the discovered automorphism.
  int handle_leaf(const Coloring& c, bool on_first, Cmp cmp, const std::vector<int>& prefix) {
    Perm leaf(c.order);  // position -> vertex
    Cert cert = leaf_cert(c);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = cert;
      first_leaf_ = leaf;
      first_prefix_ = prefix;
      best_cert = std::move(cert);
      best_leaf = std::move(leaf);
      best_prefix_ = prefix;
      have_best_leaf_ = true;
      return kNoJump;
    }
    int jump = kNoJump;
    if (on_first && cert == first_cert_) {
      record_automorphism(first_leaf_, leaf);
      jump = common_prefix(prefix, first_prefix_);
    }
    if (cmp == Cmp::Gt || !have_best_leaf_) {
      best_cert = std::move(cert);
      best_leaf = std::move(leaf);
      best_prefix_ = prefix;
      have_best_leaf_ = true;
      return kNoJump;
    }
    if (cmp == Cmp::Eq) {
      if (cert > best_cert) {
        best_cert = std::move(cert);
        best_leaf = std::move(leaf);
        best_prefix_ = prefix;
        return kNoJump;
      }
      if (cert == best_cert) {
        record_automorphism(best_leaf, leaf);
        const int via_best = common_prefix(prefix, best_prefix_);
        jump = jump == kNoJump ? via_best : std::max(jump, via_best);
      }
    }
    return jump;
  }

  int dfs(Coloring c, int depth, NodeInv inv, std::vector<int>& prefix, bool parent_on_first,
          Cmp parent_cmp) {
    bool on_first;
    Cmp cmp;
    if (!have_first_) {
      first_inv_.push_back(inv);
      best_inv_.push_back(inv);
      on_first = true;
      cmp = Cmp::Eq;
    } else {
      on_first = parent_on_first && depth < static_cast<int>(first_inv_.size()) &&
                 inv == first_inv_[depth];
      if (parent_cmp == Cmp::Lt) {
        cmp = Cmp::Lt;
      } else if (parent_cmp == Cmp::Gt) {
        best_inv_.push_back(inv);
        cmp = Cmp::Gt;
      } else if (depth < static_cast<int>(best_inv_.size())) {
        if (inv > best_inv_[depth]) {
          best_inv_.resize(depth);
          best_inv_.push_back(inv);
          have_best_leaf_ = false;
          cmp = Cmp::Gt;
        } else if (inv == best_inv_[depth]) {
          cmp = Cmp::Eq;
        } else {
          cmp = Cmp::Lt;
        }
      } else {  // equal through the best leaf's depth yet not discrete there
        best_inv_.resize(depth);
        best_inv_.push_back(inv);
        have_best_leaf_ = false;
        cmp = Cmp::Gt;
      }
      if (!on_first && cmp == Cmp::Lt) return kNoJump;
    }

    if (c.discrete()) return handle_leaf(c, on_first, cmp, prefix);

    const int target = c.target_cell();
    std::vector<int> candidates(c.order.begin() + target,
                                c.order.begin() + target + c.len[target]);
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> uf;
    int uf_version = -1;
    auto uf_find = [&](int x) {
      while (uf[x] != x) {
        uf[x] = uf[uf[x]];
        x = uf[x];
      }
      return x;
    };
    auto ensure_uf = [&]() {
      if (uf_version == version_) return;
      uf_version = version_;
      uf.resize(n_);
      std::iota(uf.begin(), uf.end(), 0);
      for (const Perm& a : autos) {
        bool fixes = true;
        for (int x : prefix)
          if (a.img[x] != x) {
            fixes = false;
            break;
          }
        if (!fixes) continue;
        for (int v = 0; v < n_; ++v) {
          int r1 = uf_find(v), r2 = uf_find(a.img[v]);
          if (r1 != r2) uf[r2] = r1;
        }
      }
    };

    std::vector<int> explored;
    for (int v : candidates) {
      if (!explored.empty()) {
        ensure_uf();
        bool skip = false;
        const int rv = uf_find(v);
        for (int u : explored)
          if (uf_find(u) == rv) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      Coloring child = c;
      // individualize v: split [v | rest] off its cell
      {
        const int s = child.cell[child.pos[v]];
        const int pv = child.pos[v];
        const int u0 = child.order[s];
        std::swap(child.order[s], child.order[pv]);
        child.pos[v] = s;
        child.pos[u0] = pv;
        const int L = child.len[s];
        child.len[s] = 1;
        child.len[s + 1] = L - 1;
        for (int t = s + 1; t < s + L; ++t) child.cell[t] = s + 1;
        ++child.cells;
      }
      std::deque<std::vector<int>> splitters;
      splitters.push_back({v});
      std::uint64_t h = mix64(0, static_cast<std::uint64_t>(target));
      refine(child, splitters, h);
      NodeInv child_inv{h, child.cells};
      prefix.push_back(v);
      // Gt means "extending the provisional best path"; once that path has
      // reached a leaf, later siblings compete against it by comparison.
      const Cmp pass_cmp = (cmp == Cmp::Gt && have_best_leaf_) ? Cmp::Eq : cmp;
      const int jump = dfs(std::move(child), depth + 1, child_inv, prefix, on_first, pass_cmp);
      prefix.pop_back();
      explored.push_back(v);
      if (jump < depth) return jump;  // backjump through this node
    }
    return kNoJump;
  }
};

std::uint64_t cert_hash(int n, const Cert& cert) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = mix64(h, static_cast<std::uint64_t>(n));
  for (auto [u, v] : cert) {
    h = mix64(h, static_cast<std::uint64_t>(u));
    h = mix64(h, static_cast<std::uint64_t>(v));
  }
  return h;
}

}  // namespace

std::string CanonicalForm::fingerprint_hex() const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(cert_hash(vertex_count, canonical_edges)));
  return std::string(buf);
}

PermGroup automorphism_group(const Graph& g) {
  if (g.vertex_count() == 0) return PermGroup(0, {});
  Search s(g);
  s.run();
  return PermGroup(g.vertex_count(), std::move(s.autos));
}

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm cf;
  cf.vertex_count = g.vertex_count();
  if (g.vertex_count() == 0) {
    cf.to_canonical = Perm(0);
    return cf;
  }
  Search s(g);
  s.run();
  // best_leaf maps position -> vertex; canonical label of v is its position
  cf.to_canonical = inverse(s.best_leaf);
  cf.canonical_edges = std::move(s.best_cert);
  return cf;
}

std::optional<Perm> isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (!(ca == cb)) return std::nullopt;
  Perm witness = ca.to_canonical * inverse(cb.to_canonical);
  for (auto [u, v] : a.edges()) {
    if (!b.has_edge(witness[u], witness[v]))
      fail(Err::InternalInconsistency, "canonical forms matched but witness fails");
  }
  return witness;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return isomorphism(a, b).has_value(); }

}  // namespace netcg
