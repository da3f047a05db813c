// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion pins its expected values and its runtime limit.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netcg/autiso.hpp"
#include "netcg/classify.hpp"
#include "netcg/geometry.hpp"
#include "netcg/houlis.hpp"
#include "netcg/modarith.hpp"
#include "netcg/netcayley.hpp"
#include "support/oracles.hpp"

using namespace netcg;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) {
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome out;
  const Graph g = construction2(make_gamma_params(7, 3, 2, 1));
  out.require(g.vertex_count() == 21, "vertex count != 21");
  out.require(g.edge_count() == 42, "edge count != 42");
  out.require(connected_components(g).size() == 1, "not connected");
  const PermGroup aut = automorphism_group(g);
  out.require(aut.order() == 336, "|Aut| != 336");
  out.require(aut.is_primitive(), "not vertex-primitive");
  out.require(are_isomorphic(g, flag_graph(projective_plane(2))),
              "not isomorphic to the Fano flag graph");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const Graph g14 = construction2(make_gamma_params(7, 2, 3, 1));
  out.require(are_isomorphic(g14, incidence_graph(projective_plane(2))),
              "Gamma(14,3,1) != incidence graph of PG(2,2)");
  out.require(automorphism_group(g14).order() == 336, "|Aut Gamma(14,3,1)| != 336");

  const Graph g22 = construction2(make_gamma_params(11, 2, 5, 1));
  out.require(are_isomorphic(g22, incidence_graph(biplane_11_5_2())),
              "Gamma(22,5,1) != incidence graph of the biplane");
  const std::uint64_t order22 = automorphism_group(g22).order();
  std::ostringstream os;
  os << "|Aut Gamma(22,5,1)| = " << order22;
  if (order22 == 1320)
    os << " = |PGL(2,11)|";
  else if (order22 == 2640)
    os << " = |PGL(2,11).Z2|";
  else
    os << " (matches neither stated order)";
  out.note(os.str());
  return out;
}

Outcome criterion3() {
  Outcome out;
  const Graph g = construction2(make_gamma_params(73, 2, 9, 1));
  out.require(are_isomorphic(g, incidence_graph(projective_plane(8))),
              "Gamma(146,9,1) != incidence graph of PG(2,8)");
  return out;
}

Outcome criterion4() {
  Outcome out;
  int graphs = 0;
  for (std::int64_t p = 3; p <= 199; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t q = 2; q < p; ++q) {
      if (!is_prime(q) || (p - 1) % q != 0 || p * q > 200) continue;
      for (std::int64_t ell = 2; ell < p - 1; ++ell) {
        if ((p - 1) % ell != 0) continue;
        const std::int64_t i_max = q == 2 ? 1 : (q - 1) / 2;
        for (std::int64_t i = 1; i <= i_max; ++i) {
          const GammaParams params = make_gamma_params(p, q, ell, i);
          if (is_exceptional(params)) continue;
          ++graphs;
          const std::uint64_t expected =
              (q == 2 || ell % q != 0)
                  ? static_cast<std::uint64_t>(p * q * ell)
                  : static_cast<std::uint64_t>(2 * p * q * ell);
          const std::uint64_t got = automorphism_group(construction2(params)).order();
          if (got != expected) {
            std::ostringstream os;
            os << "mismatch at (" << p << "," << q << "," << ell << "," << i << "): got "
               << got << ", expected " << expected;
            out.require(false, os.str());
          }
        }
      }
    }
  }
  out.note(std::to_string(graphs) + " graphs checked");
  return out;
}

Outcome criterion5() {
  Outcome out;
  // classes over ALL i in 1..q-1, counted by exact canonical edge lists
  auto classes_over_i = [](std::int64_t p, std::int64_t q, std::int64_t ell) {
    const GroupTable G = GroupTable::frobenius(p, q);
    const CyclicSubgroupH H = subgroup_H(p, q, ell, 1);
    const AffineElement gens[] = {H.generator};
    std::set<std::vector<std::pair<int, int>>> classes;
    for (std::int64_t i = 1; i < q; ++i) {
      const Graph g = gamma_GHg(G, gens, aff_pow(G.z(), i));
      classes.insert(canonical_form(g).canonical_edges);
    }
    return classes.size();
  };
  out.require(classes_over_i(11, 5, 2) == 2, "(11,5,2) must give exactly 2 classes");
  out.require(classes_over_i(13, 3, 3) == 1, "(13,3,3) must give exactly 1 class");
  out.require(classes_over_i(13, 3, 6) == 1, "(13,3,6) must give exactly 1 class");
  return out;
}

Outcome criterion6() {
  Outcome out;
  struct Case {
    std::int64_t p, q, ell;
  };
  for (const Case& c : {Case{13, 3, 3}, Case{13, 3, 6}, Case{31, 5, 5}}) {
    const std::string tag =
        "(" + std::to_string(c.p) + "," + std::to_string(c.q) + "," + std::to_string(c.ell) + ")";
    const Graph frob = construction2(make_gamma_params(c.p, c.q, c.ell, 1));
    const Graph abel = gamma_abelian(qdividesl_params(c.p, c.q, c.ell));
    out.require(are_isomorphic(frob, abel), tag + ": construction2 != gamma_abelian");

    const auto L = regular_abelian_subgroup(make_gamma_params(c.p, c.q, c.ell, 1));
    out.require(L.has_value(), tag + ": regular abelian subgroup absent");
    if (L) {
      out.require(L->order() == static_cast<std::uint64_t>(c.p * c.q),
                  tag + ": wrong order");
      out.require(L->is_transitive(), tag + ": not transitive");
      out.require(L->stabilizer(0).order() == 1, tag + ": nontrivial point stabilizer");
      const auto& gens = L->generators();
      for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
          out.require(gens[a] * gens[b] == gens[b] * gens[a], tag + ": not abelian");
    }
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  const Graph g10 = construction2(make_gamma_params(5, 2, 4, 1));
  out.require(are_isomorphic(g10, direct_product(complete_graph(5), complete_graph(2))),
              "Gamma(10,4,1) != K_5 x K_2");
  out.require(automorphism_group(g10).order() == 240, "|Aut Gamma(10,4,1)| != 240");

  const Graph g21 = construction2(make_gamma_params(7, 3, 6, 1));
  out.require(are_isomorphic(g21, direct_product(complete_graph(7), cycle_graph(3))),
              "Gamma(21,6,1) != K_7 x C_3");
  out.require(automorphism_group(g21).order() == 30240, "|Aut Gamma(21,6,1)| != 30240");
  return out;
}

Outcome criterion8() {
  Outcome out;
  const GroupTable G = GroupTable::frobenius(7, 3);
  std::vector<std::pair<int, int>> pairs;
  for (int s = 1; s < G.size(); ++s)
    if (s <= G.inv(s)) pairs.emplace_back(s, G.inv(s));

  int checked = 0;
  auto check = [&](const std::vector<int>& pick) {
    std::vector<int> members;
    for (int k : pick) {
      members.push_back(pairs[k].first);
      members.push_back(pairs[k].second);
    }
    // is_normal_edge_transitive throws InternalInconsistency on disagreement
    is_normal_edge_transitive(G, make_cayley_set(G, members));
    ++checked;
  };
  const int P = static_cast<int>(pairs.size());
  try {
    for (int a = 0; a < P; ++a) {
      check({a});
      for (int b = a + 1; b < P; ++b) {
        check({a, b});
        for (int c = b + 1; c < P; ++c) check({a, b, c});
      }
    }
  } catch (const Error& e) {
    out.require(false, std::string("criteria disagree: ") + e.what());
  }
  out.require(checked == 175, "expected 175 connection sets, saw " + std::to_string(checked));
  out.note(std::to_string(checked) + " connection sets");
  return out;
}

Outcome criterion9() {
  Outcome out;
  int count = 0;
  for (std::int64_t p = 3; p <= 31; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t q = 2; q < p; ++q) {
      if (!is_prime(q) || (p - 1) % q != 0) continue;
      ++count;
      if (automorphism_group_of_G(p, q).order() !=
          static_cast<std::uint64_t>(p * (p - 1))) {
        out.require(false, "wrong |Aut G_" + std::to_string(p * q) + "|");
      }
    }
  }
  out.note(std::to_string(count) + " groups checked");
  return out;
}

Outcome criterion10() {
  Outcome out;
  int count = 0;
  for (std::int64_t p = 2; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t q = 2; q <= 50; ++q) {
      if (!is_prime(q) || p == q || p * q > 100) continue;
      for (const AbelianParams& params : valid_params(p, q)) {
        ++count;
        const Graph g = gamma_abelian(params);
        const int expected =
            static_cast<int>((p - 1) * (q - 1) / (params.d1 * params.d2));
        if (!g.is_regular() || g.valency() != expected) {
          std::ostringstream os;
          os << "valency mismatch at (" << p << "," << q << "," << params.d2 << ","
             << params.d1 << "," << params.d << ")";
          out.require(false, os.str());
        }
      }
    }
  }
  out.note(std::to_string(count) + " parameter sets checked");
  return out;
}

Outcome criterion11() {
  Outcome out;

  // (a) automorphism order vs brute force on every suite graph with <= 10 vertices
  std::vector<Graph> small = {
      complete_graph(4), cycle_graph(5), path_graph(5), empty_graph(3), cycle_graph(6),
      complete_graph(1), path_graph(2),
      lex_product(complete_graph(2), empty_graph(3)),
      direct_product(complete_graph(5), complete_graph(2)),
      gamma_GHg(GroupTable::frobenius(3, 2), {}, GroupTable::frobenius(3, 2).z()),
      construction2(make_gamma_params(3, 2, 2, 1)),
      gamma_prime(5, 4),
  };
  {
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
      petersen.add_edge(i, (i + 1) % 5);
      petersen.add_edge(i, i + 5);
      petersen.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    small.push_back(petersen);
  }
  for (const Graph& g : small) {
    if (automorphism_group(g).order() != testing::brute_force_aut_order(g))
      out.require(false, "aut order != brute force on an n<=10 graph");
  }

  // (b) Schreier-Sims order vs naive enumeration on groups of order <= 5000
  const GroupTable G21 = GroupTable::frobenius(7, 3);
  std::vector<PermGroup> groups = {
      automorphism_group_of_G(7, 3),
      automorphism_group_of_G(11, 5),
      automorphism_group_of_G(13, 2),
      PermGroup(21, {right_mult_perm(G21, 1), right_mult_perm(G21, 7)}),
      automorphism_group(construction2(make_gamma_params(7, 3, 2, 1))),   // order 336
      automorphism_group(construction2(make_gamma_params(11, 5, 2, 1))),  // order 110
      automorphism_group(cycle_graph(12)),
      automorphism_group(complete_graph(6)),
  };
  for (const PermGroup& g : groups) {
    const auto everyone = testing::enumerate_group(g.degree(), g.generators());
    if (g.order() > 5000) out.require(false, "oracle group exceeds order 5000");
    if (g.order() != everyone.size())
      out.require(false, "chain order != enumeration for a group of order " +
                             std::to_string(everyone.size()));
  }

  // (c) canonical form stable under 100 random relabelings per acceptance graph
  std::mt19937 rng(20240817);
  const std::vector<Graph> acceptance_graphs = {
      construction2(make_gamma_params(7, 3, 2, 1)),
      construction2(make_gamma_params(7, 2, 3, 1)),
      construction2(make_gamma_params(11, 2, 5, 1)),
      construction2(make_gamma_params(73, 2, 9, 1)),
      construction2(make_gamma_params(5, 2, 4, 1)),
      construction2(make_gamma_params(7, 3, 6, 1)),
      construction2(make_gamma_params(11, 5, 2, 1)),
      gamma_abelian(qdividesl_params(13, 3, 3)),
  };
  for (const Graph& g : acceptance_graphs) {
    const CanonicalForm base = canonical_form(g);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph shuffled = relabel(g, random_perm(g.vertex_count(), rng));
      if (!(canonical_form(shuffled) == base)) {
        out.require(false, "canonical form changed under relabeling");
        break;
      }
    }
  }
  return out;
}

struct Criterion {
  int number;
  const char* description;
  Outcome (*run)();
  double limit_seconds;  // pinned from the stated runtime budgets
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Gamma(21,2,1): sizes, connectivity, primitivity, |Aut|=336, Fano flag graph",
       criterion1, 1.0},
      {2, "Gamma(14,3,1) and Gamma(22,5,1) incidence-graph identifications", criterion2, 5.0},
      {3, "Gamma(146,9,1) is the incidence graph of PG(2,8)", criterion3, 60.0},
      {4, "order formula sweep over pq <= 200", criterion4, 600.0},
      {5, "isomorphism class counts for (11,5,2), (13,3,3), (13,3,6)", criterion5, 600.0},
      {6, "abelian bridge and regular abelian subgroups", criterion6, 600.0},
      {7, "ell = p-1 direct products with exact orders", criterion7, 30.0},
      {8, "NET criterion equivalence, exhaustive over G_21", criterion8, 300.0},
      {9, "|Aut G_pq| = p(p-1) for p <= 31", criterion9, 600.0},
      {10, "abelian valency formula for pq <= 100", criterion10, 600.0},
      {11, "engine oracles: brute force, enumeration, relabeling stability", criterion11, 600.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit_seconds) {
      out.pass = false;
      out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!out.pass) ++failures;
    std::printf("%s criterion %2d: %s [%.2fs%s]%s%s\n", out.pass ? "PASS" : "FAIL", c.number,
                c.description, secs, secs > c.limit_seconds ? " OVER BUDGET" : "",
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
