#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netcg/graph.hpp"
#include "netcg/netcayley.hpp"

namespace netcg {

// One isomorphism class in the classification of connected normal
// edge-transitive Cayley graphs for G_pq.
struct ClassRow {
  enum class Kind { Construction1, EllPMinus1, Gamma };

  Kind kind = Kind::Gamma;
  GammaParams params{0, 0, 0, 0};       // meaningful for EllPMinus1 / Gamma
  std::vector<GammaParams> merged;      // parameter sets in the same class
  int vertex_count = 0;
  int valency = 0;
  bool connected = false;
  bool is_net = false;
  bool exceptional = false;             // one of the four special parameter sets
  std::optional<std::uint64_t> aut_order;        // absent when checked structurally
  std::optional<std::uint64_t> predicted_order;  // absent for exceptional rows
  bool primitive = false;
  std::string iso_class_id;
  std::string quotient;                 // T-coset quotient: "C<q>" or "K2"
  bool t_blocks_invariant = false;      // Aut generators preserve T-cosets
  bool structural_ok = true;            // product-isomorphism check, when used
  bool prediction_matched = true;       // exceptional rows are exempt

  std::string label() const;
};

// The four parameter sets whose automorphism groups break the pattern.
bool is_exceptional(const GammaParams& params);

// Expected |Aut Gamma(pq,ell,i)|; nullopt marks an exceptional set.
std::optional<std::uint64_t> predicted_aut_order(const GammaParams& params);

std::vector<ClassRow> classify(std::int64_t p, std::int64_t q,
                               std::int64_t max_size = 250);

struct Table1Entry {
  std::string name;
  std::string geometry;
  bool isomorphic = false;
  std::uint64_t aut_order = 0;
  bool primitive = false;
  std::string note;
  bool ok = false;
};

struct Table1Report {
  std::vector<Table1Entry> entries;
  bool only_primitive_is_flag_graph = false;
  bool all_ok = false;
};

// Rebuilds the four exceptional graphs next to their geometric doubles.  The
// corrupt hook flips one edge of the geometry graph so the failure path can
// be exercised.
Table1Report verify_table1(bool include_146, bool corrupt_geometry = false);

std::string report_kv(std::int64_t p, std::int64_t q, const std::vector<ClassRow>& rows);
std::string report_markdown(std::int64_t p, std::int64_t q,
                            const std::vector<ClassRow>& rows);

}  // namespace netcg
