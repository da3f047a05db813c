// netcg: construct, inspect, and classify normal edge-transitive Cayley
// graphs of order pq.
//
// Subcommands: construct, aut, classify, verify-table1, houlis.
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "netcg/autiso.hpp"
#include "netcg/classify.hpp"
#include "netcg/graphfile.hpp"
#include "netcg/houlis.hpp"
#include "netcg/netcayley.hpp"

namespace {

using namespace netcg;

int write_output(const std::string& text, const std::string& out_path, bool summary_to_stderr,
                 const std::string& summary) {
  if (out_path.empty()) {
    std::cout << text;
    if (summary_to_stderr && !summary.empty()) std::cerr << summary << "\n";
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 2;
    }
    os << text;
    if (!summary.empty()) std::cout << summary << "\n";
  }
  return 0;
}

std::string summarize(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " m=" << g.edge_count() << " valency=" << g.valency()
     << " connected=" << (connected_components(g).size() == 1 ? "true" : "false");
  return os.str();
}

int cmd_construct(std::int64_t p, std::int64_t q, std::optional<std::int64_t> ell,
                  std::optional<std::int64_t> i, bool use_construction1,
                  const std::string& abelian, const std::string& format,
                  const std::string& out_path) {
  GraphFile file;
  if (use_construction1) {
    file.graph = construction1(p, q);
    file.set_meta("construction", "1");
    file.set_meta("p", std::to_string(p));
    file.set_meta("q", std::to_string(q));
  } else if (!abelian.empty()) {
    std::int64_t d2, d1, d;
    char c1, c2;
    std::istringstream is(abelian);
    is >> d2 >> c1 >> d1 >> c2 >> d;
    if (!is || c1 != ',' || c2 != ',') {
      std::cerr << "--abelian expects d2,d1,d\n";
      return 2;
    }
    file.graph = gamma_abelian(make_abelian_params(p, q, d2, d1, d));
    file.set_meta("construction", "abelian");
    file.set_meta("p", std::to_string(p));
    file.set_meta("q", std::to_string(q));
    file.set_meta("d2", std::to_string(d2));
    file.set_meta("d1", std::to_string(d1));
    file.set_meta("d", std::to_string(d));
  } else {
    if (!ell || !i) {
      std::cerr << "construct needs --ell and --i (or --construction1 / --abelian)\n";
      return 2;
    }
    file.graph = construction2(make_gamma_params(p, q, *ell, *i));
    file.set_meta("construction", "2");
    file.set_meta("p", std::to_string(p));
    file.set_meta("q", std::to_string(q));
    file.set_meta("ell", std::to_string(*ell));
    file.set_meta("i", std::to_string(*i));
  }
  const std::string text =
      format == "dot" ? serialize_dot(file.graph) : serialize_netcg(file);
  return write_output(text, out_path, true, summarize(file.graph));
}

int cmd_aut(const std::string& in_path, bool blocks, bool primitive) {
  std::ifstream is(in_path, std::ios::binary);
  if (!is) {
    std::cerr << "cannot read " << in_path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << is.rdbuf();
  const GraphFile file = parse_netcg(buf.str());

  const PermGroup aut = automorphism_group(file.graph);
  std::cout << "order=" << aut.order() << " generators=" << aut.generators().size();
  if (primitive) std::cout << " primitive=" << (aut.is_primitive() ? "true" : "false");
  std::cout << "\n";
  if (blocks) {
    std::set<int> sizes;
    for (int b = 1; b < aut.degree(); ++b)
      sizes.insert(static_cast<int>(aut.minimal_block(0, b).size()));
    std::cout << "block_sizes=";
    bool first = true;
    for (int s : sizes) {
      if (!first) std::cout << ",";
      std::cout << s;
      first = false;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_classify(std::int64_t p, std::int64_t q, std::int64_t max_size,
                 const std::string& report, const std::string& out_path) {
  const auto rows = classify(p, q, max_size);
  const std::string text =
      report == "md" ? report_markdown(p, q, rows) : report_kv(p, q, rows);
  const int rc = write_output(text, out_path, false, "");
  if (rc != 0) return rc;
  for (const ClassRow& r : rows)
    if (!r.prediction_matched) return 1;
  return 0;
}

int cmd_verify_table1(bool include_146, bool corrupt) {
  const Table1Report rep = verify_table1(include_146, corrupt);
  for (const Table1Entry& e : rep.entries) {
    std::cout << e.name << " ~ " << e.geometry << ": isomorphic=" << (e.isomorphic ? "true" : "false")
              << " aut=" << e.aut_order << " primitive=" << (e.primitive ? "true" : "false");
    if (!e.note.empty()) std::cout << " note=\"" << e.note << "\"";
    std::cout << "\n";
  }
  std::cout << "unique_primitive_is_gamma_21_2_1="
            << (rep.only_primitive_is_flag_graph ? "true" : "false") << "\n";
  return rep.all_ok ? 0 : 1;
}

int cmd_houlis(std::int64_t p, std::int64_t q) {
  for (const AbelianParams& params : valid_params(p, q)) {
    const auto H = subgroup_H_elements(params);
    std::cout << "d2=" << params.d2 << " d1=" << params.d1 << " d=" << params.d
              << " order=" << H.size() << " valency="
              << (params.p - 1) * (params.q - 1) / (params.d1 * params.d2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal edge-transitive Cayley graphs of order pq"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a graph and write it out");
  std::int64_t p = 0, q = 0;
  std::optional<std::int64_t> ell, i;
  bool use_c1 = false;
  std::string abelian, format = "edges", out_path;
  construct->add_option("--p", p, "prime p")->required();
  construct->add_option("--q", q, "prime q")->required();
  construct->add_option("--ell", ell, "divisor of p-1, ell > 1");
  construct->add_option("--i", i, "1 <= i <= (q-1)/2, or 1 when q = 2");
  construct->add_flag("--construction1", use_c1, "the blow-up Gamma(pq)");
  construct->add_option("--abelian", abelian, "d2,d1,d for the Z_p x Z_q construction");
  construct->add_option("--format", format, "edges|dot")
      ->check(CLI::IsMember({"edges", "dot"}));
  construct->add_option("--out", out_path, "output path (stdout when absent)");

  auto* aut = app.add_subcommand("aut", "automorphism group of a graph file");
  std::string in_path;
  bool blocks = false, primitive = false;
  aut->add_option("--in", in_path, "NETCG v1 graph file")->required();
  aut->add_flag("--blocks", blocks, "print minimal block-system sizes");
  aut->add_flag("--primitive", primitive, "print the primitivity verdict");

  auto* cls = app.add_subcommand("classify", "classify all graphs for (p, q)");
  std::int64_t max_size = 250;
  std::string report = "kv", cls_out;
  cls->add_option("--p", p, "prime p")->required();
  cls->add_option("--q", q, "prime q")->required();
  cls->add_option("--max-size", max_size, "size budget for pq");
  cls->add_option("--report", report, "kv|md")->check(CLI::IsMember({"kv", "md"}));
  cls->add_option("--out", cls_out, "output path (stdout when absent)");

  auto* vt = app.add_subcommand("verify-table1", "check the exceptional graphs");
  bool include_146 = false, corrupt = false;
  vt->add_flag("--include-146", include_146, "also check Gamma(146,9,1) vs PG(2,8)");
  vt->add_flag("--corrupt-geometry", corrupt, "negative-control hook: break the model graph")
      ->group("");  // hidden

  auto* hl = app.add_subcommand("houlis", "enumerate abelian parameters for (p, q)");
  hl->add_option("--p", p, "prime p")->required();
  hl->add_option("--q", q, "prime q")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed())
      return cmd_construct(p, q, ell, i, use_c1, abelian, format, out_path);
    if (aut->parsed()) return cmd_aut(in_path, blocks, primitive);
    if (cls->parsed()) return cmd_classify(p, q, max_size, report, cls_out);
    if (vt->parsed()) return cmd_verify_table1(include_146, corrupt);
    if (hl->parsed()) return cmd_houlis(p, q);
  } catch (const netcg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
