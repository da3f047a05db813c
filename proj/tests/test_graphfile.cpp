#include "doctest.h"
#include "netcg/graphfile.hpp"
#include "netcg/netcayley.hpp"

using namespace netcg;

TEST_CASE("serialize and parse round-trip") {
  GraphFile file;
  file.graph = construction2(make_gamma_params(7, 3, 2, 1));
  file.set_meta("construction", "2");
  file.set_meta("p", "7");
  file.set_meta("q", "3");
  file.set_meta("ell", "2");
  file.set_meta("i", "1");

  const std::string text = serialize_netcg(file);
  CHECK(text.rfind("NETCG v1 21 42\n", 0) == 0);

  const GraphFile back = parse_netcg(text);
  CHECK(back.graph == file.graph);
  CHECK(back.meta("p") == "7");
  CHECK(back.metadata == file.metadata);

  // byte stability
  CHECK(serialize_netcg(back) == text);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_netcg(""), Error);
  CHECK_THROWS_AS(parse_netcg("GRAPH v1 3 0\n"), Error);
  CHECK_THROWS_AS(parse_netcg("NETCG v1 3 1\n"), Error);            // missing edge
  CHECK_THROWS_AS(parse_netcg("NETCG v1 3 1\n0 3\n"), Error);       // vertex range
  CHECK_THROWS_AS(parse_netcg("NETCG v1 3 1\n1 1\n"), Error);       // loop
  CHECK_THROWS_AS(parse_netcg("NETCG v1 3 2\n0 1\n"), Error);       // count mismatch
  CHECK_NOTHROW(parse_netcg("NETCG v1 3 1\n# k=v\n0 1\n"));
}

TEST_CASE("dot output is syntactically plausible") {
  const std::string dot = serialize_dot(cycle_graph(3));
  CHECK(dot.rfind("graph netcg {", 0) == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("}") != std::string::npos);
}
