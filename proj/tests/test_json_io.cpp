#include <string>

#include "doctest.h"
#include "ehrhart/datasets.hpp"
#include "ehrhart/json_io.hpp"
#include "helpers.hpp"

using namespace ehrhart;

#ifndef EHRHART_BUNDLED_DATA_DIR
#error "EHRHART_BUNDLED_DATA_DIR must be defined by the build"
#endif

namespace {
const std::string kDataDir = EHRHART_BUNDLED_DATA_DIR;
}

TEST_CASE("polytope JSON round trip") {
  Polytope p = theorem1_polytope();
  Polytope q = polytope_from_json(polytope_to_json(p));
  CHECK(q.ambient_dim() == p.ambient_dim());
  CHECK(q.generators() == p.generators());
}

TEST_CASE("big integers survive the string encoding") {
  std::string text = R"({"ambient_dim": 1, "points": [["123456789012345678901234567890"], [0]]})";
  Polytope p = polytope_from_json(text);
  Int big("123456789012345678901234567890");
  CHECK(p.generators()[0][0] == big);
  Polytope q = polytope_from_json(polytope_to_json(p));
  CHECK(q.generators() == p.generators());
}

TEST_CASE("digraph JSON round trip") {
  Digraph g = figure1_graph();
  Digraph h = digraph_from_json(digraph_to_json(g));
  CHECK(h.num_vertices() == g.num_vertices());
  CHECK(h.arcs() == g.arcs());
}

TEST_CASE("malformed polytope input throws FormatError") {
  CHECK_THROWS_AS(polytope_from_json("not json"), FormatError);
  CHECK_THROWS_AS(polytope_from_json("{}"), FormatError);
  CHECK_THROWS_AS(polytope_from_json(R"({"ambient_dim": 2})"), FormatError);
  CHECK_THROWS_AS(polytope_from_json(R"({"ambient_dim": 2, "points": []})"),
                  FormatError);
  // ragged rows
  CHECK_THROWS_AS(
      polytope_from_json(R"({"ambient_dim": 2, "points": [[0,0],[1]]})"),
      FormatError);
  // non-integer entries
  CHECK_THROWS_AS(
      polytope_from_json(R"({"ambient_dim": 1, "points": [[0.5]]})"),
      FormatError);
  CHECK_THROWS_AS(
      polytope_from_json(R"({"ambient_dim": 1, "points": [["abc"]]})"),
      FormatError);
}

TEST_CASE("malformed digraph input throws FormatError") {
  CHECK_THROWS_AS(digraph_from_json("[]"), FormatError);
  CHECK_THROWS_AS(digraph_from_json(R"({"n": 2})"), FormatError);
  CHECK_THROWS_AS(digraph_from_json(R"({"n": 2, "arcs": [[1,1]]})"),
                  FormatError);
  CHECK_THROWS_AS(digraph_from_json(R"({"n": 2, "arcs": [[0,1]]})"),
                  FormatError);
  CHECK_THROWS_AS(digraph_from_json(R"({"n": 2, "arcs": [[1,2,3]]})"),
                  FormatError);
}

TEST_CASE("bundled data files match the built-in datasets") {
  Polytope t1 = polytope_from_json(read_file(kDataDir + "/theorem1.json"));
  CHECK(t1.generators() == theorem1_polytope().generators());

  Polytope t2 = polytope_from_json(read_file(kDataDir + "/theorem2.json"));
  CHECK(t2.generators() == theorem2_polytope().generators());

  Digraph g = digraph_from_json(read_file(kDataDir + "/figure1.json"));
  CHECK(g.num_vertices() == figure1_graph().num_vertices());
  CHECK(g.arcs() == figure1_graph().arcs());
}

TEST_CASE("read_file on a missing path throws") {
  CHECK_THROWS(read_file(kDataDir + "/no-such-file.json"));
}
