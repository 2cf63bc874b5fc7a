#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "flatband/builtins.hpp"
#include "flatband/lattice.hpp"

using namespace flatband;

namespace {

QuotientGraph kagome() { return QuotientGraph::parse(builtin_graph_text("kagome")); }
QuotientGraph cycle() { return QuotientGraph::parse(builtin_graph_text("cycle")); }
QuotientGraph comb2() { return QuotientGraph::parse(builtin_graph_text("comb2")); }

}  // namespace

TEST_CASE("kagome parses with the documented shape") {
  QuotientGraph g = kagome();
  CHECK(g.dim() == 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges().size() == 6);
  for (int i = 0; i < 3; ++i) CHECK(g.degree(i) == 4);
  CHECK(g.vertex_labels()[0] == "w1");
}

TEST_CASE("cycle and comb2 degrees") {
  QuotientGraph c = cycle();
  CHECK(c.dim() == 1);
  CHECK(c.degree(0) == 2);  // edge (w1,w1,1) counts twice
  QuotientGraph k = comb2();
  CHECK(k.degree(0) == 4);
  CHECK(k.degree(1) == 1);
  CHECK(k.degree(2) == 1);
}

TEST_CASE("parse errors carry line and column") {
  SUBCASE("self-loop") {
    try {
      QuotientGraph::parse("dim 1\nvertices a\nedge a a 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
  }
  SUBCASE("unknown vertex label") {
    try {
      QuotientGraph::parse("dim 1\nvertices a\nedge a b 1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(e.column == 8);
    }
  }
  SUBCASE("duplicate edge, same orientation") {
    CHECK_THROWS_AS(QuotientGraph::parse("dim 1\nvertices a b\nedge a b 1\nedge a b 1\n"),
                    ParseError);
  }
  SUBCASE("duplicate edge, reverse orientation") {
    CHECK_THROWS_AS(QuotientGraph::parse("dim 1\nvertices a b\nedge a b 1\nedge b a -1\n"),
                    ParseError);
  }
  SUBCASE("offset dimension mismatch") {
    CHECK_THROWS_AS(QuotientGraph::parse("dim 2\nvertices a b\nedge a b 1\n"), ParseError);
  }
  SUBCASE("degree-0 vertex") {
    CHECK_THROWS_AS(QuotientGraph::parse("dim 1\nvertices a b\nedge a a 1\n"), ParseError);
  }
  SUBCASE("bad integer") {
    CHECK_THROWS_AS(QuotientGraph::parse("dim 1\nvertices a b\nedge a b x\n"), ParseError);
  }
  SUBCASE("comments and blank lines are fine") {
    QuotientGraph g = QuotientGraph::parse(
        "# a comment\n\ndim 1   # trailing comment\nvertices a b\nedge a b 0\nedge a b 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.degree(0) == 2);
  }
}

TEST_CASE("folner balls") {
  QuotientGraph g2 = kagome();
  CHECK(folner_ball(g2, 1).size() == 9);                          // (2*1+1)^2
  CHECK(cross_with_domain(g2, folner_ball(g2, 2)).size() == 75);  // 3*(2*2+1)^2
  QuotientGraph g1 = cycle();
  auto b0 = folner_ball(g1, 0);
  CHECK(b0.size() == 1);
  CHECK(b0.count(IntVec{0}) == 1);
}

TEST_CASE("thick boundary") {
  SUBCASE("cycle: boundary of [-j..j] at r=1 is the two endpoints") {
    QuotientGraph g = cycle();
    for (int j = 0; j <= 3; ++j) {
      auto f = cross_with_domain(g, folner_ball(g, j));
      auto b = thick_boundary(g, f, 1);
      REQUIRE(b.size() == 2);
      CHECK(b.count({IntVec{static_cast<int32_t>(j + 1)}, 0}) == 1);
      CHECK(b.count({IntVec{static_cast<int32_t>(-j - 1)}, 0}) == 1);
    }
  }
  SUBCASE("empty set has empty boundary") {
    CHECK(thick_boundary(kagome(), {}, 3).empty());
  }
  SUBCASE("disjointness, nesting, adjacency") {
    QuotientGraph g = kagome();
    auto f = cross_with_domain(g, folner_ball(g, 1));
    auto b1 = thick_boundary(g, f, 1);
    auto b2 = thick_boundary(g, f, 2);
    for (const auto& v : b1) {
      CHECK(f.count(v) == 0);
      CHECK(b2.count(v) == 1);
      // every element of the 1-boundary is adjacent to F
      bool adjacent = false;
      for (const auto& w : g.neighbors(v))
        if (f.count(w)) adjacent = true;
      CHECK(adjacent);
    }
    CHECK(b1.size() < b2.size());
  }
}

TEST_CASE("induced sections") {
  SUBCASE("cycle path of three cells") {
    QuotientGraph g = cycle();
    std::set<CellVertex> s = {{IntVec{0}, 0}, {IntVec{1}, 0}, {IntVec{2}, 0}};
    FiniteSection sec = induced_section(g, s);
    REQUIRE(sec.vertices.size() == 3);
    CHECK(sec.adjacency.size() == 2);
    CHECK(sec.degrees_internal == std::vector<int>{1, 2, 1});
    CHECK(sec.degrees_ambient == std::vector<int>{2, 2, 2});
  }
  SUBCASE("singleton has no internal edges") {
    QuotientGraph g = kagome();
    FiniteSection sec = induced_section(g, {{IntVec{0, 0}, 1}});
    CHECK(sec.adjacency.empty());
    CHECK(sec.degrees_internal == std::vector<int>{0});
    CHECK(sec.degrees_ambient == std::vector<int>{4});
  }
  SUBCASE("kagome F1 with 2-thick boundary saturates interior degrees") {
    QuotientGraph g = kagome();
    auto f = cross_with_domain(g, folner_ball(g, 1));
    auto s = f;
    for (const auto& v : thick_boundary(g, f, 2)) s.insert(v);
    FiniteSection sec = induced_section(g, s);
    for (size_t i = 0; i < sec.vertices.size(); ++i) {
      CHECK(sec.degrees_internal[i] <= sec.degrees_ambient[i]);
      if (f.count(sec.vertices[i]))
        CHECK(sec.degrees_internal[i] == sec.degrees_ambient[i]);
    }
  }
}

TEST_CASE("parser survives junk input with errors, not crashes") {
  std::vector<std::string> lines = {
      "dim",     "dim 0",     "dim -3",     "dim x",        "vertices",
      "edge",    "edge a",    "vertices 1 1", "edge a a",   "dimension 2",
      "##",      "dim 1 2",   "vertices a#b", "edge a b 999999999999999999",
  };
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::string doc;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) doc += lines[rng() % lines.size()] + "\n";
    try {
      QuotientGraph::parse(doc);
    } catch (const ParseError&) {
      // expected for essentially all of these
    }
  }
  CHECK(true);
}

TEST_CASE("translation invariance of sections") {
  QuotientGraph g = kagome();
  auto f = cross_with_domain(g, folner_ball(g, 1));
  FiniteSection sec = induced_section(g, f);
  IntVec h{5, -3};
  std::set<CellVertex> shifted_set;
  for (const auto& v : f) shifted_set.insert({ivec_add(v.cell, h), v.vertex});
  FiniteSection shifted = induced_section(g, shifted_set);
  // identical degree multisets
  auto d1 = sec.degrees_internal;
  auto d2 = shifted.degrees_internal;
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  CHECK(d1 == d2);
  // identical adjacency after translating the vertex labels
  REQUIRE(sec.vertices.size() == shifted.vertices.size());
  std::map<int, int> relabel;
  for (size_t i = 0; i < sec.vertices.size(); ++i) {
    CellVertex moved{ivec_add(sec.vertices[i].cell, h), sec.vertices[i].vertex};
    int idx = shifted.index_of(moved);
    REQUIRE(idx >= 0);
    relabel[static_cast<int>(i)] = idx;
  }
  std::set<std::pair<int, int>> a2(shifted.adjacency.begin(), shifted.adjacency.end());
  for (auto [a, b] : sec.adjacency) {
    int ra = relabel[a], rb = relabel[b];
    CHECK(a2.count({std::min(ra, rb), std::max(ra, rb)}) == 1);
  }
}
