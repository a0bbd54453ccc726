#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ehf/graph.hpp"
#include "ehf/io.hpp"
#include "ehf/rational.hpp"
#include "support/builders.hpp"

using namespace ehf;
using namespace support;

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 3) * Rat(3, 7) == Rat(1, 7));
  CHECK(Rat(1, 2) - Rat(1, 2) == Rat(0));
  CHECK(Rat(-1, -2) == Rat(1, 2));
  CHECK(Rat(1, -2) < Rat(0));
  CHECK(Rat(3, 7) / Rat(3, 7) == Rat(1));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(2, 3) > Rat(1, 2));
  CHECK(Rat(7, 2).str() == "7/2");
  CHECK(Rat(4, 2).str() == "2");
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS(make_graph(3, {{0, 3}}));
  CHECK_THROWS(make_graph(3, {{1, 1}}));
  Graph g = make_graph(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(!g.has_edge(1, 1));
}

TEST_CASE("induced subgraphs") {
  Graph c5 = cycle(5);
  auto whole = induced_subgraph(c5, {0, 1, 2, 3, 4});
  CHECK(whole.graph.edge_count() == 5);

  Graph k4 = clique(4);
  auto e = induced_subgraph(k4, {0, 1});
  CHECK(e.graph.n == 2);
  CHECK(e.graph.edge_count() == 1);

  auto outer = induced_subgraph(petersen(), {0, 1, 2, 3, 4});
  CHECK(outer.graph.n == 5);
  CHECK(outer.graph.edge_count() == 5);
  for (int i = 0; i < 5; i++) CHECK(outer.graph.degree(i) == 2);

  CHECK_THROWS(induced_subgraph(c5, {7}));
}

TEST_CASE("induced subgraph composes") {
  Graph p = petersen();
  VertexSet x = {0, 1, 2, 5, 6, 7};
  auto gx = induced_subgraph(p, x);
  VertexSet y_old = {0, 2, 5, 7};
  VertexSet y_new;
  for (int v : y_old) y_new.push_back(gx.new_of_old[v]);
  auto a = induced_subgraph(gx.graph, vs_sorted(y_new));
  auto b = induced_subgraph(p, y_old);
  CHECK(a.graph.n == b.graph.n);
  CHECK(a.graph.edges().size() == b.graph.edges().size());
}

TEST_CASE("neighborhoods") {
  Graph s = star(4);
  CHECK(neighborhood(s, {0}, false) == VertexSet{1, 2, 3, 4});
  Graph c6 = cycle(6);
  CHECK(neighborhood(c6, {0}, true) == VertexSet{0, 1, 5});
  CHECK(neighborhood(c6, {}, false).empty());
  CHECK(neighborhood(c6, {}, true).empty());
  VertexSet x = {0, 2};
  auto open = neighborhood(c6, x, false);
  CHECK(vs_intersect(open, x).empty());
  auto closed = neighborhood(c6, x, true);
  CHECK(vs_intersect(closed, x) == x);
}

TEST_CASE("components") {
  Graph two_tri = disjoint_union(clique(3), clique(3));
  auto cs = components(two_tri, {});
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == VertexSet{0, 1, 2});
  CHECK(cs[1] == VertexSet{3, 4, 5});

  auto c6 = cycle(6);
  auto parts = components(c6, {0, 3});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{1, 2});
  CHECK(parts[1] == VertexSet{4, 5});

  CHECK(components(clique(5), {0, 1, 2, 3, 4}).empty());
}

TEST_CASE("degeneracy") {
  Graph tree = make_graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  CHECK(degeneracy_order(tree).degeneracy == 1);
  CHECK(degeneracy_order(cycle(5)).degeneracy == 2);
  CHECK(degeneracy_order(clique(5)).degeneracy == 4);

  Graph p = petersen();
  auto res = degeneracy_order(p);
  std::vector<int> position(p.n);
  for (int i = 0; i < p.n; i++) position[res.order[i]] = i;
  for (int v = 0; v < p.n; v++) {
    int forward = 0;
    for (int u : p.adj[v])
      if (position[u] > position[v]) forward++;
    CHECK(forward <= res.degeneracy);
  }
}

TEST_CASE("clique number") {
  CHECK(clique_number(clique(4)).size == 4);
  CHECK(clique_number(cycle(7)).size == 2);
  auto pet = clique_number(petersen());
  CHECK(pet.size == 2);
  CHECK(pet.exact);
  for (size_t i = 0; i < pet.witness.size(); i++)
    for (size_t j = i + 1; j < pet.witness.size(); j++)
      CHECK(petersen().has_edge(pet.witness[i], pet.witness[j]));
}

TEST_CASE("induced path checks") {
  Graph c6 = cycle(6);
  CHECK(is_induced_path(c6, {0, 1, 2, 3}));
  CHECK(!is_induced_path(c6, {0, 1, 2, 3, 4, 5}));  // closes a cycle
  CHECK(!is_induced_path(c6, {0, 2}));
  Graph k4 = clique(4);
  CHECK(is_induced_path(k4, {0, 1}));
  CHECK(!is_induced_path(k4, {0, 1, 2}));
}

TEST_CASE("shortest paths") {
  Graph c8 = cycle(8);
  auto p = shortest_path(c8, 0, 3);
  REQUIRE(p.has_value());
  CHECK(*p == std::vector<int>{0, 1, 2, 3});
  auto blocked = shortest_path(c8, 0, 3, {1, 2});
  REQUIRE(blocked.has_value());
  CHECK(*blocked == std::vector<int>{0, 7, 6, 5, 4, 3});
  CHECK(!shortest_path(c8, 0, 4, {1, 7}).has_value());
}

TEST_CASE("graph text io round trip") {
  Graph g = petersen();
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  Graph h = read_graph(in);
  CHECK(h.n == g.n);
  CHECK(h.edges() == g.edges());
}

TEST_CASE("graph io accepts comments and dimacs") {
  std::istringstream in("# a triangle\n3 3\n0 1\n\n1 2\n0 2 # chord\n");
  Graph g = read_graph(in);
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 3);

  std::istringstream dim("c comment\np edge 4 2\ne 1 2\ne 3 4\n");
  Graph d = read_graph(dim);
  CHECK(d.n == 4);
  CHECK(d.has_edge(0, 1));
  CHECK(d.has_edge(2, 3));

  std::ostringstream out;
  write_graph_dimacs(out, d);
  std::istringstream back(out.str());
  Graph d2 = read_graph(back);
  CHECK(d2.edges() == d.edges());
}

TEST_CASE("graph io rejects malformed input") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_graph(in), ParseError);
  };
  bad("");
  bad("2\n");
  bad("2 1\n0 5\n");
  bad("2 1\n0 0\n");
  bad("2 2\n0 1\n");
  bad("x y\n");
}

TEST_CASE("weight file parsing") {
  std::istringstream in("0 1 2\n1 3\n# rest weigh nothing\n2 0 7\n");
  auto w = read_weights(in);
  CHECK(w.at(0) == Rat(1, 2));
  CHECK(w.at(1) == Rat(3));
  CHECK(w.at(2) == Rat(0));
  std::istringstream neg("0 -1 2\n");
  CHECK_THROWS_AS(read_weights(neg), ParseError);
  std::istringstream zero_den("0 1 0\n");
  CHECK_THROWS_AS(read_weights(zero_den), ParseError);
}
