#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ehf/hubs.hpp"
#include "ehf/structures.hpp"
#include "support/builders.hpp"

using namespace ehf;
using support::cycle;
using support::disjoint_union;
using support::path_graph;
using support::wheel_graph;

namespace {

// host whose hubs are exactly m designated centers with a prescribed
// adjacency: each center carries a private 5-cycle rim it fully sees, which
// makes it the center of a proper wheel while the rim vertices stay plain
Graph hub_host(int m, const std::vector<std::pair<int, int>>& center_edges) {
  std::vector<std::pair<int, int>> es = center_edges;
  for (int i = 0; i < m; i++) {
    int base = m + 5 * i;
    for (int j = 0; j < 5; j++) {
      es.push_back({base + j, base + (j + 1) % 5});
      es.push_back({i, base + j});
    }
  }
  return make_graph(m + 5 * m, es);
}

// certify that each designated center really is a hub: its private rim plus
// the center is a proper wheel (full hub enumeration is only affordable on
// the small hosts, where the gadget construction is cross-checked end to end)
void check_centers_are_hubs(const Graph& g, int m) {
  for (int i = 0; i < m; i++) {
    int base = m + 5 * i;
    std::vector<int> rim = {base, base + 1, base + 2, base + 3, base + 4};
    Certificate cert;
    cert.kind = "wheel";
    cert.roles["hole"] = rim;
    cert.roles["center"] = {i};
    cert.vertices = rim;
    cert.vertices.push_back(i);
    std::sort(cert.vertices.begin(), cert.vertices.end());
    std::string why;
    REQUIRE(validate_certificate(g, cert, &why));
    REQUIRE(wheel_flags(g, rim, i).proper);
  }
}

void check_partition(const Graph& g, const HubPartition& hp, const VertexSet& region) {
  VertexSet seen;
  for (const VertexSet& layer : hp.layers) {
    REQUIRE(!layer.empty());
    for (size_t i = 0; i < layer.size(); i++)
      for (size_t j = i + 1; j < layer.size(); j++) CHECK(!g.has_edge(layer[i], layer[j]));
    for (int v : layer) CHECK(!vs_contains(seen, v));
    seen = vs_union(seen, layer);
  }
  CHECK(seen == region);
  std::vector<char> remaining(g.n, 0);
  for (int v : region) remaining[v] = 1;
  for (const VertexSet& layer : hp.layers) {
    for (int v : layer) {
      int fwd = 0;
      for (int u : g.adj[v])
        if (remaining[u]) fwd++;
      CHECK(fwd <= hp.d);
    }
    for (int v : layer) remaining[v] = 0;
  }
}

}  // namespace

TEST_CASE("graphs without hubs give the empty partition") {
  for (const Graph& g : {cycle(5), path_graph(6), cycle(7)}) {
    HubResult hr = find_hubs(g);
    REQUIRE(hr.hubs.empty());
    REQUIRE(hr.unresolved.empty());
    HubPartition hp = hub_partition(g, 0, 1, hr.hubs);
    CHECK(hp.layers.empty());
    CHECK(hp.d == 0);
    CHECK(hub_dimension(g, 0, 1, HubSearch::Greedy) == 0);
    CHECK(hub_dimension(g, 0, 1, HubSearch::Exhaustive) == 0);
  }
}

TEST_CASE("a single hub outside the excluded pair forms one layer") {
  Graph w5 = wheel_graph(5, {0, 1, 2, 3, 4});
  HubResult hr = find_hubs(w5);
  REQUIRE(hr.hubs == std::vector<int>{5});
  HubPartition hp = hub_partition(w5, 0, 1, hr.hubs);
  REQUIRE(hp.layers.size() == 1);
  CHECK(hp.layers[0] == VertexSet{5});
  CHECK(hp.d == 0);
  // the hub itself can be an excluded endpoint
  CHECK(hub_partition(w5, 5, 0, hr.hubs).layers.empty());
}

TEST_CASE("distant stable hubs fit in one layer") {
  Graph two = disjoint_union(wheel_graph(5, {0, 1, 2, 3, 4}), wheel_graph(5, {0, 1, 2, 3, 4}));
  HubResult hr = find_hubs(two);
  REQUIRE(hr.hubs == std::vector<int>{5, 11});
  HubPartition hp = hub_partition(two, 0, 1, hr.hubs);
  REQUIRE(hp.layers.size() == 1);
  CHECK(hp.layers[0] == VertexSet{5, 11});
  CHECK(hp.d == 0);
  CHECK(hub_dimension(two, 0, 1, HubSearch::Exhaustive) == 1);
}

TEST_CASE("hub host gadget produces exactly the designated hubs") {
  Graph g = hub_host(3, {{0, 1}, {1, 2}});
  HubResult hr = find_hubs(g);
  CHECK(hr.hubs == std::vector<int>{0, 1, 2});
  CHECK(hr.unresolved.empty());
  HubPartition hp = hub_partition(g, 3, 4, hr.hubs);
  check_partition(g, hp, {0, 1, 2});
  CHECK(hp.layers.size() == 2);
  CHECK(hub_dimension(g, 3, 4, HubSearch::Exhaustive) == 2);
}

TEST_CASE("greedy layering can lose to the exhaustive optimum") {
  // hub adjacency: a four-cycle 0-1-3-2 with a pendant 4 on 3; the greedy
  // first layer {0, 4} strands vertex 3 behind both of its layers
  Graph g = hub_host(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  check_centers_are_hubs(g, 5);
  std::vector<int> centers = {0, 1, 2, 3, 4};
  HubPartition hp = hub_partition(g, 5, 6, centers);
  check_partition(g, hp, {0, 1, 2, 3, 4});
  CHECK(hp.d == 2);
  CHECK(hp.layers.size() == 3);
  CHECK(hub_dimension(g, 5, 6, HubSearch::Greedy, centers, -1) == 3);
  CHECK(hub_dimension(g, 5, 6, HubSearch::Exhaustive, centers, -1) == 2);
}

TEST_CASE("partitions validate across random hub hosts") {
  for (int s = 0; s < 20; s++) {
    std::mt19937_64 rng(4400 + s);
    int m = 4 + (int)(rng() % 5);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < m; u++)
      for (int v = u + 1; v < m; v++)
        if (rng() % 100 < 45) es.push_back({u, v});
    Graph g = hub_host(m, es);
    check_centers_are_hubs(g, m);
    VertexSet centers;
    for (int i = 0; i < m; i++) centers.push_back(i);
    HubPartition hp = hub_partition(g, m, m + 1, centers);
    check_partition(g, hp, centers);
    int greedy = (int)hp.layers.size();
    int exact = hub_dimension(g, m, m + 1, HubSearch::Exhaustive, centers, hp.d);
    CHECK(exact >= 1);
    CHECK(exact <= greedy);
  }
}

TEST_CASE("hub dimension honors explicit degree bounds") {
  Graph g = hub_host(2, {{0, 1}});
  HubResult hr = find_hubs(g);
  REQUIRE(hr.hubs == std::vector<int>{0, 1});
  CHECK(hub_dimension(g, 2, 3, HubSearch::Exhaustive, hr.hubs, 0) == -1);
  CHECK(hub_dimension(g, 2, 3, HubSearch::Exhaustive, hr.hubs, 1) == 2);
  CHECK(hub_dimension(g, 2, 3, HubSearch::Greedy) == 2);
}

TEST_CASE("exhaustive search is guarded and inputs are validated") {
  Graph g = hub_host(2, {});
  std::vector<int> big(13);
  for (int i = 0; i < 13; i++) big[i] = i % g.n;
  std::vector<int> thirteen;
  Graph host13 = hub_host(13, {});
  for (int i = 0; i < 13; i++) thirteen.push_back(i);
  CHECK_THROWS_AS(hub_dimension(host13, 13, 14, HubSearch::Exhaustive, thirteen, -1),
                  std::invalid_argument);
  CHECK(hub_dimension(host13, 13, 14, HubSearch::Greedy, thirteen, -1) == 1);
  CHECK_THROWS_AS(hub_partition(g, 1, 1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(hub_partition(g, -1, 1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(hub_partition(g, 0, g.n, {0}), std::invalid_argument);
}

TEST_CASE("isolated padding never raises the hub dimension") {
  Graph g = hub_host(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  check_centers_are_hubs(g, 4);
  std::vector<int> centers = {0, 1, 2, 3};
  int before_greedy = hub_dimension(g, 4, 5, HubSearch::Greedy, centers, -1);
  int before_exact = hub_dimension(g, 4, 5, HubSearch::Exhaustive, centers, -1);
  // isolated vertices sit on no hole, so the hub set is unchanged
  Graph padded = disjoint_union(g, make_graph(3, {}));
  int after_greedy = hub_dimension(padded, 4, 5, HubSearch::Greedy, centers, -1);
  int after_exact = hub_dimension(padded, 4, 5, HubSearch::Exhaustive, centers, -1);
  CHECK(after_greedy <= before_greedy);
  CHECK(after_exact <= before_exact);
  CHECK(after_greedy == before_greedy);
  CHECK(after_exact == before_exact);
}

TEST_CASE("hub partition serializes to json") {
  Graph w5 = wheel_graph(5, {0, 1, 2, 3, 4});
  HubPartition hp = hub_partition(w5, 0, 1, find_hubs(w5).hubs);
  std::string j = hub_partition_json(hp);
  CHECK(j == R"({"a":0,"b":1,"d":0,"k":1,"layers":[[5]]})");
}
