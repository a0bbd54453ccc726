#pragma once

#include <random>
#include <set>
#include <vector>

#include "ehf/graph.hpp"
#include "ehf/treedec.hpp"

namespace support {

// decomposition read off an elimination order: bag(v) = v plus its
// not-yet-eliminated neighbors in the filled graph
inline ehf::TreeDecomposition elim_td(const ehf::Graph& g, const std::vector<int>& order) {
  int n = g.n;
  ehf::TreeDecomposition td;
  td.n = n;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[order[i]] = i;
  td.bags.resize(n);
  std::vector<int> roots;
  for (int i = 0; i < n; i++) {
    int v = order[i];
    std::vector<int> later;
    for (int u : adj[v])
      if (pos[u] > i) later.push_back(u);
    ehf::VertexSet bag = later;
    bag.push_back(v);
    td.bags[i] = ehf::vs_sorted(bag);
    for (int a : later)
      for (int b : later)
        if (a != b) adj[a].insert(b);
    if (later.empty()) {
      roots.push_back(i);
    } else {
      int p = later[0];
      for (int u : later)
        if (pos[u] < pos[p]) p = u;
      td.edges.push_back({i, pos[p]});
    }
  }
  for (size_t j = 1; j < roots.size(); j++) td.edges.push_back({roots[j - 1], roots[j]});
  return td;
}

inline ehf::TreeDecomposition random_elim_td(const ehf::Graph& g, uint64_t seed) {
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; i++) order[i] = i;
  std::mt19937_64 rng(seed);
  for (int i = g.n - 1; i > 0; i--) std::swap(order[i], order[rng() % (i + 1)]);
  return elim_td(g, order);
}

inline ehf::TreeDecomposition single_bag_td(const ehf::Graph& g) {
  ehf::TreeDecomposition td;
  td.n = g.n;
  ehf::VertexSet bag(g.n);
  for (int i = 0; i < g.n; i++) bag[i] = i;
  td.bags.push_back(bag);
  return td;
}

}  // namespace support
