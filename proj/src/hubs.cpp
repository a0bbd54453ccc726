#include "ehf/hubs.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "ehf/structures.hpp"

namespace ehf {

namespace {

// degrees restricted to the active region
std::vector<int> region_degrees(const Graph& g, const std::vector<int>& region,
                                const std::vector<char>& in_region) {
  std::vector<int> deg(region.size(), 0);
  for (size_t i = 0; i < region.size(); i++)
    for (int u : g.adj[region[i]])
      if (in_region[u]) deg[i]++;
  return deg;
}

// min-degree removal order over the region; ties go to the smaller vertex id
std::vector<int> region_degeneracy_order(const Graph& g, const std::vector<int>& region) {
  std::vector<char> in_region(g.n, 0);
  std::vector<int> idx(g.n, -1);
  for (size_t i = 0; i < region.size(); i++) {
    in_region[region[i]] = 1;
    idx[region[i]] = (int)i;
  }
  std::vector<int> deg = region_degrees(g, region, in_region);
  std::vector<char> out(region.size(), 0);
  std::vector<int> order;
  for (size_t round = 0; round < region.size(); round++) {
    int pick = -1;
    for (size_t i = 0; i < region.size(); i++) {
      if (out[i]) continue;
      if (pick < 0 || deg[i] < deg[pick]) pick = (int)i;
    }
    out[pick] = 1;
    order.push_back(region[pick]);
    for (int u : g.adj[region[pick]])
      if (in_region[u] && !out[idx[u]]) deg[idx[u]]--;
  }
  return order;
}

struct Layered {
  std::vector<VertexSet> layers;
  int d = 0;
};

Layered greedy_layers(const Graph& g, VertexSet region) {
  Layered out;
  while (!region.empty()) {
    std::vector<char> in_region(g.n, 0);
    for (int v : region) in_region[v] = 1;
    std::vector<int> deg = region_degrees(g, region, in_region);
    std::vector<int> order = region_degeneracy_order(g, region);
    int degeneracy = 0;
    {
      std::vector<char> pending(g.n, 0);
      for (int v : region) pending[v] = 1;
      for (int v : order) {
        pending[v] = 0;
        int fwd = 0;
        for (int u : g.adj[v])
          if (pending[u]) fwd++;
        degeneracy = std::max(degeneracy, fwd);
      }
    }
    int threshold = 2 * degeneracy;
    std::vector<char> chosen(g.n, 0);
    VertexSet layer;
    for (int v : order) {
      int i = (int)(std::lower_bound(region.begin(), region.end(), v) - region.begin());
      if (deg[i] > threshold) continue;
      bool clash = false;
      for (int u : g.adj[v])
        if (chosen[u]) {
          clash = true;
          break;
        }
      if (clash) continue;
      chosen[v] = 1;
      layer.push_back(v);
      out.d = std::max(out.d, deg[i]);
    }
    layer = vs_sorted(layer);
    if (layer.empty()) throw std::logic_error("layer extraction stalled");
    out.layers.push_back(layer);
    region = vs_minus(region, layer);
  }
  return out;
}

void assert_partition(const Graph& g, const VertexSet& region, const Layered& lp) {
  VertexSet seen;
  std::vector<char> placed(g.n, 0);
  for (size_t i = 0; i < lp.layers.size(); i++) {
    const VertexSet& layer = lp.layers[i];
    for (size_t x = 0; x < layer.size(); x++)
      for (size_t y = x + 1; y < layer.size(); y++)
        if (g.has_edge(layer[x], layer[y])) throw std::logic_error("layer is not stable");
    for (int v : layer) {
      if (placed[v]) throw std::logic_error("vertex placed twice");
      placed[v] = 1;
    }
    seen = vs_union(seen, layer);
  }
  if (seen != region) throw std::logic_error("layers do not cover the hub region");
  // forward degree: neighbors in this layer and all later ones
  std::vector<char> remaining(g.n, 0);
  for (int v : region) remaining[v] = 1;
  for (const VertexSet& layer : lp.layers) {
    for (int v : layer) {
      int fwd = 0;
      for (int u : g.adj[v])
        if (remaining[u]) fwd++;
      if (fwd > lp.d) throw std::logic_error("forward degree exceeds the reported bound");
    }
    for (int v : layer) remaining[v] = 0;
  }
}

int exhaustive_min_layers(const Graph& g, const VertexSet& region, int d) {
  int m = (int)region.size();
  if (m == 0) return 0;
  std::vector<uint32_t> nbr(m, 0);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++)
      if (i != j && g.has_edge(region[i], region[j])) nbr[i] |= (uint32_t)1 << j;
  const int kInf = m + 1;
  std::vector<int> best((size_t)1 << m, -1);
  std::function<int(uint32_t)> solve = [&](uint32_t rest) -> int {
    if (!rest) return 0;
    int& memo = best[rest];
    if (memo >= 0) return memo;
    memo = kInf;
    uint32_t low = 0;
    for (uint32_t t = rest; t; t &= t - 1) {
      int i = std::countr_zero(t);
      if (std::popcount(nbr[i] & rest) <= d) low |= (uint32_t)1 << i;
    }
    for (uint32_t s = low; s; s = (s - 1) & low) {
      bool stable = true;
      for (uint32_t t = s; t; t &= t - 1)
        if (nbr[std::countr_zero(t)] & s) {
          stable = false;
          break;
        }
      if (!stable) continue;
      int sub = solve(rest & ~s);
      if (sub + 1 < memo) memo = sub + 1;
    }
    return memo;
  };
  int got = solve(((uint32_t)1 << m) - 1);
  return got >= kInf ? -1 : got;
}

VertexSet hub_region(const Graph& g, int a, int b, const std::vector<int>& hub_set) {
  if (a == b) throw std::invalid_argument("the two excluded vertices must differ");
  if (a < 0 || a >= g.n || b < 0 || b >= g.n)
    throw std::invalid_argument("excluded vertex out of range");
  VertexSet region = vs_sorted(hub_set);
  return vs_minus(region, {a, b});
}

}  // namespace

HubPartition hub_partition(const Graph& g, int a, int b, const std::vector<int>& hub_set) {
  VertexSet region = hub_region(g, a, b, hub_set);
  HubPartition hp;
  hp.a = a;
  hp.b = b;
  Layered lp = greedy_layers(g, region);
  assert_partition(g, region, lp);
  hp.layers = lp.layers;
  hp.d = lp.d;
  return hp;
}

int hub_dimension(const Graph& g, int a, int b, HubSearch mode, const std::vector<int>& hub_set,
                  int d_bound) {
  VertexSet region = hub_region(g, a, b, hub_set);
  if (mode == HubSearch::Greedy) return (int)greedy_layers(g, region).layers.size();
  if (region.size() > 12)
    throw std::invalid_argument("exhaustive search guarded to 12 hubs");
  int d = d_bound;
  if (d < 0) d = region.empty() ? 0 : greedy_layers(g, region).d;
  return exhaustive_min_layers(g, region, d);
}

int hub_dimension(const Graph& g, int a, int b, HubSearch mode, int d_bound, uint64_t budget) {
  HubResult hubs = find_hubs(g, budget);
  if (!hubs.unresolved.empty()) throw std::runtime_error("hub search budget exhausted");
  return hub_dimension(g, a, b, mode, hubs.hubs, d_bound);
}

std::string hub_partition_json(const HubPartition& hp) {
  nlohmann::json j;
  j["layers"] = hp.layers;
  j["d"] = hp.d;
  j["k"] = hp.layers.size();
  j["a"] = hp.a;
  j["b"] = hp.b;
  return j.dump();
}

}  // namespace ehf
