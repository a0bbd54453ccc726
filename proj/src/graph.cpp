#include "ehf/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ehf {

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (small()) return (row[u] >> v) & 1ull;
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
  int m = 0;
  for (const auto& a : adj) m += (int)a.size();
  return m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; u++)
    for (int v : adj[u])
      if (u < v) e.push_back({u, v});
  return e;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  if (n <= 64) {
    g.row.assign(n, 0);
    for (int u = 0; u < n; u++)
      for (int v : g.adj[u]) g.row[u] |= 1ull << v;
  }
  return g;
}

bool vs_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet vs_sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet vs_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

static void check_range(const Graph& g, const VertexSet& x) {
  for (int v : x)
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex id out of range");
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  check_range(g, x);
  VertexSet xs = vs_sorted(x);
  InducedSubgraph out;
  out.old_of_new = xs;
  out.new_of_old.assign(g.n, -1);
  for (int i = 0; i < (int)xs.size(); i++) out.new_of_old[xs[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < (int)xs.size(); i++)
    for (int v : g.adj[xs[i]]) {
      int j = out.new_of_old[v];
      if (j > i) edges.push_back({i, j});
    }
  out.graph = make_graph((int)xs.size(), edges);
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed) {
  check_range(g, x);
  std::vector<char> in(g.n, 0), out(g.n, 0);
  for (int v : x) in[v] = 1;
  for (int v : x)
    for (int u : g.adj[v])
      if (!in[u]) out[u] = 1;
  VertexSet r;
  for (int v = 0; v < g.n; v++)
    if (out[v] || (closed && in[v])) r.push_back(v);
  return r;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& forbidden) {
  check_range(g, forbidden);
  std::vector<char> blocked(g.n, 0), seen(g.n, 0);
  for (int v : forbidden) blocked[v] = 1;
  std::vector<VertexSet> comps;
  for (int s = 0; s < g.n; s++) {
    if (blocked[s] || seen[s]) continue;
    VertexSet comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.adj[v])
        if (!blocked[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected_subset(const Graph& g, const VertexSet& x) {
  if (x.empty()) return false;
  std::vector<char> in(g.n, 0), seen(g.n, 0);
  for (int v : x) in[v] = 1;
  std::vector<int> stack{x[0]};
  seen[x[0]] = 1;
  int cnt = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    cnt++;
    for (int u : g.adj[v])
      if (in[u] && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  return cnt == (int)x.size();
}

DegeneracyResult degeneracy_order(const Graph& g) {
  DegeneracyResult res;
  std::vector<int> deg(g.n);
  std::vector<char> removed(g.n, 0);
  for (int v = 0; v < g.n; v++) deg[v] = g.degree(v);
  for (int step = 0; step < g.n; step++) {
    int best = -1;
    for (int v = 0; v < g.n; v++)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    res.degeneracy = std::max(res.degeneracy, deg[best]);
    res.order.push_back(best);
    removed[best] = 1;
    for (int u : g.adj[best])
      if (!removed[u]) deg[u]--;
  }
  return res;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  uint64_t budget, nodes = 0;
  bool exhausted = false;
  std::vector<int> best, cur;

  CliqueSearch(const Graph& g, uint64_t budget) : g(g), budget(budget) {}

  void run(std::vector<int>& cand) {
    if (++nodes > budget) { exhausted = true; return; }
    if (cur.size() > best.size()) best = cur;
    if (cur.size() + cand.size() <= best.size()) return;
    for (size_t i = 0; i < cand.size(); i++) {
      if (cur.size() + (cand.size() - i) <= best.size()) return;
      int v = cand[i];
      std::vector<int> next;
      for (size_t j = i + 1; j < cand.size(); j++)
        if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
      cur.push_back(v);
      run(next);
      cur.pop_back();
      if (exhausted) return;
    }
  }
};

}  // namespace

CliqueResult clique_number(const Graph& g, uint64_t budget) {
  CliqueSearch s(g, budget);
  std::vector<int> cand(g.n);
  for (int v = 0; v < g.n; v++) cand[v] = v;
  s.run(cand);
  CliqueResult r;
  r.size = (int)s.best.size();
  r.witness = vs_sorted(s.best);
  r.exact = !s.exhausted;
  r.nodes = s.nodes;
  return r;
}

bool is_induced_path(const Graph& g, const std::vector<int>& vertices) {
  int k = (int)vertices.size();
  if (k == 0) return false;
  std::vector<char> seen(g.n, 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++) {
      bool adjacent = g.has_edge(vertices[i], vertices[j]);
      if (j == i + 1 && !adjacent) return false;
      if (j > i + 1 && adjacent) return false;
    }
  return true;
}

std::optional<std::vector<int>> shortest_path(const Graph& g, int from, int to,
                                              const VertexSet& forbidden) {
  std::vector<char> blocked(g.n, 0);
  for (int v : forbidden) blocked[v] = 1;
  if (blocked[from] || blocked[to]) return std::nullopt;
  std::vector<int> parent(g.n, -2);
  std::queue<int> q;
  q.push(from);
  parent[from] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == to) break;
    for (int u : g.adj[v])
      if (!blocked[u] && parent[u] == -2) {
        parent[u] = v;
        q.push(u);
      }
  }
  if (parent[to] == -2) return std::nullopt;
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace ehf
