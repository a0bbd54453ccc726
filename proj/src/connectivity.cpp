#include "ehf/connectivity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ehf {

Rat WeightFunction::total() const {
  Rat t(0);
  for (const Rat& r : w) t = t + r;
  return t;
}

bool WeightFunction::normal() const { return total() == Rat(1); }

Rat WeightFunction::of(const VertexSet& s) const {
  Rat t(0);
  for (int v : s) t = t + w[v];
  return t;
}

WeightFunction WeightFunction::uniform(int n) {
  WeightFunction f;
  f.w.assign(n, Rat(1, n));
  return f;
}

WeightFunction WeightFunction::from_map(int n, const std::map<int, Rat>& m, bool normalize) {
  WeightFunction f;
  f.w.assign(n, Rat(0));
  for (auto& [v, r] : m) {
    if (v < 0 || v >= n) throw std::invalid_argument("weight for vertex out of range");
    if (r < Rat(0)) throw std::invalid_argument("negative weight");
    f.w[v] = r;
  }
  if (normalize) {
    Rat t = f.total();
    if (t == Rat(0)) throw std::invalid_argument("cannot normalize all-zero weights");
    for (Rat& r : f.w) r = r / t;
  }
  return f;
}

bool is_separation(const Graph& g, const Separation& s, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<int> tag(g.n, -1);
  auto mark = [&](const VertexSet& part, int t) {
    for (int v : part) {
      if (v < 0 || v >= g.n || tag[v] != -1) return false;
      tag[v] = t;
    }
    return true;
  };
  if (!mark(s.x, 0) || !mark(s.y, 1) || !mark(s.z, 2)) return fail("parts not disjoint or invalid");
  for (int v = 0; v < g.n; v++)
    if (tag[v] == -1) return fail("parts do not cover the graph");
  for (int u : s.x)
    for (int v : s.z)
      if (g.has_edge(u, v)) return fail("edge between X and Z");
  return true;
}

namespace {

struct Dinic {
  struct E {
    int to, cap, orig, rev;
  };
  std::vector<std::vector<E>> adj;
  std::vector<int> level, it;

  explicit Dinic(int n) : adj(n), level(n), it(n) {}

  void add(int u, int v, int cap) {
    adj[u].push_back({v, cap, cap, (int)adj[v].size()});
    adj[v].push_back({u, 0, 0, (int)adj[u].size() - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> q{s};
    level[s] = 0;
    for (size_t h = 0; h < q.size(); h++) {
      int v = q[h];
      for (auto& e : adj[v])
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          q.push_back(e.to);
        }
    }
    return level[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = it[v]; i < (int)adj[v].size(); i++) {
      E& e = adj[v][i];
      if (e.cap > 0 && level[e.to] == level[v] + 1) {
        int d = dfs(e.to, t, std::min(f, e.cap));
        if (d > 0) {
          e.cap -= d;
          adj[e.to][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      while (int f = dfs(s, t, 1 << 29)) flow += f;
    }
    return flow;
  }
};

// flow network for internally disjoint a-b paths on g minus `dead`
// node ids: v_in = 2v, v_out = 2v+1; source a_in, sink b_out
Dinic internal_net(const Graph& g, int a, int b, const std::vector<char>& dead) {
  int inf = g.n + 1;
  Dinic d(2 * g.n);
  for (int v = 0; v < g.n; v++) {
    if (dead[v]) continue;
    d.add(2 * v, 2 * v + 1, v == a || v == b ? inf : 1);
  }
  for (auto [u, v] : g.edges()) {
    if (dead[u] || dead[v]) continue;
    d.add(2 * u + 1, 2 * v, inf);
    d.add(2 * v + 1, 2 * u, inf);
  }
  return d;
}

int internal_flow_value(const Graph& g, int a, int b, const std::vector<char>& dead) {
  Dinic d = internal_net(g, a, b, dead);
  return d.run(2 * a, 2 * b + 1);
}

void check_nonadjacent_pair(const Graph& g, int a, int b) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
    throw std::invalid_argument("need two distinct vertices");
  if (g.has_edge(a, b)) throw std::invalid_argument("endpoints must be nonadjacent");
}

// walks one unit of flow from `from` to `to`, consuming it; returns the
// sequence of out-nodes' vertices (n caps the valid vertex range, so super
// source/sink nodes never leak into the path)
std::vector<int> consume_path(Dinic& d, int from, int to, int n) {
  std::vector<int> verts;
  int at = from;
  while (true) {
    if (at % 2 == 1 && at / 2 < n) verts.push_back(at / 2);
    if (at == to) break;
    bool moved = false;
    for (auto& e : d.adj[at]) {
      if (e.orig > 0 && e.orig - e.cap > 0) {
        e.cap++;  // consume one unit
        at = e.to;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("flow decomposition stuck");
  }
  return verts;
}

}  // namespace

VertexSet min_separator(const Graph& g, int a, int b) {
  check_nonadjacent_pair(g, a, b);
  std::vector<char> dead(g.n, 0);
  int k = internal_flow_value(g, a, b, dead);
  VertexSet sep;
  int target = k;
  for (int v = 0; v < g.n && target > 0; v++) {
    if (v == a || v == b) continue;
    dead[v] = 1;
    if (internal_flow_value(g, a, b, dead) == target - 1) {
      sep.push_back(v);
      target--;
    } else {
      dead[v] = 0;
    }
  }
  return sep;
}

Banana max_banana(const Graph& g, int a, int b) {
  check_nonadjacent_pair(g, a, b);
  std::vector<char> dead(g.n, 0);
  Dinic d = internal_net(g, a, b, dead);
  int k = d.run(2 * a, 2 * b + 1);
  Banana out;
  out.a = a;
  out.b = b;
  for (int i = 0; i < k; i++) {
    std::vector<int> verts = consume_path(d, 2 * a, 2 * b + 1, g.n);
    // shortcut chords so the path is induced; only interior vertices drop out
    auto sub = induced_subgraph(g, vs_sorted(verts));
    auto sp = shortest_path(sub.graph, sub.new_of_old[a], sub.new_of_old[b]);
    if (!sp) throw std::logic_error("flow path lost its endpoints");
    std::vector<int> path;
    for (int v : *sp) path.push_back(sub.old_of_new[v]);
    out.paths.push_back(path);
  }
  return out;
}

SetMenger set_menger(const Graph& g, const VertexSet& a, const VertexSet& b) {
  int inf = g.n + 1;
  int S = 2 * g.n, T = 2 * g.n + 1;
  auto build = [&](const std::vector<char>& dead) {
    Dinic d(2 * g.n + 2);
    for (int v = 0; v < g.n; v++)
      if (!dead[v]) d.add(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      if (dead[u] || dead[v]) continue;
      d.add(2 * u + 1, 2 * v, inf);
      d.add(2 * v + 1, 2 * u, inf);
    }
    for (int v : a)
      if (!dead[v]) d.add(S, 2 * v, 1);
    for (int v : b)
      if (!dead[v]) d.add(2 * v + 1, T, 1);
    return d;
  };
  std::vector<char> dead(g.n, 0);
  Dinic d = build(dead);
  SetMenger out;
  out.k = d.run(S, T);
  for (int i = 0; i < out.k; i++) out.paths.push_back(consume_path(d, S, T, g.n));
  int target = out.k;
  for (int v = 0; v < g.n && target > 0; v++) {
    dead[v] = 1;
    Dinic d2 = build(dead);
    if (d2.run(S, T) == target - 1) {
      out.separator.push_back(v);
      target--;
    } else {
      dead[v] = 0;
    }
  }
  return out;
}

namespace {

// fan of v-to-s paths sharing only v: v_out is the source with unbounded
// through-capacity, each s vertex feeds the sink through a unit arc and has
// no through-capacity of its own (paths stop at their first s vertex)
int fan_flow(const Graph& g, int v, const VertexSet& s, const std::vector<char>& dead) {
  int inf = g.n + 1;
  int T = 2 * g.n;
  Dinic d(2 * g.n + 1);
  std::vector<char> ins(g.n, 0);
  for (int u : s) ins[u] = 1;
  for (int u = 0; u < g.n; u++) {
    if (dead[u]) continue;
    if (ins[u])
      d.add(2 * u, T, 1);
    else
      d.add(2 * u, 2 * u + 1, u == v ? inf : 1);
  }
  for (auto [x, y] : g.edges()) {
    if (dead[x] || dead[y]) continue;
    d.add(2 * x + 1, 2 * y, inf);
    d.add(2 * y + 1, 2 * x, inf);
  }
  return d.run(2 * v + 1, T);
}

}  // namespace

FanSeparator fan_separator(const Graph& g, int v, const VertexSet& s) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("fan root out of range");
  VertexSet targets;
  for (int u : s) {
    if (u < 0 || u >= g.n) throw std::invalid_argument("fan target out of range");
    if (u != v) targets.push_back(u);
  }
  std::vector<char> dead(g.n, 0);
  FanSeparator out;
  out.k = fan_flow(g, v, targets, dead);
  int target = out.k;
  for (int u = 0; u < g.n && target > 0; u++) {
    if (u == v) continue;
    dead[u] = 1;  // deleting u also drops it as a target
    if (fan_flow(g, v, targets, dead) == target - 1) {
      out.cut.push_back(u);
      target--;
    } else {
      dead[u] = 0;
    }
  }
  return out;
}

VertexSet high_fan_vertices(const Graph& g, const VertexSet& bag, int threshold) {
  std::vector<char> dead(g.n, 0);
  VertexSet out;
  for (int v = 0; v < g.n; v++) {
    VertexSet s;
    for (int u : bag)
      if (u != v) s.push_back(u);
    if (fan_flow(g, v, s, dead) >= threshold) out.push_back(v);
  }
  return out;
}

BalanceVerdict is_balanced_separator(const Graph& g, const WeightFunction& w, const VertexSet& x,
                                     const Rat& c) {
  if (!w.normal()) throw std::invalid_argument("weight function must be normal");
  if (c < Rat(0) || c > Rat(1)) throw std::invalid_argument("balance fraction must be in [0,1]");
  if ((int)w.w.size() != g.n) throw std::invalid_argument("weight vector size mismatch");
  BalanceVerdict verdict;
  verdict.balanced = true;
  verdict.heaviest = Rat(0);
  for (auto& comp : components(g, vs_sorted(x))) {
    Rat cw = w.of(comp);
    if (cw > verdict.heaviest) {
      verdict.heaviest = cw;
      verdict.heaviest_component = comp;
    }
    if (cw > c) verdict.balanced = false;
  }
  return verdict;
}

namespace {

bool disconnects(const Graph& g, const VertexSet& s) {
  return components(g, s).size() >= 2;
}

// size-ascending, lexicographic enumeration of subsets of `pool`;
// returns the first subset accepted by pred
template <typename Pred>
std::optional<VertexSet> first_subset(const std::vector<int>& pool, int max_size, Pred pred) {
  int n = (int)pool.size();
  max_size = std::min(max_size, n);
  for (int s = 0; s <= max_size; s++) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; i++) idx[i] = i;
    while (true) {
      VertexSet cand;
      for (int i : idx) cand.push_back(pool[i]);
      if (pred(cand)) return cand;
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) i--;
      if (i < 0) break;
      idx[i]++;
      for (int j = i + 1; j < s; j++) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

CutsetReport star_and_clique_cutsets(const Graph& g, int star_degree_cap, int clique_size_cap) {
  CutsetReport rep;
  for (int x = 0; x < g.n; x++) {
    StarCutsetInfo info;
    info.center = x;
    if (g.degree(x) > star_degree_cap) {
      info.has = Tri::Unknown;
      rep.stars.push_back(info);
      continue;
    }
    auto hit = first_subset(g.adj[x], g.degree(x), [&](const VertexSet& sub) {
      VertexSet s = sub;
      s.push_back(x);
      return disconnects(g, vs_sorted(s));
    });
    if (hit) {
      info.has = Tri::Yes;
      info.witness = *hit;
      info.witness.push_back(x);
      info.witness = vs_sorted(info.witness);
    } else {
      info.has = Tri::No;
    }
    rep.stars.push_back(info);
  }
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int from) {
    for (int v = from; v < g.n; v++) {
      bool ok = true;
      for (int u : cur)
        if (!g.has_edge(u, v)) ok = false;
      if (!ok) continue;
      cur.push_back(v);
      VertexSet c = vs_sorted(cur);
      if (disconnects(g, c)) rep.clique_cutsets.push_back(c);
      if ((int)cur.size() < clique_size_cap) grow(v + 1);
      cur.pop_back();
    }
  };
  grow(0);
  std::sort(rep.clique_cutsets.begin(), rep.clique_cutsets.end(),
            [](const VertexSet& a, const VertexSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return rep;
}

Path gyarfas_path(const Graph& g, const WeightFunction& w, int start) {
  if (!w.normal()) throw std::invalid_argument("weight function must be normal");
  if ((int)w.w.size() != g.n) throw std::invalid_argument("weight vector size mismatch");
  if (start < 0 || start >= g.n) throw std::invalid_argument("start vertex out of range");
  if (components(g, {}).size() != 1) throw std::invalid_argument("graph must be connected");
  Rat half(1, 2);
  std::vector<char> alive(g.n, 1);
  int s = start;
  Path p;
  p.vertices.push_back(s);
  int guard = g.n + 1;
  while (guard-- > 0) {
    // forbidden = everything outside the live set plus N[s]
    VertexSet forbidden;
    for (int v = 0; v < g.n; v++)
      if (!alive[v] || v == s || (alive[v] && g.has_edge(s, v))) forbidden.push_back(v);
    VertexSet heavy;
    for (auto& comp : components(g, forbidden)) {
      if (w.of(comp) > half) {
        heavy = comp;
        break;
      }
    }
    if (heavy.empty()) return p;
    // its neighborhood lies inside N(s); step onto the least attachment
    int next = -1;
    for (int v : neighborhood(g, heavy, false))
      if (alive[v] && v != s) {
        next = v;
        break;
      }
    if (next < 0) throw std::logic_error("heavy component with no attachment");
    std::fill(alive.begin(), alive.end(), 0);
    for (int v : heavy) alive[v] = 1;
    alive[next] = 1;
    s = next;
    p.vertices.push_back(s);
  }
  throw std::logic_error("path construction failed to terminate");
}

WheelForcerResult wheel_forcer_cutset(const Graph& g, const Certificate& wheel,
                                      const std::vector<int>& sector) {
  std::string why;
  if (wheel.kind != "wheel" || !validate_certificate(g, wheel, &why))
    throw std::invalid_argument("invalid wheel certificate: " + why);
  const auto& hole = wheel.roles.at("hole");
  int x = wheel.roles.at("center")[0];
  WheelFlags flags = wheel_flags(g, hole, x);
  if (!flags.proper) throw std::invalid_argument("wheel must be proper");
  if (flags.universal) throw std::invalid_argument("universal wheel has no long sector");
  auto sectors = wheel_sectors(g, hole, x);
  bool known = false;
  for (auto& sec : sectors)
    if (sec == sector) known = true;
  if (!known) throw std::invalid_argument("not a sector of this wheel");
  if (sector.size() < 3) throw std::invalid_argument("sector must be long");

  int h = (int)hole.size();
  int x1 = sector.front(), x2 = sector.back();
  int p1 = -1, q = -1;
  for (int i = 0; i < h; i++) {
    if (hole[i] == x1) p1 = i;
    if (hole[i] == x2) q = i;
  }
  // sectors run forward along the hole order; walk on from x2 toward x1
  WheelForcerResult res;
  int count = 1;
  for (int r = (q + 1) % h; r != p1; r = (r + 1) % h) {
    if (g.has_edge(hole[r], x)) {
      count++;
      if (count % 2 == 0) res.w_side.push_back(hole[r]);
    }
  }
  res.w_side = vs_sorted(res.w_side);
  for (int v : hole)
    if (std::find(sector.begin(), sector.end(), v) == sector.end() && !g.has_edge(v, x))
      res.z_side.push_back(v);
  res.z_side = vs_sorted(res.z_side);
  VertexSet cut = {x};
  for (int v : g.adj[x])
    if (!vs_contains(res.w_side, v)) cut.push_back(v);
  res.cutset = vs_sorted(cut);
  for (size_t i = 1; i + 1 < sector.size(); i++) res.q_interior.push_back(sector[i]);
  res.q_interior = vs_sorted(res.q_interior);

  res.separates = true;
  VertexSet wz = vs_union(res.w_side, res.z_side);
  for (auto& comp : components(g, res.cutset)) {
    bool has_q = !vs_intersect(comp, res.q_interior).empty();
    bool has_wz = !vs_intersect(comp, wz).empty();
    if (has_q && has_wz) res.separates = false;
  }
  return res;
}

PyramidPathResult pyramid_neighborhood_check(const Graph& g, const Certificate& pyramid,
                                             const std::vector<int>& p) {
  std::string why;
  if (pyramid.kind != "pyramid" || !validate_certificate(g, pyramid, &why))
    throw std::invalid_argument("invalid pyramid certificate: " + why);
  int apex = pyramid.roles.at("apex")[0];
  const auto& base = pyramid.roles.at("base");
  if (p.size() < 2 || !is_induced_path(g, p))
    throw std::invalid_argument("p must be an induced path on >= 2 vertices");
  auto deep_index = [&](int v) {
    for (int i = 0; i < 3; i++) {
      const auto& path = pyramid.roles.at("path" + std::to_string(i + 1));
      // exclude apex, the apex's neighbor on this path, and the base end
      for (size_t t = 2; t + 1 < path.size(); t++)
        if (path[t] == v) return i;
    }
    return -1;
  };
  int i = deep_index(p.front()), j = deep_index(p.back());
  if (i < 0 || j < 0 || i == j)
    throw std::invalid_argument("path ends must lie strictly inside two distinct pyramid paths");
  PyramidPathResult res;
  std::vector<int> interior(p.begin() + 1, p.end() - 1);
  res.vacuous = interior.empty();
  std::vector<int> corners = {apex, base[0], base[1], base[2]};
  for (int c : corners)
    for (int u : interior)
      if (g.has_edge(c, u)) res.holds = true;
  return res;
}

std::optional<VertexSet> find_hole_dominating_component(const Graph& g,
                                                        const std::vector<int>& hole, int center) {
  VertexSet closed = neighborhood(g, {center}, true);
  for (auto& comp : components(g, closed)) {
    VertexSet reach = neighborhood(g, comp, true);
    bool all = true;
    for (int v : hole)
      if (!vs_contains(reach, v)) all = false;
    if (all) return comp;
  }
  return std::nullopt;
}

std::optional<VertexSet> dominated_balanced_separator(const Graph& g, const WeightFunction& w,
                                                      int d_max, SeparatorStrategy strategy) {
  if (!w.normal()) throw std::invalid_argument("weight function must be normal");
  Rat half(1, 2);
  auto works = [&](const VertexSet& y) {
    return is_balanced_separator(g, w, neighborhood(g, y, true), half).balanced;
  };
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; v++) all[v] = v;
  if (strategy == SeparatorStrategy::Exhaustive) return first_subset(all, d_max, works);

  std::set<VertexSet> seen;
  std::vector<VertexSet> pool;
  auto offer = [&](VertexSet y) {
    y = vs_sorted(y);
    if ((int)y.size() > d_max) return;
    if (seen.insert(y).second) pool.push_back(y);
  };
  offer({});
  for (int v = 0; v < g.n; v++) offer({v});
  if (g.n > 0 && components(g, {}).size() == 1) {
    Path p = gyarfas_path(g, w, 0);
    for (size_t i = 0; i < p.vertices.size(); i++)
      for (size_t len = 1; len <= (size_t)d_max && i + len <= p.vertices.size(); len++)
        offer(std::vector<int>(p.vertices.begin() + i, p.vertices.begin() + i + len));
  }
  HubResult hubs = find_hubs(g, 100000);
  if (d_max >= 2)
    for (int h1 : hubs.hubs)
      for (int h2 : hubs.hubs)
        if (h1 < h2) offer({h1, h2});
  DetectResult pyr = find_pyramid(g, 100000);
  if (pyr.cert && d_max >= 2) {
    int apex = pyr.cert->roles.at("apex")[0];
    for (int b : pyr.cert->roles.at("base")) offer({apex, b});
  }
  // greedy growth: repeatedly add the vertex that shrinks the heaviest part
  VertexSet grown;
  for (int step = 0; step < d_max; step++) {
    int best = -1;
    Rat best_weight(2);
    for (int v = 0; v < g.n; v++) {
      if (vs_contains(grown, v)) continue;
      VertexSet cand = vs_union(grown, {v});
      Rat h = is_balanced_separator(g, w, neighborhood(g, cand, true), Rat(1)).heaviest;
      if (h < best_weight) {
        best_weight = h;
        best = v;
      }
    }
    if (best < 0) break;
    grown = vs_union(grown, {best});
    offer(grown);
  }
  std::sort(pool.begin(), pool.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& y : pool)
    if (works(y)) return y;
  if (g.n <= 20) return first_subset(all, d_max, works);
  return std::nullopt;
}

}  // namespace ehf
