#include "ehf/treedec.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ehf/io.hpp"

namespace ehf {

int TreeDecomposition::width() const {
  size_t mx = 0;
  for (const auto& b : bags) mx = std::max(mx, b.size());
  return (int)mx - 1;
}

std::vector<std::vector<int>> TreeDecomposition::tree_adj() const {
  int m = nodes();
  std::vector<std::vector<int>> adj(m);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= m || v >= m) throw std::invalid_argument("tree edge out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

namespace {

VertexSet complement_of(int n, const VertexSet& s) {
  VertexSet out;
  for (int v = 0; v < n; v++)
    if (!vs_contains(s, v)) out.push_back(v);
  return out;
}

}  // namespace

TdVerdict validate_td(const Graph& g, const TreeDecomposition& td) {
  TdVerdict out;
  auto add = [&](TdViolation::Kind k, int a, int b, std::string d) {
    out.violations.push_back({k, a, b, std::move(d)});
  };
  int m = td.nodes();
  if (td.n != g.n)
    add(TdViolation::Kind::BadTree, -1, -1, "decomposition is for a different vertex count");
  if (m == 0) {
    add(TdViolation::Kind::BadTree, -1, -1, "no bags");
    return out;
  }
  bool tree_ok = true;
  if ((int)td.edges.size() != m - 1) {
    add(TdViolation::Kind::BadTree, -1, -1, "tree must have exactly one edge less than nodes");
    tree_ok = false;
  }
  for (auto [u, v] : td.edges) {
    if (u < 0 || v < 0 || u >= m || v >= m || u == v) {
      add(TdViolation::Kind::BadTree, u, v, "bad tree edge");
      tree_ok = false;
    }
  }
  if (tree_ok) {
    std::vector<std::vector<int>> adj(m);
    for (auto [u, v] : td.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> seen(m, 0);
    std::vector<int> q{0};
    seen[0] = 1;
    for (size_t h = 0; h < q.size(); h++)
      for (int t2 : adj[q[h]])
        if (!seen[t2]) {
          seen[t2] = 1;
          q.push_back(t2);
        }
    for (int t = 0; t < m; t++)
      if (!seen[t]) {
        add(TdViolation::Kind::BadTree, t, -1, "tree is not connected");
        tree_ok = false;
        break;
      }
  }
  for (int t = 0; t < m; t++) {
    const VertexSet& b = td.bags[t];
    for (size_t i = 0; i < b.size(); i++) {
      if (b[i] < 0 || b[i] >= g.n)
        add(TdViolation::Kind::BadVertex, t, b[i], "bag vertex out of range");
      else if (i > 0 && b[i] <= b[i - 1])
        add(TdViolation::Kind::BadVertex, t, b[i], "bag not sorted without duplicates");
    }
  }
  for (int v = 0; v < g.n; v++) {
    bool hit = false;
    for (const auto& b : td.bags)
      if (vs_contains(b, v)) {
        hit = true;
        break;
      }
    if (!hit)
      add(TdViolation::Kind::VertexUncovered, v, -1,
          "vertex " + std::to_string(v) + " is in no bag");
  }
  for (auto [u, v] : g.edges()) {
    bool hit = false;
    for (const auto& b : td.bags)
      if (vs_contains(b, u) && vs_contains(b, v)) {
        hit = true;
        break;
      }
    if (!hit)
      add(TdViolation::Kind::EdgeUncovered, u, v,
          "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  if (tree_ok) {
    auto adj = td.tree_adj();
    for (int v = 0; v < g.n; v++) {
      std::vector<int> holders;
      for (int t = 0; t < m; t++)
        if (vs_contains(td.bags[t], v)) holders.push_back(t);
      if (holders.size() <= 1) continue;
      std::vector<char> in(m, 0), seen(m, 0);
      for (int t : holders) in[t] = 1;
      std::vector<int> q{holders[0]};
      seen[holders[0]] = 1;
      for (size_t h = 0; h < q.size(); h++)
        for (int t2 : adj[q[h]])
          if (in[t2] && !seen[t2]) {
            seen[t2] = 1;
            q.push_back(t2);
          }
      for (int t : holders)
        if (!seen[t]) {
          add(TdViolation::Kind::NotSubtree, v, t,
              "bags holding vertex " + std::to_string(v) + " do not induce a subtree (nodes " +
                  std::to_string(holders[0]) + " and " + std::to_string(t) + " are separated)");
          break;
        }
    }
  }
  out.valid = out.violations.empty();
  return out;
}

std::string to_pace(const TreeDecomposition& td) {
  size_t maxbag = 0;
  for (const auto& b : td.bags) maxbag = std::max(maxbag, b.size());
  std::string s = "s td " + std::to_string(td.nodes()) + " " + std::to_string(maxbag) + " " +
                  std::to_string(td.n) + "\n";
  for (int t = 0; t < td.nodes(); t++) {
    s += "b " + std::to_string(t + 1);
    for (int v : td.bags[t]) s += " " + std::to_string(v + 1);
    s += "\n";
  }
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : td.edges) es.push_back({std::min(u, v) + 1, std::max(u, v) + 1});
  std::sort(es.begin(), es.end());
  for (auto [u, v] : es) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

TreeDecomposition from_pace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto err = [&](const std::string& m) { return ParseError("line " + std::to_string(lineno) + ": " + m); };
  bool have_header = false;
  long long nb = 0, w1 = 0, nv = 0;
  std::vector<std::optional<VertexSet>> bags;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    lineno++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "s") {
      if (have_header) throw err("duplicate header");
      std::string kind;
      if (!(ls >> kind >> nb >> w1 >> nv) || kind != "td")
        throw err("malformed header, expected 's td <bags> <max bag size> <n>'");
      if (nb < 1 || w1 < 0 || nv < 0) throw err("header fields out of range");
      if (ls >> tok) throw err("trailing tokens after header");
      bags.assign(nb, std::nullopt);
      have_header = true;
      continue;
    }
    if (!have_header) throw err("content before the header");
    if (tok == "b") {
      long long id;
      if (!(ls >> id)) throw err("bag line without id");
      if (id < 1 || id > nb) throw err("bag id out of range");
      if (bags[id - 1]) throw err("duplicate bag " + std::to_string(id));
      VertexSet bag;
      long long v;
      while (ls >> v) {
        if (v < 1 || v > nv) throw err("bag vertex out of range");
        bag.push_back((int)v - 1);
      }
      if (!ls.eof()) throw err("bad token in bag line");
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        throw err("duplicate vertex in bag");
      bags[id - 1] = bag;
      continue;
    }
    long long u, v;
    std::istringstream l2(line);
    if (!(l2 >> u >> v)) throw err("unrecognized line");
    if (l2 >> tok) throw err("trailing tokens after tree edge");
    if (u < 1 || u > nb || v < 1 || v > nb) throw err("tree edge endpoint out of range");
    if (u == v) throw err("tree edge is a self-loop");
    edges.push_back({(int)u - 1, (int)v - 1});
  }
  if (!have_header) throw ParseError("line 1: missing 's td' header");
  for (long long i = 0; i < nb; i++)
    if (!bags[i]) throw err("bag " + std::to_string(i + 1) + " never declared");
  if ((long long)edges.size() != nb - 1)
    throw err("expected " + std::to_string(nb - 1) + " tree edges, found " +
              std::to_string(edges.size()));
  std::set<std::pair<int, int>> norm;
  for (auto [u, v] : edges)
    if (!norm.insert({std::min(u, v), std::max(u, v)}).second) throw err("duplicate tree edge");
  TreeDecomposition td;
  td.n = (int)nv;
  for (auto& b : bags) td.bags.push_back(*b);
  td.edges = edges;
  {
    std::vector<char> seen(nb, 0);
    auto adj = td.tree_adj();
    std::vector<int> q{0};
    seen[0] = 1;
    for (size_t h = 0; h < q.size(); h++)
      for (int t2 : adj[q[h]])
        if (!seen[t2]) {
          seen[t2] = 1;
          q.push_back(t2);
        }
    for (long long t = 0; t < nb; t++)
      if (!seen[t]) throw err("tree edges do not connect all bags");
  }
  size_t maxbag = 0;
  for (const auto& b : td.bags) maxbag = std::max(maxbag, b.size());
  if ((long long)maxbag != w1)
    throw err("header declares max bag size " + std::to_string(w1) + " but bags reach " +
              std::to_string(maxbag));
  return td;
}

std::vector<Adhesion> adhesions(const TreeDecomposition& td) {
  std::vector<Adhesion> out;
  for (auto [u, v] : td.edges)
    out.push_back({u, v, vs_intersect(td.bags[u], td.bags[v])});
  return out;
}

VertexSet adhesion(const TreeDecomposition& td, int u, int v) {
  for (auto [a, b] : td.edges)
    if ((a == u && b == v) || (a == v && b == u)) return vs_intersect(td.bags[u], td.bags[v]);
  return {};
}

int max_adhesion(const TreeDecomposition& td) {
  size_t mx = 0;
  for (const auto& a : adhesions(td)) mx = std::max(mx, a.set.size());
  return (int)mx;
}

VertexSet side_vertices(const TreeDecomposition& td, int t, int toward) {
  int m = td.nodes();
  if (t < 0 || toward < 0 || t >= m || toward >= m || t == toward)
    throw std::invalid_argument("side needs two distinct tree nodes");
  auto adj = td.tree_adj();
  std::vector<char> seen(m, 0);
  seen[t] = 1;
  seen[toward] = 1;
  std::vector<int> q{toward};
  for (size_t h = 0; h < q.size(); h++)
    for (int t2 : adj[q[h]])
      if (!seen[t2]) {
        seen[t2] = 1;
        q.push_back(t2);
      }
  VertexSet u;
  seen[t] = 0;
  for (int t2 = 0; t2 < m; t2++)
    if (seen[t2]) u = vs_union(u, td.bags[t2]);
  return u;
}

InducedSubgraph torso(const Graph& g, const TreeDecomposition& td, int t) {
  if (t < 0 || t >= td.nodes()) throw std::invalid_argument("tree node out of range");
  InducedSubgraph sub = induced_subgraph(g, td.bags[t]);
  std::set<std::pair<int, int>> es;
  for (auto [u, v] : sub.graph.edges()) es.insert({u, v});
  auto adj = td.tree_adj();
  for (int t2 : adj[t]) {
    VertexSet ad = vs_intersect(td.bags[t], td.bags[t2]);
    for (size_t i = 0; i < ad.size(); i++)
      for (size_t j = i + 1; j < ad.size(); j++) {
        int u = sub.new_of_old[ad[i]], v = sub.new_of_old[ad[j]];
        es.insert({std::min(u, v), std::max(u, v)});
      }
  }
  sub.graph = make_graph((int)td.bags[t].size(),
                         std::vector<std::pair<int, int>>(es.begin(), es.end()));
  return sub;
}

TightVerdict is_tight(const Graph& g, const TreeDecomposition& td) {
  TightVerdict out;
  out.tight = true;
  for (auto [a, b] : td.edges) {
    for (auto [t, toward] : {std::pair{a, b}, std::pair{b, a}}) {
      TightEdge e;
      e.t = t;
      e.toward = toward;
      VertexSet adh = vs_intersect(td.bags[t], td.bags[toward]);
      VertexSet side = vs_minus(side_vertices(td, t, toward), td.bags[t]);
      for (const auto& d : components(g, complement_of(g.n, side))) {
        if (vs_minus(adh, neighborhood(g, d, false)).empty()) {
          e.ok = true;
          e.witness = d;
          break;
        }
      }
      if (!e.ok) out.tight = false;
      out.edges.push_back(e);
    }
  }
  return out;
}

namespace {

// size-s index combinations of pool in lexicographic order; pred returning
// true stops the scan
template <typename Pred>
bool scan_combinations(const VertexSet& pool, int s, Pred pred) {
  int n = (int)pool.size();
  if (s > n) return false;
  std::vector<int> idx(s);
  for (int i = 0; i < s; i++) idx[i] = i;
  while (true) {
    VertexSet cand;
    for (int i : idx) cand.push_back(pool[i]);
    if (pred(cand)) return true;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) i--;
    if (i < 0) return false;
    idx[i]++;
    for (int j = i + 1; j < s; j++) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LeanVerdict is_k_lean(const Graph& g, const TreeDecomposition& td, int k, bool force) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!force && (g.n > 12 || k > 4))
    throw std::invalid_argument("leanness check guardrail: n <= 12 and k <= 4 unless forced");
  LeanVerdict out;
  for (const auto& ad : adhesions(td)) {
    if ((int)ad.set.size() >= k) {
      out.why = "adhesion at tree edge " + std::to_string(ad.u) + "-" + std::to_string(ad.v) +
                " has size " + std::to_string(ad.set.size());
      out.violation = LeanViolation{ad.u, ad.v, ad.set, {}, 0};
      return out;
    }
  }
  int m = td.nodes();
  auto adj = td.tree_adj();
  // smallest adhesion along the tree path between every node pair
  std::vector<std::vector<int>> path_min(m, std::vector<int>(m, INT_MAX));
  for (int t = 0; t < m; t++) {
    std::vector<char> seen(m, 0);
    seen[t] = 1;
    std::vector<int> q{t};
    for (size_t h = 0; h < q.size(); h++)
      for (int t2 : adj[q[h]])
        if (!seen[t2]) {
          seen[t2] = 1;
          path_min[t][t2] =
              std::min(path_min[t][q[h]], (int)adhesion(td, q[h], t2).size());
          q.push_back(t2);
        }
  }
  for (int s = 1; s <= k; s++) {
    for (int t = 0; t < m; t++) {
      if ((int)td.bags[t].size() < s) continue;
      for (int t2 = t; t2 < m; t2++) {
        if ((int)td.bags[t2].size() < s) continue;
        if (path_min[t][t2] < s) continue;  // a small adhesion excuses the pair
        bool stop = scan_combinations(td.bags[t], s, [&](const VertexSet& z) {
          return scan_combinations(td.bags[t2], s, [&](const VertexSet& z2) {
            SetMenger sm = set_menger(g, z, z2);
            if (sm.k >= s) return false;
            out.violation = LeanViolation{t, t2, z, z2, sm.k};
            return true;
          });
        });
        if (stop) {
          const auto& v = *out.violation;
          out.why = "only " + std::to_string(v.linked) + " disjoint paths join a " +
                    std::to_string(s) + "-subset of bag " + std::to_string(t) + " to one of bag " +
                    std::to_string(t2);
          return out;
        }
      }
    }
  }
  out.lean = true;
  return out;
}

std::vector<int> fatness(const Graph& g, const TreeDecomposition& td) {
  std::vector<int> a(g.n + 1, 0);
  for (const auto& b : td.bags) a[g.n - (int)b.size()]++;
  return a;
}

TreeDecomposition min_fill_td(const Graph& g) {
  int n = g.n;
  TreeDecomposition td;
  td.n = n;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  std::vector<char> gone(n, 0);
  std::vector<int> pos(n, -1), elim(n, -1);
  td.bags.resize(n);
  for (int step = 0; step < n; step++) {
    int best = -1;
    long best_fill = 0;
    for (int v = 0; v < n; v++) {
      if (gone[v]) continue;
      std::vector<int> nb;
      for (int u = 0; u < n; u++)
        if (!gone[u] && a[v][u]) nb.push_back(u);
      long fill = 0;
      for (size_t i = 0; i < nb.size(); i++)
        for (size_t j = i + 1; j < nb.size(); j++)
          if (!a[nb[i]][nb[j]]) fill++;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<int> nb;
    for (int u = 0; u < n; u++)
      if (!gone[u] && a[best][u]) nb.push_back(u);
    for (size_t i = 0; i < nb.size(); i++)
      for (size_t j = i + 1; j < nb.size(); j++) a[nb[i]][nb[j]] = a[nb[j]][nb[i]] = 1;
    td.bags[step] = vs_sorted([&] {
      std::vector<int> b = nb;
      b.push_back(best);
      return b;
    }());
    gone[best] = 1;
    pos[best] = step;
    elim[step] = best;
  }
  std::vector<int> roots;
  for (int step = 0; step < n; step++) {
    int parent = INT_MAX;
    for (int u : td.bags[step])
      if (u != elim[step]) parent = std::min(parent, pos[u]);
    if (parent == INT_MAX)
      roots.push_back(step);
    else
      td.edges.push_back({step, parent});
  }
  for (size_t i = 1; i < roots.size(); i++) td.edges.push_back({roots[i - 1], roots[i]});
  return td;
}

namespace {

// fatness-minimal decompositions with adhesion < k via memoized component
// splitting: a state is a connected vertex set A with interface N(A); the
// root bag is N(A) plus a nonempty subset of A and the components of the
// remainder recurse
struct AtomicDp {
  const Graph& g;
  int k, n;
  std::vector<uint32_t> row;
  std::unordered_map<uint32_t, std::pair<std::vector<int>, uint32_t>> memo;

  AtomicDp(const Graph& gg, int kk) : g(gg), k(kk), n(gg.n), row(gg.n, 0) {
    for (int v = 0; v < n; v++)
      for (int u : g.adj[v]) row[v] |= 1u << u;
  }

  uint32_t nbmask(uint32_t m) const {
    uint32_t r = 0;
    for (uint32_t t = m; t; t &= t - 1) r |= row[std::countr_zero(t)];
    return r & ~m;
  }

  std::vector<uint32_t> comps(uint32_t m) const {
    std::vector<uint32_t> out;
    while (m) {
      uint32_t c = 1u << std::countr_zero(m);
      while (true) {
        uint32_t grown = (c | nbmask(c)) & m;
        if (grown == c) break;
        c = grown;
      }
      out.push_back(c);
      m &= ~c;
    }
    return out;
  }

  const std::pair<std::vector<int>, uint32_t>& best(uint32_t a) {
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    uint32_t w = nbmask(a);
    std::vector<int> best_fat;
    uint32_t best_b = 0;
    for (uint32_t b = a;; b = (b - 1) & a) {
      if (b) {
        std::vector<int> fat(n + 1, 0);
        fat[n - std::popcount(b | w)]++;
        bool ok = true;
        for (uint32_t c : comps(a & ~b)) {
          if (std::popcount(nbmask(c)) >= k) {
            ok = false;
            break;
          }
          const auto& sub = best(c);
          for (int i = 0; i <= n; i++) fat[i] += sub.first[i];
        }
        if (ok && (best_fat.empty() || fat < best_fat)) {
          best_fat = std::move(fat);
          best_b = b;
        }
      }
      if (b == 0) break;
    }
    return memo.emplace(a, std::make_pair(std::move(best_fat), best_b)).first->second;
  }

  int emit(uint32_t a, TreeDecomposition& td) {
    uint32_t w = nbmask(a);
    uint32_t b = memo.at(a).second;
    int id = (int)td.bags.size();
    VertexSet bag;
    for (uint32_t t = b | w; t; t &= t - 1) bag.push_back(std::countr_zero(t));
    td.bags.push_back(bag);
    for (uint32_t c : comps(a & ~b)) {
      int ch = emit(c, td);
      td.edges.push_back({id, ch});
    }
    return id;
  }
};

bool vs_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// contract bags contained in a neighboring bag
void reduce_td(TreeDecomposition& td) {
  int m = td.nodes();
  std::vector<std::set<int>> adj(m);
  for (auto [u, v] : td.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(m, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m && !changed; i++) {
      if (!alive[i]) continue;
      for (int j : adj[i]) {
        if (!vs_subset(td.bags[i], td.bags[j])) continue;
        for (int x : adj[i]) {
          if (x == j) continue;
          adj[x].erase(i);
          adj[x].insert(j);
          adj[j].insert(x);
        }
        adj[j].erase(i);
        alive[i] = 0;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> id(m, -1);
  TreeDecomposition out;
  out.n = td.n;
  for (int i = 0; i < m; i++)
    if (alive[i]) {
      id[i] = (int)out.bags.size();
      out.bags.push_back(td.bags[i]);
    }
  for (int i = 0; i < m; i++)
    if (alive[i])
      for (int j : adj[i])
        if (i < j) out.edges.push_back({id[i], id[j]});
  td = std::move(out);
}

// split a leaf bag into a chain when its content minus the adhesion falls
// apart
void leaf_split(const Graph& g, TreeDecomposition& td) {
  auto adj = td.tree_adj();
  int m0 = td.nodes();
  for (int t = 0; t < m0; t++) {
    if ((int)adj[t].size() > 1) continue;
    VertexSet adh =
        adj[t].empty() ? VertexSet{} : vs_intersect(td.bags[t], td.bags[adj[t][0]]);
    VertexSet inner = vs_minus(td.bags[t], adh);
    auto cs = components(g, complement_of(g.n, inner));
    if (cs.size() < 2) continue;
    td.bags[t] = vs_union(adh, cs[0]);
    int prev = t;
    for (size_t i = 1; i < cs.size(); i++) {
      int nid = td.nodes();
      td.bags.push_back(vs_union(adh, cs[i]));
      td.edges.push_back({prev, nid});
      prev = nid;
    }
  }
}

}  // namespace

AtomicTd atomic_td(const Graph& g, int k, TdMode mode, int guardrail) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (mode == TdMode::Heuristic) {
    AtomicTd out;
    out.td = min_fill_td(g);
    reduce_td(out.td);
    leaf_split(g, out.td);
    out.optimal = false;
    return out;
  }
  if (g.n > guardrail || g.n > 25)
    throw std::invalid_argument("exhaustive decomposition search guardrail exceeded");
  AtomicTd out;
  out.optimal = true;
  out.td.n = g.n;
  if (g.n == 0) {
    out.td.bags.push_back({});
    return out;
  }
  AtomicDp dp(g, k);
  int prev = -1;
  for (const auto& comp : components(g, {})) {
    uint32_t m = 0;
    for (int v : comp) m |= 1u << v;
    dp.best(m);
    int root = dp.emit(m, out.td);
    if (prev >= 0) out.td.edges.push_back({prev, root});
    prev = root;
  }
  return out;
}

int center_node(const Graph& g, const TreeDecomposition& td, const WeightFunction& w) {
  if (!w.normal()) throw std::invalid_argument("weight function must be normal");
  if ((int)w.w.size() != g.n) throw std::invalid_argument("weight vector size mismatch");
  if (!validate_td(g, td).valid) throw std::invalid_argument("invalid tree decomposition");
  Rat half(1, 2);
  auto adj = td.tree_adj();
  for (int t = 0; t < td.nodes(); t++) {
    bool ok = true;
    for (int t2 : adj[t]) {
      if (w.of(vs_minus(side_vertices(td, t, t2), td.bags[t])) > half) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  throw std::logic_error("no center found");
}

std::optional<std::pair<int, int>> basket_pair(const Graph& g, const TreeDecomposition& td, int a,
                                               int b) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
    throw std::invalid_argument("need two distinct vertices");
  if (g.has_edge(a, b)) throw std::invalid_argument("endpoints must be nonadjacent");
  if (!validate_td(g, td).valid) throw std::invalid_argument("invalid tree decomposition");
  VertexSet ab = vs_sorted({a, b});
  for (int t1 = 0; t1 < td.nodes(); t1++) {
    for (int t2 = t1; t2 < td.nodes(); t2++) {
      VertexSet u = vs_union(td.bags[t1], td.bags[t2]);
      if (shortest_path(g, a, b, vs_minus(u, ab))) continue;  // a path dodges both bags
      bool ok = true;
      for (const auto& d : components(g, u)) {
        VertexSet nd = neighborhood(g, d, false);
        if (vs_contains(nd, a) && vs_contains(nd, b)) {
          ok = false;
          break;
        }
      }
      if (ok) return std::make_pair(t1, t2);
    }
  }
  return std::nullopt;
}

TdBuild td_from_balanced_separators(const Graph& g, const SeparatorOracle& oracle, const Rat& c,
                                    int k) {
  if (k < 1) throw std::invalid_argument("separator size bound must be positive");
  if (c < Rat(1, 2) || c >= Rat(1))
    throw std::invalid_argument("balance fraction must be in [1/2, 1)");
  TdBuild out;
  out.td.n = g.n;
  if (g.n == 0) {
    out.td.bags.push_back({});
    out.ok = true;
    return out;
  }
  Rat q = Rat(k) / (Rat(1) - c);
  long long s = q.num / q.den + (q.num % q.den ? 1 : 0);
  long long leaf = s + k;

  auto fail = [&](std::string e) {
    if (out.error.empty()) out.error = std::move(e);
  };
  auto query = [&](const WeightFunction& wq) -> std::optional<VertexSet> {
    OracleCall call;
    call.w = wq;
    call.returned = vs_sorted(oracle(wq));
    std::string note;
    for (int v : call.returned)
      if (v < 0 || v >= g.n) note = "returned vertex out of range";
    if (note.empty() && (int)call.returned.size() > k) note = "returned set exceeds the size bound";
    if (note.empty()) {
      auto bal = is_balanced_separator(g, wq, call.returned, c);
      if (!bal.balanced)
        note = "returned set leaves a component of weight " + bal.heaviest.str();
    }
    call.ok = note.empty();
    call.note = note;
    out.audit.push_back(call);
    if (!call.ok) {
      fail("oracle call " + std::to_string(out.audit.size() - 1) + ": " + note);
      return std::nullopt;
    }
    return call.returned;
  };
  auto uniform_on = [&](const VertexSet& sup) {
    std::map<int, Rat> m;
    for (int v : sup) m[v] = Rat(1);
    return WeightFunction::from_map(g.n, m, true);
  };

  std::function<int(const VertexSet&, const VertexSet&)> build =
      [&](const VertexSet& comp, const VertexSet& bound) -> int {
    VertexSet cw = vs_union(comp, bound);
    if ((long long)cw.size() <= leaf) {
      out.td.bags.push_back(cw);
      return (int)out.td.bags.size() - 1;
    }
    // query uniformly on the boundary padded to s+1 with low part vertices: a
    // balanced answer must then cut the part, since a component holding the
    // whole part would also hold the surviving boundary and the pad, more
    // than a c fraction of the support
    VertexSet support = bound;
    for (int v : comp) {
      if ((long long)support.size() > s) break;
      support.push_back(v);
    }
    support = vs_sorted(support);
    auto x = query(uniform_on(support));
    if (!x) return -1;
    VertexSet bag = vs_union(bound, vs_intersect(*x, cw));
    if (vs_intersect(bag, comp).empty()) throw std::logic_error("balanced answer avoided the part");
    if ((long long)bag.size() > leaf) {
      fail("bag of size " + std::to_string(bag.size()) +
           " exceeds the width bound after oracle call " + std::to_string(out.audit.size() - 1));
      return -1;
    }
    int id = (int)out.td.bags.size();
    out.td.bags.push_back(bag);
    for (const auto& d : components(g, complement_of(g.n, vs_minus(comp, bag)))) {
      VertexSet nb = neighborhood(g, d, false);
      if (!vs_minus(nb, bag).empty()) throw std::logic_error("child boundary escaped its bag");
      int ch = build(d, nb);
      if (ch < 0) return -1;
      out.td.edges.push_back({id, ch});
    }
    return id;
  };

  int prev = -1;
  for (const auto& comp : components(g, {})) {
    int root = build(comp, {});
    if (root < 0) return out;
    if (prev >= 0) out.td.edges.push_back({prev, root});
    prev = root;
  }
  out.ok = true;
  return out;
}

ShrinkResult shrink_separator(const Graph& g, const TreeDecomposition& td, const WeightFunction& w,
                              const VertexSet& k_clique, const VertexSet& xs, int L) {
  if (L < 1) throw std::invalid_argument("L must be positive");
  if (!w.normal() || (int)w.w.size() != g.n)
    throw std::invalid_argument("weight function must be normal over g");
  for (int v : vs_union(k_clique, xs))
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
  ShrinkResult out;
  auto fail = [&](std::string e) {
    out.error = std::move(e);
    return out;
  };
  auto vd = validate_td(g, td);
  if (!vd.valid) return fail("tree decomposition invalid: " + vd.violations.front().detail);
  auto tight = is_tight(g, td);
  if (!tight.tight) return fail("tree decomposition is not tight");
  if (g.n <= 12 && 3 * L <= 4) {
    auto lv = is_k_lean(g, td, 3 * L);
    if (!lv.lean) return fail("tree decomposition is not 3L-lean: " + lv.why);
    out.lean_checked = true;
  }
  out.t0 = center_node(g, td, w);
  out.k_set = high_fan_vertices(g, td.bags[out.t0], 3 * L);
  if (out.k_set != k_clique)
    return fail("k_clique does not match the high-fan set of the center bag");
  for (size_t i = 0; i < out.k_set.size(); i++)
    for (size_t j = i + 1; j < out.k_set.size(); j++)
      if (!g.has_edge(out.k_set[i], out.k_set[j]))
        return fail("high-fan set is not a clique: " + std::to_string(out.k_set[i]) + " and " +
                    std::to_string(out.k_set[j]) + " are nonadjacent");
  if (!vs_intersect(xs, out.k_set).empty())
    return fail("xs meets the clique");
  Rat half(1, 2);
  for (const auto& d : components(g, vs_union(out.k_set, neighborhood(g, xs, true)))) {
    if (w.of(d) > half)
      return fail("component of weight " + w.of(d).str() +
                  " survives outside the clique and N[xs]");
  }
  out.y = out.k_set;
  for (int v : xs) {
    auto fs = fan_separator(g, v, vs_minus(td.bags[out.t0], {v}));
    VertexSet delta = vs_union(fs.cut, {v});
    if ((int)delta.size() > 3 * L)
      return fail("fan cut of vertex " + std::to_string(v) + " is larger than 3L");
    out.deltas.push_back(delta);
    out.y = vs_union(out.y, delta);
  }
  if ((int)vs_minus(out.y, out.k_set).size() > 3 * L * (int)xs.size())
    return fail("output exceeds the 3L|X| bound");
  out.balance = is_balanced_separator(g, w, out.y, half);
  if (!out.balance.balanced)
    return fail("output not balanced: component of weight " + out.balance.heaviest.str());
  out.ok = true;
  return out;
}

namespace {

// elimination-prefix treewidth DP helpers on bitmask graphs
uint32_t grow_component(const std::vector<uint32_t>& row, uint32_t inside, int v) {
  uint32_t comp = 1u << v, frontier = comp;
  while (frontier) {
    uint32_t nxt = 0;
    for (uint32_t t = frontier; t; t &= t - 1) nxt |= row[std::countr_zero(t)];
    frontier = nxt & inside & ~comp;
    comp |= frontier;
  }
  return comp;
}

int q_value(const std::vector<uint32_t>& row, uint32_t eliminated, int v) {
  uint32_t inside = eliminated | (1u << v);
  uint32_t comp = grow_component(row, inside, v);
  uint32_t nb = 0;
  for (uint32_t t = comp; t; t &= t - 1) nb |= row[std::countr_zero(t)];
  return std::popcount(nb & ~inside);
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, uint64_t budget) {
  TreewidthResult out;
  int n = g.n;
  if (n == 0) {
    out.lower = out.upper = -1;
    out.exact = true;
    TreeDecomposition td;
    td.bags.push_back({});
    out.witness = td;
    return out;
  }
  if (n <= 20 && (1ull << n) <= budget) {
    std::vector<uint32_t> row(n, 0);
    for (int v = 0; v < n; v++)
      for (int u : g.adj[v]) row[v] |= 1u << u;
    uint32_t full = (1u << n) - 1;
    std::vector<int8_t> f(full + 1, 0);
    f[0] = -1;
    for (uint32_t m = 1; m <= full; m++) {
      int best = INT_MAX;
      for (uint32_t t = m; t; t &= t - 1) {
        int v = std::countr_zero(t);
        uint32_t x = m & ~(1u << v);
        best = std::min(best, std::max((int)f[x], q_value(row, x, v)));
      }
      f[m] = (int8_t)best;
    }
    // recover an elimination order achieving f[full]
    std::vector<int> order;
    uint32_t m = full;
    while (m) {
      for (uint32_t t = m; t; t &= t - 1) {
        int v = std::countr_zero(t);
        uint32_t x = m & ~(1u << v);
        if (std::max((int)f[x], q_value(row, x, v)) == f[m]) {
          order.push_back(v);
          m = x;
          break;
        }
      }
    }
    std::reverse(order.begin(), order.end());
    TreeDecomposition td;
    td.n = n;
    td.bags.resize(n);
    std::vector<int> pos(n);
    for (int i = 0; i < n; i++) pos[order[i]] = i;
    uint32_t eliminated = 0;
    std::vector<int> roots;
    for (int i = 0; i < n; i++) {
      int v = order[i];
      uint32_t inside = eliminated | (1u << v);
      uint32_t comp = grow_component(row, inside, v);
      uint32_t nb = 0;
      for (uint32_t t = comp; t; t &= t - 1) nb |= row[std::countr_zero(t)];
      nb &= ~inside;
      VertexSet bag{v};
      int parent = INT_MAX;
      for (uint32_t t = nb; t; t &= t - 1) {
        int u = std::countr_zero(t);
        bag.push_back(u);
        parent = std::min(parent, pos[u]);
      }
      td.bags[i] = vs_sorted(bag);
      if (parent == INT_MAX)
        roots.push_back(i);
      else
        td.edges.push_back({i, parent});
      eliminated = inside;
    }
    for (size_t i = 1; i < roots.size(); i++) td.edges.push_back({roots[i - 1], roots[i]});
    out.lower = out.upper = f[full];
    out.exact = true;
    out.witness = std::move(td);
    return out;
  }
  auto deg = degeneracy_order(g);
  auto cq = clique_number(g, budget);
  out.lower = std::max(deg.degeneracy, cq.size - 1);
  TreeDecomposition mf = min_fill_td(g);
  out.upper = mf.width();
  out.exact = out.lower == out.upper;
  out.witness = std::move(mf);
  return out;
}

}  // namespace ehf
