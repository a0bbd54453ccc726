#include "ehf/structures.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace ehf {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Present: return "present";
    case Verdict::Absent: return "absent";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

bool is_hole(const Graph& g, const std::vector<int>& cycle) {
  int k = (int)cycle.size();
  if (k < 4) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; i++) {
    if (sorted[i] < 0 || sorted[i] >= g.n) return false;
    if (i > 0 && sorted[i] == sorted[i - 1]) return false;
  }
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++) {
      bool consec = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consec) return false;
    }
  return true;
}

bool is_even_hole(const Graph& g, const std::vector<int>& cycle) {
  return is_hole(g, cycle) && cycle.size() % 2 == 0;
}

namespace {

bool distinct_valid(const Graph& g, const std::vector<int>& vs) {
  std::vector<int> s = vs;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); i++) {
    if (s[i] < 0 || s[i] >= g.n) return false;
    if (i > 0 && s[i] == s[i - 1]) return false;
  }
  return true;
}

// true iff every edge inside `all` is consecutive in one of the paths or lies
// inside one of the cliques
bool edges_exactly(const Graph& g, const std::vector<int>& all,
                   const std::vector<std::vector<int>>& paths,
                   const std::vector<std::vector<int>>& cliques) {
  for (size_t i = 0; i < all.size(); i++)
    for (size_t j = i + 1; j < all.size(); j++) {
      int u = all[i], v = all[j];
      bool expect = false;
      for (auto& p : paths)
        for (size_t t = 0; t + 1 < p.size(); t++)
          if ((p[t] == u && p[t + 1] == v) || (p[t] == v && p[t + 1] == u)) expect = true;
      for (auto& c : cliques)
        if (vs_contains(c, u) && vs_contains(c, v)) expect = true;
      if (g.has_edge(u, v) != expect) return false;
    }
  return true;
}

}  // namespace

bool is_theta(const Graph& g, int a, int b, const std::array<std::vector<int>, 3>& paths) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b) return false;
  if (g.has_edge(a, b)) return false;
  std::vector<int> all = {a, b};
  for (auto& p : paths) {
    if (p.size() < 3) return false;
    if (p.front() != a || p.back() != b) return false;
    if (!is_induced_path(g, p)) return false;
    for (size_t i = 1; i + 1 < p.size(); i++) all.push_back(p[i]);
  }
  if (!distinct_valid(g, all)) return false;
  // interiors pairwise anticomplete
  for (int i = 0; i < 3; i++)
    for (int j = i + 1; j < 3; j++)
      for (size_t s = 1; s + 1 < paths[i].size(); s++)
        for (size_t t = 1; t + 1 < paths[j].size(); t++)
          if (g.has_edge(paths[i][s], paths[j][t])) return false;
  return true;
}

bool is_prism(const Graph& g, const std::array<int, 3>& tri_a, const std::array<int, 3>& tri_b,
              const std::array<std::vector<int>, 3>& paths) {
  std::vector<int> all(tri_a.begin(), tri_a.end());
  all.insert(all.end(), tri_b.begin(), tri_b.end());
  std::vector<std::vector<int>> ps;
  for (int i = 0; i < 3; i++) {
    auto& p = paths[i];
    if (p.size() < 2) return false;
    if (p.front() != tri_a[i] || p.back() != tri_b[i]) return false;
    for (size_t t = 1; t + 1 < p.size(); t++) all.push_back(p[t]);
    ps.push_back(p);
  }
  if (!distinct_valid(g, all)) return false;
  std::vector<int> ta(tri_a.begin(), tri_a.end()), tb(tri_b.begin(), tri_b.end());
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  return edges_exactly(g, all, ps, {ta, tb});
}

bool is_pyramid(const Graph& g, int apex, const std::array<int, 3>& base,
                const std::array<std::vector<int>, 3>& paths) {
  std::vector<int> all = {apex, base[0], base[1], base[2]};
  std::vector<std::vector<int>> ps;
  int long_paths = 0;
  for (int i = 0; i < 3; i++) {
    auto& p = paths[i];
    if (p.size() < 2) return false;
    if (p.front() != apex || p.back() != base[i]) return false;
    for (size_t t = 1; t + 1 < p.size(); t++) all.push_back(p[t]);
    if (p.size() >= 3) long_paths++;
    ps.push_back(p);
  }
  if (long_paths < 2) return false;
  if (!distinct_valid(g, all)) return false;
  std::vector<int> bs(base.begin(), base.end());
  std::sort(bs.begin(), bs.end());
  return edges_exactly(g, all, ps, {bs});
}

bool is_wheel(const Graph& g, const std::vector<int>& hole, int center) {
  if (center < 0 || center >= g.n) return false;
  if (std::find(hole.begin(), hole.end(), center) != hole.end()) return false;
  if (!is_hole(g, hole)) return false;
  int spokes = 0;
  for (int h : hole)
    if (g.has_edge(h, center)) spokes++;
  return spokes >= 3;
}

WheelFlags wheel_flags(const Graph& g, const std::vector<int>& hole, int center) {
  WheelFlags f;
  int h = (int)hole.size();
  std::vector<int> pos;
  for (int i = 0; i < h; i++)
    if (g.has_edge(hole[i], center)) pos.push_back(i);
  f.spokes = (int)pos.size();
  f.even = f.spokes % 2 == 0;
  f.universal = f.spokes == h;
  int adjacent_pairs = 0;
  for (size_t i = 0; i < pos.size(); i++)
    for (size_t j = i + 1; j < pos.size(); j++) {
      int d = pos[j] - pos[i];
      if (d == 1 || d == h - 1) adjacent_pairs++;
    }
  f.twin = f.spokes == 3 && adjacent_pairs == 2;
  f.short_pyramid = f.spokes == 3 && adjacent_pairs == 1;
  f.proper = f.spokes >= 3 && !f.twin && !f.short_pyramid;
  return f;
}

std::vector<std::vector<int>> wheel_sectors(const Graph& g, const std::vector<int>& hole,
                                            int center) {
  int h = (int)hole.size();
  std::vector<int> pos;
  for (int i = 0; i < h; i++)
    if (g.has_edge(hole[i], center)) pos.push_back(i);
  std::vector<std::vector<int>> out;
  int s = (int)pos.size();
  if (s == 0) return out;
  for (int j = 0; j < s; j++) {
    int from = pos[j], to = pos[(j + 1) % s];
    std::vector<int> sec;
    int i = from;
    sec.push_back(hole[i]);
    do {
      i = (i + 1) % h;
      sec.push_back(hole[i]);
    } while (i != to);
    out.push_back(sec);
  }
  return out;
}

namespace {

enum class Kind { C4, Hole, EvenHole, Theta, Prism, Pyramid, Wheel };

bool wheel_filter_ok(const WheelFlags& f, WheelFilter filter) {
  if (f.spokes < 3) return false;
  switch (filter) {
    case WheelFilter::Any: return true;
    case WheelFilter::Even: return f.even;
    case WheelFilter::Proper: return f.proper;
    case WheelFilter::ProperNonUniversal: return f.proper && !f.universal;
  }
  return false;
}

// Subsets are explored as sorted sequences in lexicographic order (preorder
// DFS, children append a vertex above the current maximum). Pruning predicates
// hold for every subset of a valid certificate, so the first complete subset
// found is the lexicographically least certificate vertex set.
struct Search {
  const Graph& g;
  Kind kind;
  WheelFilter filter = WheelFilter::Any;
  uint64_t budget = kDefaultBudget;
  // invoked on a finished hole (cyclic order); may reject it (hub search)
  std::function<bool(const std::vector<int>&)> accept;

  uint64_t nodes = 0;
  bool exhausted = false;
  std::optional<Certificate> found;

  std::vector<int> cur, deg;
  int m = 0;

  explicit Search(const Graph& gg, Kind k) : g(gg), kind(k) {}

  void push(int w) {
    int dw = 0;
    for (size_t i = 0; i < cur.size(); i++)
      if (g.has_edge(cur[i], w)) {
        deg[i]++;
        dw++;
      }
    cur.push_back(w);
    deg.push_back(dw);
    m += dw;
  }

  void pop() {
    int w = cur.back();
    m -= deg.back();
    cur.pop_back();
    deg.pop_back();
    for (size_t i = 0; i < cur.size(); i++)
      if (g.has_edge(cur[i], w)) deg[i]--;
  }

  int comps(int skip = -1) const {
    int k = (int)cur.size();
    std::vector<char> seen(k, 0);
    if (skip >= 0) seen[skip] = 1;
    int c = 0;
    std::vector<int> stack;
    for (int i = 0; i < k; i++) {
      if (seen[i]) continue;
      c++;
      seen[i] = 1;
      stack.push_back(i);
      while (!stack.empty()) {
        int at = stack.back();
        stack.pop_back();
        for (int j = 0; j < k; j++)
          if (!seen[j] && g.has_edge(cur[at], cur[j])) {
            seen[j] = 1;
            stack.push_back(j);
          }
      }
    }
    return c;
  }

  // cur is a single spanning cycle; return it in canonical cyclic order
  std::vector<int> cycle_order() const {
    int k = (int)cur.size();
    int start = cur[0];
    std::vector<int> nb;
    for (int i = 1; i < k; i++)
      if (g.has_edge(start, cur[i])) nb.push_back(cur[i]);
    std::vector<int> seq = {start, std::min(nb[0], nb[1])};
    while ((int)seq.size() < k) {
      int at = seq.back(), prev = seq[seq.size() - 2];
      for (int i = 0; i < k; i++) {
        int v = cur[i];
        if (v != prev && v != at && g.has_edge(at, v)) {
          seq.push_back(v);
          break;
        }
      }
    }
    return seq;
  }

  bool spanning_cycle() const {
    int k = (int)cur.size();
    if (k < 3 || m != k) return false;
    for (int d : deg)
      if (d != 2) return false;
    return comps() == 1;
  }

  // follow a degree-2 chain inside cur starting with edge from->first; stops
  // when reaching a vertex whose degree differs from 2 (or `from` again)
  std::vector<int> walk_chain(int from, int first) const {
    std::vector<int> seq = {from, first};
    int guard = (int)cur.size() + 2;
    while ((int)seq.size() <= guard) {
      int at = seq.back();
      if (at == from) break;
      int idx = -1;
      for (size_t i = 0; i < cur.size(); i++)
        if (cur[i] == at) idx = (int)i;
      if (deg[idx] != 2) break;
      int prev = seq[seq.size() - 2];
      for (size_t i = 0; i < cur.size(); i++) {
        int v = cur[i];
        if (v != prev && v != at && g.has_edge(at, v)) {
          seq.push_back(v);
          break;
        }
      }
      if (seq.back() == at) break;  // dead end, should not happen on chains
    }
    return seq;
  }

  int triangles() const {
    int k = (int)cur.size(), t = 0;
    for (int i = 0; i < k; i++)
      for (int j = i + 1; j < k; j++) {
        if (!g.has_edge(cur[i], cur[j])) continue;
        for (int l = j + 1; l < k; l++)
          if (g.has_edge(cur[i], cur[l]) && g.has_edge(cur[j], cur[l])) t++;
      }
    return t;
  }

  bool complete() {
    switch (kind) {
      case Kind::C4:
        if (cur.size() != 4 || !spanning_cycle()) return false;
        emit_hole("c4");
        return true;
      case Kind::Hole:
        if (cur.size() < 4 || !spanning_cycle()) return false;
        {
          auto order = cycle_order();
          if (accept && !accept(order)) return false;
          emit_cycle("hole", order);
        }
        return true;
      case Kind::EvenHole:
        if (cur.size() < 4 || cur.size() % 2 != 0 || !spanning_cycle()) return false;
        emit_hole("even_hole");
        return true;
      case Kind::Theta: return complete_theta();
      case Kind::Prism: return complete_prism();
      case Kind::Pyramid: return complete_pyramid();
      case Kind::Wheel: return complete_wheel();
    }
    return false;
  }

  void emit_hole(const char* kindname) { emit_cycle(kindname, cycle_order()); }

  void emit_cycle(const char* kindname, const std::vector<int>& order) {
    Certificate c;
    c.kind = kindname;
    c.roles["cycle"] = order;
    c.vertices = cur;
    std::sort(c.vertices.begin(), c.vertices.end());
    found = c;
  }

  bool complete_theta() {
    int k = (int)cur.size();
    if (k < 5 || m != k + 1) return false;
    int a = -1, b = -1;
    for (int i = 0; i < k; i++) {
      if (deg[i] == 3) {
        if (a < 0)
          a = cur[i];
        else if (b < 0)
          b = cur[i];
        else
          return false;
      } else if (deg[i] != 2)
        return false;
    }
    if (b < 0) return false;
    if (g.has_edge(a, b)) return false;
    std::vector<std::vector<int>> paths;
    size_t covered = 2;
    for (int v : cur) {
      if (v == a || !g.has_edge(a, v)) continue;
      auto w = walk_chain(a, v);
      if (w.back() != b) return false;
      covered += w.size() - 2;
      paths.push_back(w);
    }
    if (paths.size() != 3 || covered != (size_t)k) return false;
    std::sort(paths.begin(), paths.end());
    Certificate c;
    c.kind = "theta";
    c.roles["ends"] = {a, b};
    for (int i = 0; i < 3; i++) c.roles["path" + std::to_string(i + 1)] = paths[i];
    c.vertices = cur;
    std::sort(c.vertices.begin(), c.vertices.end());
    found = c;
    return true;
  }

  bool complete_prism() {
    int k = (int)cur.size();
    if (k < 6) return false;
    std::vector<int> d3;
    for (int i = 0; i < k; i++) {
      if (deg[i] == 3)
        d3.push_back(cur[i]);
      else if (deg[i] != 2)
        return false;
    }
    if (d3.size() != 6) return false;
    // try the 10 ways to split the six degree-3 vertices into two triples
    for (int mask = 0; mask < 64; mask++) {
      if (__builtin_popcount(mask) != 3) continue;
      if (!(mask & 1)) continue;  // fix d3[0] in the first triple
      std::array<int, 3> ta{}, tb{};
      int na = 0, nb = 0;
      for (int i = 0; i < 6; i++)
        (mask >> i & 1) ? ta[na++] = d3[i] : tb[nb++] = d3[i];
      if (!g.has_edge(ta[0], ta[1]) || !g.has_edge(ta[0], ta[2]) || !g.has_edge(ta[1], ta[2]))
        continue;
      if (!g.has_edge(tb[0], tb[1]) || !g.has_edge(tb[0], tb[2]) || !g.has_edge(tb[1], tb[2]))
        continue;
      std::array<std::vector<int>, 3> paths;
      std::array<int, 3> partner{-1, -1, -1};
      size_t covered = 6;
      bool ok = true;
      for (int i = 0; i < 3 && ok; i++) {
        int start = -1;
        for (int v : cur)
          if (v != ta[i] && g.has_edge(ta[i], v) && v != ta[(i + 1) % 3] && v != ta[(i + 2) % 3])
            start = v;
        if (start < 0) {
          ok = false;
          break;
        }
        auto w = walk_chain(ta[i], start);
        int end = w.back();
        bool in_tb = end == tb[0] || end == tb[1] || end == tb[2];
        if (!in_tb) {
          ok = false;
          break;
        }
        for (int j = 0; j < i; j++)
          if (partner[j] == end) ok = false;
        partner[i] = end;
        covered += w.size() - 2;
        paths[i] = w;
      }
      if (!ok || covered != (size_t)k) continue;
      if (!is_prism(g, ta, {partner[0], partner[1], partner[2]}, paths)) continue;
      // canonical layout: triangle1 holds the least degree-3 vertex, ascending
      std::array<int, 3> ta_s = ta;
      std::sort(ta_s.begin(), ta_s.end());
      std::array<std::vector<int>, 3> paths_s;
      std::array<int, 3> tb_s{};
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
          if (ta[j] == ta_s[i]) {
            paths_s[i] = paths[j];
            tb_s[i] = partner[j];
          }
      Certificate c;
      c.kind = "prism";
      c.roles["triangle1"] = {ta_s[0], ta_s[1], ta_s[2]};
      c.roles["triangle2"] = {tb_s[0], tb_s[1], tb_s[2]};
      for (int i = 0; i < 3; i++) c.roles["path" + std::to_string(i + 1)] = paths_s[i];
      c.vertices = cur;
      std::sort(c.vertices.begin(), c.vertices.end());
      found = c;
      return true;
    }
    return false;
  }

  bool complete_pyramid() {
    int k = (int)cur.size();
    if (k < 6 || m != k + 2) return false;
    std::vector<int> d3;
    for (int i = 0; i < k; i++) {
      if (deg[i] == 3)
        d3.push_back(cur[i]);
      else if (deg[i] != 2)
        return false;
    }
    if (d3.size() != 4) return false;
    for (int ai = 0; ai < 4; ai++) {
      int apex = d3[ai];
      std::array<int, 3> base{};
      int nb = 0;
      for (int i = 0; i < 4; i++)
        if (i != ai) base[nb++] = d3[i];
      if (!g.has_edge(base[0], base[1]) || !g.has_edge(base[0], base[2]) ||
          !g.has_edge(base[1], base[2]))
        continue;
      std::array<std::vector<int>, 3> paths;
      std::array<int, 3> hit{-1, -1, -1};
      size_t covered = 4;
      bool ok = true;
      int walks = 0;
      for (int v : cur) {
        if (v == apex || !g.has_edge(apex, v)) continue;
        if (walks == 3) {
          ok = false;
          break;
        }
        auto w = walk_chain(apex, v);
        int end = w.back();
        int bi = -1;
        for (int i = 0; i < 3; i++)
          if (base[i] == end) bi = i;
        if (bi < 0 || hit[bi] >= 0) {
          ok = false;
          break;
        }
        hit[bi] = 1;
        paths[bi] = w;
        covered += w.size() - 2;
        walks++;
      }
      if (!ok || walks != 3 || covered != (size_t)k) continue;
      if (!is_pyramid(g, apex, base, paths)) continue;
      std::array<int, 3> base_s = base;
      std::sort(base_s.begin(), base_s.end());
      std::array<std::vector<int>, 3> paths_s;
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
          if (base[j] == base_s[i]) paths_s[i] = paths[j];
      Certificate c;
      c.kind = "pyramid";
      c.roles["apex"] = {apex};
      c.roles["base"] = {base_s[0], base_s[1], base_s[2]};
      for (int i = 0; i < 3; i++) c.roles["path" + std::to_string(i + 1)] = paths_s[i];
      c.vertices = cur;
      std::sort(c.vertices.begin(), c.vertices.end());
      found = c;
      return true;
    }
    return false;
  }

  bool complete_wheel() {
    int k = (int)cur.size();
    if (k < 5) return false;
    for (int xi = 0; xi < k; xi++) {
      int x = cur[xi];
      bool ok = true;
      int mm = 0;
      for (int i = 0; i < k && ok; i++) {
        if (i == xi) continue;
        int d = deg[i] - (g.has_edge(cur[i], x) ? 1 : 0);
        if (d != 2) ok = false;
        mm += d;
      }
      if (!ok || mm != 2 * (k - 1)) continue;
      if (comps(xi) != 1) continue;
      // rebuild the cycle on cur minus x
      std::vector<int> hole;
      {
        std::vector<int> rest;
        for (int v : cur)
          if (v != x) rest.push_back(v);
        int start = rest[0];
        std::vector<int> nbs;
        for (int v : rest)
          if (v != start && g.has_edge(start, v)) nbs.push_back(v);
        if (nbs.size() != 2) continue;
        hole = {start, std::min(nbs[0], nbs[1])};
        while ((int)hole.size() < k - 1) {
          int at = hole.back(), prev = hole[hole.size() - 2];
          for (int v : rest)
            if (v != at && v != prev && g.has_edge(at, v)) {
              hole.push_back(v);
              break;
            }
        }
      }
      auto f = wheel_flags(g, hole, x);
      if (!wheel_filter_ok(f, filter)) continue;
      Certificate c;
      c.kind = "wheel";
      c.roles["hole"] = hole;
      c.roles["center"] = {x};
      std::vector<int> spokes;
      for (int h : hole)
        if (g.has_edge(h, x)) spokes.push_back(h);
      std::sort(spokes.begin(), spokes.end());
      c.roles["spokes"] = spokes;
      c.vertices = cur;
      std::sort(c.vertices.begin(), c.vertices.end());
      found = c;
      return true;
    }
    return false;
  }

  bool feasible() const {
    int k = (int)cur.size();
    switch (kind) {
      case Kind::C4: {
        if (k > 3) return false;
        for (int d : deg)
          if (d > 2) return false;
        return m == k - comps();
      }
      case Kind::Hole:
      case Kind::EvenHole: {
        for (int d : deg)
          if (d > 2) return false;
        return m == k - comps();
      }
      case Kind::Theta: {
        int d3 = 0;
        std::vector<int> hi;
        for (int i = 0; i < k; i++) {
          if (deg[i] > 3) return false;
          if (deg[i] == 3) {
            d3++;
            hi.push_back(i);
          }
        }
        if (d3 > 2) return false;
        if (d3 == 2 && g.has_edge(cur[hi[0]], cur[hi[1]])) return false;
        return m - k + comps() <= 1;
      }
      case Kind::Prism: {
        int d3 = 0;
        for (int i = 0; i < k; i++) {
          if (deg[i] > 3) return false;
          if (deg[i] == 3) {
            d3++;
            // its three neighbours must include an adjacent pair
            std::vector<int> nb;
            for (int j = 0; j < k; j++)
              if (j != i && g.has_edge(cur[i], cur[j])) nb.push_back(cur[j]);
            bool pair = false;
            for (size_t s = 0; s < nb.size(); s++)
              for (size_t t = s + 1; t < nb.size(); t++)
                if (g.has_edge(nb[s], nb[t])) pair = true;
            if (!pair) return false;
          }
        }
        if (d3 > 6) return false;
        if (triangles() > 2) return false;
        return m - k + comps() <= 3;
      }
      case Kind::Pyramid: {
        int d3 = 0, apexish = 0;
        for (int i = 0; i < k; i++) {
          if (deg[i] > 3) return false;
          if (deg[i] == 3) {
            d3++;
            std::vector<int> nb;
            for (int j = 0; j < k; j++)
              if (j != i && g.has_edge(cur[i], cur[j])) nb.push_back(cur[j]);
            bool pair = false;
            for (size_t s = 0; s < nb.size(); s++)
              for (size_t t = s + 1; t < nb.size(); t++)
                if (g.has_edge(nb[s], nb[t])) pair = true;
            if (!pair) apexish++;
          }
        }
        if (d3 > 4 || apexish > 1) return false;
        if (triangles() > 1) return false;
        return m - k + comps() <= 2;
      }
      case Kind::Wheel: {
        // hole part must stay a disjoint union of paths (or one finished
        // cycle); the center may be any current vertex or still unseen
        if (hole_partial(-1)) return true;
        for (int i = 0; i < k; i++)
          if (hole_partial(i)) return true;
        return false;
      }
    }
    return false;
  }

  bool hole_partial(int skip) const {
    int k = (int)cur.size();
    int mm = 0, cnt = 0;
    for (int i = 0; i < k; i++) {
      if (i == skip) continue;
      cnt++;
      int d = deg[i];
      if (skip >= 0 && g.has_edge(cur[i], cur[skip])) d--;
      if (d > 2) return false;
      mm += d;
    }
    mm /= 2;
    int c = comps(skip);
    if (mm == cnt - c) return true;                       // forest of paths
    return mm == cnt && c == 1 && all_deg2_except(skip);  // finished cycle
  }

  bool all_deg2_except(int skip) const {
    int k = (int)cur.size();
    for (int i = 0; i < k; i++) {
      if (i == skip) continue;
      int d = deg[i];
      if (skip >= 0 && g.has_edge(cur[i], cur[skip])) d--;
      if (d != 2) return false;
    }
    return true;
  }

  void visit() {
    if (exhausted || found) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (complete()) return;
    if (!feasible()) return;
    for (int w = cur.back() + 1; w < g.n; w++) {
      push(w);
      visit();
      pop();
      if (exhausted || found) return;
    }
  }

  void run() {
    for (int w = 0; w < g.n && !found && !exhausted; w++) {
      push(w);
      visit();
      pop();
    }
  }

  DetectResult result() {
    run();
    DetectResult r;
    r.nodes = nodes;
    r.exhausted = exhausted;
    if (found) {
      r.verdict = Verdict::Present;
      r.cert = found;
    } else {
      r.verdict = exhausted ? Verdict::Indeterminate : Verdict::Absent;
    }
    return r;
  }
};

}  // namespace

DetectResult find_c4(const Graph& g, uint64_t budget) {
  Search s(g, Kind::C4);
  s.budget = budget;
  return s.result();
}

DetectResult find_hole(const Graph& g, uint64_t budget) {
  Search s(g, Kind::Hole);
  s.budget = budget;
  return s.result();
}

DetectResult find_even_hole(const Graph& g, uint64_t budget) {
  Search s(g, Kind::EvenHole);
  s.budget = budget;
  return s.result();
}

DetectResult find_theta(const Graph& g, uint64_t budget) {
  Search s(g, Kind::Theta);
  s.budget = budget;
  return s.result();
}

DetectResult find_prism(const Graph& g, uint64_t budget) {
  Search s(g, Kind::Prism);
  s.budget = budget;
  return s.result();
}

DetectResult find_pyramid(const Graph& g, uint64_t budget) {
  Search s(g, Kind::Pyramid);
  s.budget = budget;
  return s.result();
}

DetectResult find_wheel(const Graph& g, WheelFilter filter, uint64_t budget) {
  Search s(g, Kind::Wheel);
  s.filter = filter;
  s.budget = budget;
  return s.result();
}

HubResult find_hubs(const Graph& g, uint64_t budget) {
  HubResult r;
  for (int x = 0; x < g.n; x++) {
    uint64_t remaining = budget > r.nodes ? budget - r.nodes : 0;
    if (remaining == 0) {
      r.unresolved.push_back(x);
      continue;
    }
    std::vector<int> rest;
    for (int v = 0; v < g.n; v++)
      if (v != x) rest.push_back(v);
    auto sub = induced_subgraph(g, rest);
    Search s(sub.graph, Kind::Hole);
    s.budget = remaining;
    s.accept = [&](const std::vector<int>& cycle) {
      std::vector<int> mapped;
      for (int v : cycle) mapped.push_back(sub.old_of_new[v]);
      return wheel_flags(g, mapped, x).proper;
    };
    s.run();
    r.nodes += s.nodes;
    if (s.found) {
      std::vector<int> hole;
      for (int v : s.found->roles["cycle"]) hole.push_back(sub.old_of_new[v]);
      Certificate c;
      c.kind = "wheel";
      c.roles["hole"] = hole;
      c.roles["center"] = {x};
      std::vector<int> spokes;
      for (int h : hole)
        if (g.has_edge(h, x)) spokes.push_back(h);
      std::sort(spokes.begin(), spokes.end());
      c.roles["spokes"] = spokes;
      c.vertices = hole;
      c.vertices.push_back(x);
      std::sort(c.vertices.begin(), c.vertices.end());
      r.hubs.push_back(x);
      r.witness[x] = c;
    } else if (s.exhausted) {
      r.unresolved.push_back(x);
    }
  }
  if (!r.hubs.empty())
    r.verdict = Verdict::Present;
  else
    r.verdict = r.unresolved.empty() ? Verdict::Absent : Verdict::Indeterminate;
  return r;
}

ClassResult class_membership(const Graph& g, uint64_t budget) {
  ClassResult r;
  std::function<DetectResult()> steps[4] = {
      [&] { return find_c4(g, budget); },
      [&] { return find_theta(g, budget); },
      [&] { return find_prism(g, budget); },
      [&] { return find_wheel(g, WheelFilter::Even, budget); },
  };
  bool unknown = false;
  for (auto& step : steps) {
    DetectResult d = step();
    r.nodes += d.nodes;
    if (d.exhausted) r.exhausted = true;
    if (d.verdict == Verdict::Present) {
      r.in_class = Tri::No;
      r.violation = d.cert;
      return r;
    }
    if (d.verdict == Verdict::Indeterminate) unknown = true;
  }
  r.in_class = unknown ? Tri::Unknown : Tri::Yes;
  return r;
}

ClassResult class_membership_bounded(const Graph& g, int t, uint64_t budget) {
  ClassResult r = class_membership(g, budget);
  if (r.in_class == Tri::No) return r;
  auto cq = clique_number(g, budget);
  if ((int)cq.witness.size() >= t) {
    Certificate c;
    c.kind = "clique";
    std::vector<int> w(cq.witness.begin(), cq.witness.begin() + t);
    std::sort(w.begin(), w.end());
    c.roles["clique"] = w;
    c.vertices = w;
    r.in_class = Tri::No;
    r.violation = c;
    return r;
  }
  if (!cq.exact) {
    r.in_class = Tri::Unknown;
    r.exhausted = true;
  }
  return r;
}

bool validate_certificate(const Graph& g, const Certificate& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto role = [&](const std::string& name) -> const std::vector<int>* {
    auto it = cert.roles.find(name);
    return it == cert.roles.end() ? nullptr : &it->second;
  };
  std::vector<int> all;
  for (auto& [name, vs] : cert.roles)
    for (int v : vs) all.push_back(v);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all != cert.vertices) return fail("vertices do not match role union");

  if (cert.kind == "c4" || cert.kind == "hole" || cert.kind == "even_hole") {
    auto* cyc = role("cycle");
    if (!cyc) return fail("missing cycle role");
    if (cert.kind == "c4" && cyc->size() != 4) return fail("c4 must have 4 vertices");
    if (cert.kind == "even_hole" && cyc->size() % 2 != 0) return fail("odd cycle");
    if (!is_hole(g, *cyc)) return fail("not a hole");
    return true;
  }
  if (cert.kind == "theta") {
    auto* ends = role("ends");
    if (!ends || ends->size() != 2) return fail("bad ends role");
    std::array<std::vector<int>, 3> paths;
    for (int i = 0; i < 3; i++) {
      auto* p = role("path" + std::to_string(i + 1));
      if (!p) return fail("missing path role");
      paths[i] = *p;
    }
    if (!is_theta(g, (*ends)[0], (*ends)[1], paths)) return fail("not a theta");
    return true;
  }
  if (cert.kind == "prism") {
    auto *t1 = role("triangle1"), *t2 = role("triangle2");
    if (!t1 || !t2 || t1->size() != 3 || t2->size() != 3) return fail("bad triangle roles");
    std::array<std::vector<int>, 3> paths;
    for (int i = 0; i < 3; i++) {
      auto* p = role("path" + std::to_string(i + 1));
      if (!p) return fail("missing path role");
      paths[i] = *p;
    }
    if (!is_prism(g, {(*t1)[0], (*t1)[1], (*t1)[2]}, {(*t2)[0], (*t2)[1], (*t2)[2]}, paths))
      return fail("not a prism");
    return true;
  }
  if (cert.kind == "pyramid") {
    auto *ap = role("apex"), *ba = role("base");
    if (!ap || ap->size() != 1 || !ba || ba->size() != 3) return fail("bad apex/base roles");
    std::array<std::vector<int>, 3> paths;
    for (int i = 0; i < 3; i++) {
      auto* p = role("path" + std::to_string(i + 1));
      if (!p) return fail("missing path role");
      paths[i] = *p;
    }
    if (!is_pyramid(g, (*ap)[0], {(*ba)[0], (*ba)[1], (*ba)[2]}, paths))
      return fail("not a pyramid");
    return true;
  }
  if (cert.kind == "wheel") {
    auto *h = role("hole"), *c = role("center");
    if (!h || !c || c->size() != 1) return fail("bad hole/center roles");
    if (!is_wheel(g, *h, (*c)[0])) return fail("not a wheel");
    auto* sp = role("spokes");
    if (sp) {
      std::vector<int> spokes;
      for (int v : *h)
        if (g.has_edge(v, (*c)[0])) spokes.push_back(v);
      std::sort(spokes.begin(), spokes.end());
      if (*sp != spokes) return fail("spokes role mismatch");
    }
    return true;
  }
  if (cert.kind == "clique") {
    auto* cl = role("clique");
    if (!cl || cl->empty()) return fail("missing clique role");
    if (!distinct_valid(g, *cl)) return fail("bad clique vertices");
    for (size_t i = 0; i < cl->size(); i++)
      for (size_t j = i + 1; j < cl->size(); j++)
        if (!g.has_edge((*cl)[i], (*cl)[j])) return fail("not a clique");
    return true;
  }
  return fail("unknown certificate kind: " + cert.kind);
}

std::string certificate_json(const Certificate& cert) {
  nlohmann::json j;
  j["kind"] = cert.kind;
  j["vertices"] = cert.vertices;
  nlohmann::json roles = nlohmann::json::object();
  for (auto& [name, vs] : cert.roles) roles[name] = vs;
  j["roles"] = roles;
  return j.dump();
}

}  // namespace ehf
