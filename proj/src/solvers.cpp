#include "ehf/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace ehf {

const char* to_string(Problem p) {
  switch (p) {
    case Problem::StableSet: return "stable_set";
    case Problem::VertexCover: return "vertex_cover";
    case Problem::FeedbackVertexSet: return "feedback_vertex_set";
    case Problem::DominatingSet: return "dominating_set";
    case Problem::RColoring: return "r_coloring";
    case Problem::Coloring: return "coloring";
  }
  return "?";
}

const char* to_string(SolveMode m) {
  switch (m) {
    case SolveMode::Exact: return "exact";
    case SolveMode::OnePlusEps: return "1+eps";
    case SolveMode::OneMinusEps: return "1-eps";
    case SolveMode::Heuristic: return "heuristic";
  }
  return "?";
}

namespace {

bool well_formed_subset(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); i++) {
    if (s[i] < 0 || s[i] >= g.n) return false;
    if (i && s[i - 1] >= s[i]) return false;
  }
  return true;
}

}  // namespace

bool is_stable_set(const Graph& g, const VertexSet& s) {
  if (!well_formed_subset(g, s)) return false;
  for (size_t i = 0; i < s.size(); i++)
    for (size_t j = i + 1; j < s.size(); j++)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  if (!well_formed_subset(g, s)) return false;
  for (auto [u, v] : g.edges())
    if (!vs_contains(s, u) && !vs_contains(s, v)) return false;
  return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  if (!well_formed_subset(g, s)) return false;
  std::vector<char> hit(g.n, 0);
  for (int v : s) {
    hit[v] = 1;
    for (int u : g.adj[v]) hit[u] = 1;
  }
  for (int v = 0; v < g.n; v++)
    if (!hit[v]) return false;
  return true;
}

bool is_forest_after_removal(const Graph& g, const VertexSet& s) {
  if (!well_formed_subset(g, s)) return false;
  std::vector<int> up(g.n);
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  std::vector<char> gone(g.n, 0);
  for (int v : s) gone[v] = 1;
  for (auto [u, v] : g.edges()) {
    if (gone[u] || gone[v]) continue;
    int a = find(u), b = find(v);
    if (a == b) return false;
    up[a] = b;
  }
  return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int r) {
  if ((int)colors.size() != g.n) return false;
  for (int c : colors)
    if (c < 0 || c >= r) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

bool validate_solution(const ProblemInstance& inst, const Solution& sol, std::string* why) {
  auto fail = [&](const char* s) {
    if (why) *why = s;
    return false;
  };
  const Graph& g = inst.g;
  auto sized = [&] { return sol.value == (long long)sol.witness.size(); };
  switch (inst.problem) {
    case Problem::StableSet:
      if (!is_stable_set(g, sol.witness)) return fail("witness is not a stable set");
      if (!sized()) return fail("value does not match the witness size");
      return true;
    case Problem::VertexCover:
      if (!is_vertex_cover(g, sol.witness)) return fail("witness is not a vertex cover");
      if (!sized()) return fail("value does not match the witness size");
      return true;
    case Problem::FeedbackVertexSet:
      if (!is_forest_after_removal(g, sol.witness)) return fail("deleting the witness leaves a cycle");
      if (!sized()) return fail("value does not match the witness size");
      return true;
    case Problem::DominatingSet:
      if (!is_dominating_set(g, sol.witness)) return fail("witness is not a dominating set");
      if (!sized()) return fail("value does not match the witness size");
      return true;
    case Problem::RColoring:
      if (!sol.feasible) return true;
      if (!is_proper_coloring(g, sol.colors, inst.r)) return fail("not a proper r-coloring");
      if (sol.value != inst.r) return fail("value does not match r");
      return true;
    case Problem::Coloring:
      if (sol.value < 0 || !is_proper_coloring(g, sol.colors, (int)sol.value))
        return fail("not a proper coloring with value colors");
      return true;
  }
  return fail("unknown problem");
}

// ---------------------------------------------------------------------------
// brute-force oracle

namespace {

bool mask_is_forest(const Graph& g, uint32_t kept) {
  int up[32];
  for (int v = 0; v < g.n; v++) up[v] = v;
  auto find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  for (int v = 0; v < g.n; v++) {
    if (!(kept >> v & 1)) continue;
    uint32_t later = (uint32_t)g.row[v] & kept & ~(((uint32_t)1 << (v + 1)) - 1);
    for (; later; later &= later - 1) {
      int u = std::countr_zero(later);
      int a = find(v), b = find(u);
      if (a == b) return false;
      up[a] = b;
    }
  }
  return true;
}

Solution brute_subsets(const ProblemInstance& inst) {
  const Graph& g = inst.g;
  uint32_t all = ((uint32_t)1 << g.n) - 1;
  bool maximize = inst.problem == Problem::StableSet;
  bool have = false;
  long long best = 0;
  uint32_t bw = 0;
  for (uint32_t m = 0;; m++) {
    bool ok = false;
    switch (inst.problem) {
      case Problem::StableSet: {
        ok = true;
        for (uint32_t t = m; t; t &= t - 1)
          if ((uint32_t)g.row[std::countr_zero(t)] & m) {
            ok = false;
            break;
          }
        break;
      }
      case Problem::VertexCover: {
        uint32_t out = all & ~m;
        ok = true;
        for (uint32_t t = out; t; t &= t - 1)
          if ((uint32_t)g.row[std::countr_zero(t)] & out) {
            ok = false;
            break;
          }
        break;
      }
      case Problem::DominatingSet: {
        uint32_t dom = m;
        for (uint32_t t = m; t; t &= t - 1) dom |= (uint32_t)g.row[std::countr_zero(t)];
        ok = dom == all;
        break;
      }
      case Problem::FeedbackVertexSet:
        ok = mask_is_forest(g, all & ~m);
        break;
      default:
        break;
    }
    if (ok) {
      long long sz = std::popcount(m);
      if (!have || (maximize ? sz > best : sz < best)) {
        have = true;
        best = sz;
        bw = m;
      }
    }
    if (m == all) break;
  }
  Solution out;
  out.value = best;
  for (int v = 0; v < g.n; v++)
    if (bw >> v & 1) out.witness.push_back(v);
  return out;
}

// canonical backtracking: a vertex may open at most one new color
bool color_search(const Graph& g, const std::vector<int>& order, int r, size_t idx, int used,
                  std::vector<int>& col) {
  if (idx == order.size()) return true;
  int v = order[idx];
  int lim = std::min(r - 1, used);
  for (int c = 0; c <= lim; c++) {
    bool ok = true;
    for (int u : g.adj[v])
      if (col[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    col[v] = c;
    if (color_search(g, order, r, idx + 1, std::max(used, c + 1), col)) return true;
    col[v] = -1;
  }
  return false;
}

std::optional<std::vector<int>> brute_rcoloring(const Graph& g, int r) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> col(g.n, -1);
  if (color_search(g, order, r, 0, 0, col)) return col;
  return std::nullopt;
}

}  // namespace

Solution brute_force(const ProblemInstance& inst) {
  const Graph& g = inst.g;
  bool coloring = inst.problem == Problem::RColoring || inst.problem == Problem::Coloring;
  if (coloring && g.n > 12) throw std::invalid_argument("coloring oracle limited to 12 vertices");
  if (!coloring && g.n > 20) throw std::invalid_argument("oracle limited to 20 vertices");
  if (inst.problem == Problem::RColoring && inst.r < 1)
    throw std::invalid_argument("r must be at least 1");
  if (!coloring) return brute_subsets(inst);
  Solution out;
  if (inst.problem == Problem::RColoring) {
    auto col = brute_rcoloring(g, inst.r);
    if (col) {
      out.value = inst.r;
      out.colors = *col;
    } else {
      out.feasible = false;
    }
  } else if (g.n > 0) {
    for (int r = 1;; r++) {
      auto col = brute_rcoloring(g, r);
      if (col) {
        out.value = r;
        out.colors = *col;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// nice decomposition

NiceTd nice_td(const Graph& g, const TreeDecomposition& td) {
  TdVerdict verdict = validate_td(g, td);
  if (!verdict.valid) {
    std::string msg = "invalid tree decomposition";
    if (!verdict.violations.empty()) msg += ": " + verdict.violations[0].detail;
    throw std::invalid_argument(msg);
  }
  NiceTd out;
  out.n = g.n;
  out.width = td.width();
  auto adj = td.tree_adj();
  std::vector<NiceNode> tmp;
  std::function<int(int, int)> build = [&](int t, int parent) -> int {
    std::vector<int> tops;
    for (int c : adj[t]) {
      if (c == parent) continue;
      int sub = build(c, t);
      VertexSet bag = td.bags[c];
      for (int x : vs_minus(td.bags[c], td.bags[t])) {
        bag = vs_minus(bag, {x});
        tmp.push_back({NiceKind::Forget, x, -1, bag, sub, -1});
        sub = (int)tmp.size() - 1;
      }
      for (int x : vs_minus(td.bags[t], td.bags[c])) {
        bag = vs_union(bag, {x});
        tmp.push_back({NiceKind::Introduce, x, -1, bag, sub, -1});
        sub = (int)tmp.size() - 1;
      }
      tops.push_back(sub);
    }
    if (tops.empty()) {
      tmp.push_back({NiceKind::Leaf, -1, -1, {}, -1, -1});
      int cur = (int)tmp.size() - 1;
      VertexSet bag;
      for (int x : td.bags[t]) {
        bag.push_back(x);
        tmp.push_back({NiceKind::Introduce, x, -1, bag, cur, -1});
        cur = (int)tmp.size() - 1;
      }
      return cur;
    }
    int cur = tops[0];
    for (size_t i = 1; i < tops.size(); i++) {
      tmp.push_back({NiceKind::Join, -1, -1, td.bags[t], cur, tops[i]});
      cur = (int)tmp.size() - 1;
    }
    return cur;
  };
  int top = build(0, -1);
  {
    VertexSet bag = td.bags[0];
    for (int x : td.bags[0]) {
      bag = vs_minus(bag, {x});
      tmp.push_back({NiceKind::Forget, x, -1, bag, top, -1});
      top = (int)tmp.size() - 1;
    }
  }
  // hand each host edge to the first node, children before parents, whose bag
  // holds both ends, so it is introduced exactly once
  auto es = g.edges();
  std::vector<std::vector<std::pair<int, int>>> edges_at(tmp.size());
  std::vector<char> placed(es.size(), 0);
  for (size_t i = 0; i < tmp.size(); i++)
    for (size_t e = 0; e < es.size(); e++) {
      if (placed[e]) continue;
      if (vs_contains(tmp[i].bag, es[e].first) && vs_contains(tmp[i].bag, es[e].second)) {
        placed[e] = 1;
        edges_at[i].push_back(es[e]);
      }
    }
  for (char p : placed)
    if (!p) throw std::logic_error("an edge never met a bag");
  std::function<int(int)> emit = [&](int id) -> int {
    NiceNode copy = tmp[id];
    if (copy.left >= 0) copy.left = emit(copy.left);
    if (copy.right >= 0) copy.right = emit(copy.right);
    out.nodes.push_back(copy);
    int cur = (int)out.nodes.size() - 1;
    for (auto [a, b] : edges_at[id]) {
      out.nodes.push_back({NiceKind::IntroduceEdge, a, b, tmp[id].bag, cur, -1});
      cur = (int)out.nodes.size() - 1;
    }
    return cur;
  };
  out.root = emit(top);
  return out;
}

// ---------------------------------------------------------------------------
// dp over the nice decomposition
//
// Table keys pack one 4-bit slot per bag vertex in bag order. Stable set and
// vertex cover use 0/1 membership, dominating set uses 0 = in the set,
// 1 = dominated, 2 = not dominated yet, r-coloring stores the color, and
// feedback vertex set stores 15 for a deleted vertex or the canonical label
// of its forest component.

namespace {

constexpr uint64_t kSlotMask = 15;
constexpr uint64_t kDeleted = 15;
constexpr int kMaxBag = 15;
constexpr long long kStateCap = 2'000'000;

int slot_of(const VertexSet& bag, int v) {
  return (int)(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

uint64_t get_slot(uint64_t key, int p) { return key >> (4 * p) & kSlotMask; }

uint64_t set_slot(uint64_t key, int p, uint64_t val) {
  return (key & ~(kSlotMask << (4 * p))) | (val << (4 * p));
}

uint64_t insert_slot(uint64_t key, int p, uint64_t val) {
  uint64_t low = key & (((uint64_t)1 << (4 * p)) - 1);
  uint64_t high = key & ~(((uint64_t)1 << (4 * p)) - 1);
  return low | (high << 4) | (val << (4 * p));
}

uint64_t remove_slot(uint64_t key, int p) {
  uint64_t low = key & (((uint64_t)1 << (4 * p)) - 1);
  uint64_t high = key >> (4 * (p + 1)) << (4 * p);
  return low | high;
}

// relabel classes by first slot occurrence
uint64_t fvs_canon(uint64_t key, int b) {
  int map[16];
  std::fill(map, map + 16, -1);
  int next = 0;
  uint64_t out = 0;
  for (int p = 0; p < b; p++) {
    uint64_t s = get_slot(key, p);
    if (s == kDeleted) {
      out = set_slot(out, p, kDeleted);
      continue;
    }
    if (map[s] < 0) map[s] = next++;
    out = set_slot(out, p, (uint64_t)map[s]);
  }
  return out;
}

struct Entry {
  long long value;
  uint64_t pa, pb;
  uint16_t dec;
};
using Table = std::map<uint64_t, Entry>;

void relax(Table& t, bool maximize, uint64_t key, long long value, uint64_t pa, uint64_t pb,
           uint16_t dec) {
  auto [it, fresh] = t.try_emplace(key, Entry{value, pa, pb, dec});
  if (fresh) return;
  if (maximize ? value > it->second.value : value < it->second.value)
    it->second = Entry{value, pa, pb, dec};
}

struct DpRun {
  bool feasible = false;
  long long value = 0;
  std::vector<int> assign;
  long long states_total = 0, states_peak = 0;
};

DpRun run_dp(const Graph& g, const NiceTd& nt, Problem prob, int r) {
  const bool maximize = prob == Problem::StableSet;
  std::vector<Table> tables(nt.nodes.size());
  for (size_t i = 0; i < nt.nodes.size(); i++) {
    const NiceNode& nd = nt.nodes[i];
    int bsz = (int)nd.bag.size();
    if (bsz > kMaxBag) throw std::invalid_argument("bag too large for the solver (limit 15)");
    Table& t = tables[i];
    auto guard = [&] {
      if ((long long)t.size() > kStateCap) throw std::runtime_error("dp state budget exceeded");
    };
    switch (nd.kind) {
      case NiceKind::Leaf:
        t.emplace(0, Entry{0, 0, 0, 0});
        break;
      case NiceKind::Introduce: {
        const Table& c = tables[nd.left];
        int p = slot_of(nd.bag, nd.u);
        for (const auto& [k, e] : c) {
          guard();
          switch (prob) {
            case Problem::StableSet:
            case Problem::VertexCover:
              relax(t, maximize, insert_slot(k, p, 0), e.value, k, 0, 0);
              relax(t, maximize, insert_slot(k, p, 1), e.value + 1, k, 0, 1);
              break;
            case Problem::DominatingSet:
              relax(t, maximize, insert_slot(k, p, 0), e.value + 1, k, 0, 1);
              relax(t, maximize, insert_slot(k, p, 2), e.value, k, 0, 0);
              break;
            case Problem::FeedbackVertexSet: {
              relax(t, maximize, insert_slot(k, p, kDeleted), e.value + 1, k, 0, 1);
              // 14 is free as a scratch label: a child bag holds at most 14
              // vertices, so canonical labels stay below it
              relax(t, maximize, fvs_canon(insert_slot(k, p, 14), bsz), e.value, k, 0, 0);
              break;
            }
            case Problem::RColoring:
              for (int col = 0; col < r; col++)
                relax(t, maximize, insert_slot(k, p, (uint64_t)col), 0, k, 0, (uint16_t)col);
              break;
            default:
              throw std::logic_error("coloring must be lowered to r-coloring");
          }
        }
        break;
      }
      case NiceKind::IntroduceEdge: {
        const Table& c = tables[nd.left];
        int pu = slot_of(nd.bag, nd.u), pv = slot_of(nd.bag, nd.v);
        for (const auto& [k, e] : c) {
          guard();
          uint64_t su = get_slot(k, pu), sv = get_slot(k, pv);
          switch (prob) {
            case Problem::StableSet:
              if (su == 1 && sv == 1) break;
              relax(t, maximize, k, e.value, k, 0, 0);
              break;
            case Problem::VertexCover:
              if (su == 0 && sv == 0) break;
              relax(t, maximize, k, e.value, k, 0, 0);
              break;
            case Problem::DominatingSet: {
              uint64_t k2 = k;
              if (su == 0 && sv == 2) k2 = set_slot(k2, pv, 1);
              if (sv == 0 && su == 2) k2 = set_slot(k2, pu, 1);
              relax(t, maximize, k2, e.value, k, 0, 0);
              break;
            }
            case Problem::FeedbackVertexSet: {
              if (su == kDeleted || sv == kDeleted) {
                relax(t, maximize, k, e.value, k, 0, 0);
                break;
              }
              if (su == sv) break;  // the kept edge would close a cycle
              uint64_t lo = std::min(su, sv), hi = std::max(su, sv);
              uint64_t k2 = 0;
              for (int p = 0; p < bsz; p++) {
                uint64_t s = get_slot(k, p);
                k2 = set_slot(k2, p, s == hi ? lo : s);
              }
              relax(t, maximize, fvs_canon(k2, bsz), e.value, k, 0, 0);
              break;
            }
            case Problem::RColoring:
              if (su == sv) break;
              relax(t, maximize, k, e.value, k, 0, 0);
              break;
            default:
              throw std::logic_error("coloring must be lowered to r-coloring");
          }
        }
        break;
      }
      case NiceKind::Forget: {
        const Table& c = tables[nd.left];
        int p = slot_of(nt.nodes[nd.left].bag, nd.u);
        for (const auto& [k, e] : c) {
          guard();
          if (prob == Problem::DominatingSet && get_slot(k, p) == 2) continue;
          uint64_t k2 = remove_slot(k, p);
          if (prob == Problem::FeedbackVertexSet) k2 = fvs_canon(k2, bsz);
          relax(t, maximize, k2, e.value, k, 0, 0);
        }
        break;
      }
      case NiceKind::Join: {
        const Table& a = tables[nd.left];
        const Table& b = tables[nd.right];
        if (prob == Problem::StableSet || prob == Problem::VertexCover ||
            prob == Problem::RColoring) {
          for (const auto& [k, ea] : a) {
            guard();
            auto itb = b.find(k);
            if (itb == b.end()) continue;
            long long overlap = 0;
            if (prob != Problem::RColoring)
              for (int p = 0; p < bsz; p++) overlap += get_slot(k, p) == 1;
            relax(t, maximize, k, ea.value + itb->second.value - overlap, k, k, 0);
          }
        } else if (prob == Problem::DominatingSet) {
          std::map<uint64_t, std::vector<std::pair<uint64_t, long long>>> byin;
          for (const auto& [k, eb] : b) {
            uint64_t in = 0;
            for (int p = 0; p < bsz; p++)
              if (get_slot(k, p) == 0) in |= (uint64_t)1 << p;
            byin[in].push_back({k, eb.value});
          }
          for (const auto& [ka, ea] : a) {
            uint64_t in = 0;
            long long inc = 0;
            for (int p = 0; p < bsz; p++)
              if (get_slot(ka, p) == 0) {
                in |= (uint64_t)1 << p;
                inc++;
              }
            auto itv = byin.find(in);
            if (itv == byin.end()) continue;
            for (const auto& [kb, vb] : itv->second) {
              guard();
              uint64_t merged = ka;
              for (int p = 0; p < bsz; p++)
                if (get_slot(ka, p) == 2 && get_slot(kb, p) == 1) merged = set_slot(merged, p, 1);
              relax(t, maximize, merged, ea.value + vb - inc, ka, kb, 0);
            }
          }
        } else if (prob == Problem::FeedbackVertexSet) {
          std::map<uint64_t, std::vector<std::pair<uint64_t, long long>>> bykept;
          for (const auto& [k, eb] : b) {
            uint64_t kept = 0;
            for (int p = 0; p < bsz; p++)
              if (get_slot(k, p) != kDeleted) kept |= (uint64_t)1 << p;
            bykept[kept].push_back({k, eb.value});
          }
          for (const auto& [ka, ea] : a) {
            uint64_t kept = 0;
            long long del = 0;
            for (int p = 0; p < bsz; p++) {
              if (get_slot(ka, p) != kDeleted)
                kept |= (uint64_t)1 << p;
              else
                del++;
            }
            auto itv = bykept.find(kept);
            if (itv == bykept.end()) continue;
            for (const auto& [kb, vb] : itv->second) {
              guard();
              // classes of both sides meet only in the bag; the union stays a
              // forest iff merging loses exactly |kept slots| class labels
              int up[32];
              std::iota(up, up + 32, 0);
              auto find = [&](int x) {
                while (up[x] != x) x = up[x] = up[up[x]];
                return x;
              };
              int shared = 0;
              for (int p = 0; p < bsz; p++) {
                if (!(kept >> p & 1)) continue;
                shared++;
                int x = find((int)get_slot(ka, p)), y = find(16 + (int)get_slot(kb, p));
                if (x != y) up[x] = y;
              }
              uint32_t seen_a = 0, seen_b = 0;
              int cnt_a = 0, cnt_b = 0;
              for (int p = 0; p < bsz; p++) {
                if (!(kept >> p & 1)) continue;
                int la = (int)get_slot(ka, p), lb = (int)get_slot(kb, p);
                if (!(seen_a >> la & 1)) {
                  seen_a |= 1u << la;
                  cnt_a++;
                }
                if (!(seen_b >> lb & 1)) {
                  seen_b |= 1u << lb;
                  cnt_b++;
                }
              }
              uint32_t roots = 0;
              int merged_cnt = 0;
              for (int p = 0; p < bsz; p++) {
                if (!(kept >> p & 1)) continue;
                int rt = find((int)get_slot(ka, p));
                if (!(roots >> rt & 1)) {
                  roots |= 1u << rt;
                  merged_cnt++;
                }
              }
              if (merged_cnt != cnt_a + cnt_b - shared) continue;
              int lab[32];
              std::fill(lab, lab + 32, -1);
              int next = 0;
              uint64_t merged = 0;
              for (int p = 0; p < bsz; p++) {
                if (!(kept >> p & 1)) {
                  merged = set_slot(merged, p, kDeleted);
                  continue;
                }
                int rt = find((int)get_slot(ka, p));
                if (lab[rt] < 0) lab[rt] = next++;
                merged = set_slot(merged, p, (uint64_t)lab[rt]);
              }
              relax(t, maximize, merged, ea.value + vb - del, ka, kb, 0);
            }
          }
        } else {
          throw std::logic_error("coloring must be lowered to r-coloring");
        }
        break;
      }
    }
  }
  DpRun out;
  long long total = 0, peak = 0;
  for (const Table& t : tables) {
    total += (long long)t.size();
    peak = std::max(peak, (long long)t.size());
  }
  out.states_total = total;
  out.states_peak = peak;
  const Table& rt = tables[nt.root];
  auto it = rt.find(0);
  if (it == rt.end()) return out;
  out.feasible = true;
  out.value = it->second.value;
  out.assign.assign(g.n, -1);
  std::function<void(int, uint64_t)> walk = [&](int node, uint64_t key) {
    const NiceNode& nd = nt.nodes[node];
    const Entry& e = tables[node].at(key);
    switch (nd.kind) {
      case NiceKind::Leaf:
        return;
      case NiceKind::Introduce:
        if (out.assign[nd.u] >= 0 && out.assign[nd.u] != (int)e.dec)
          throw std::logic_error("witness reconstruction disagreed across branches");
        out.assign[nd.u] = (int)e.dec;
        walk(nd.left, e.pa);
        return;
      case NiceKind::IntroduceEdge:
      case NiceKind::Forget:
        walk(nd.left, e.pa);
        return;
      case NiceKind::Join:
        walk(nd.left, e.pa);
        walk(nd.right, e.pb);
        return;
    }
  };
  walk(nt.root, 0);
  return out;
}

// feasibility of r colors; fills colors and accumulates stats
bool rcol_on(const Graph& g, const NiceTd& nt, int r, std::vector<int>& colors,
             SolveStats& stats) {
  if (r >= g.n) {
    colors.resize(g.n);
    std::iota(colors.begin(), colors.end(), 0);
    return true;
  }
  if (r > kMaxBag) throw std::invalid_argument("more than 15 colors unsupported");
  DpRun run = run_dp(g, nt, Problem::RColoring, r);
  stats.dp_states_total += run.states_total;
  stats.dp_states_peak = std::max(stats.dp_states_peak, run.states_peak);
  if (!run.feasible) return false;
  colors = run.assign;
  return true;
}

}  // namespace

Solution solve_on_td(const ProblemInstance& inst, const TreeDecomposition& td) {
  const Graph& g = inst.g;
  if (inst.problem == Problem::RColoring && inst.r < 1)
    throw std::invalid_argument("r must be at least 1");
  NiceTd nt = nice_td(g, td);
  Solution out;
  out.stats.nice_nodes = (int)nt.nodes.size();
  out.stats.width = nt.width;
  switch (inst.problem) {
    case Problem::StableSet:
    case Problem::VertexCover:
    case Problem::FeedbackVertexSet:
    case Problem::DominatingSet: {
      DpRun run = run_dp(g, nt, inst.problem, 0);
      if (!run.feasible) throw std::logic_error("dp produced no state at the root");
      out.value = run.value;
      for (int v = 0; v < g.n; v++)
        if (run.assign[v] == 1) out.witness.push_back(v);
      out.stats.dp_states_total = run.states_total;
      out.stats.dp_states_peak = run.states_peak;
      break;
    }
    case Problem::RColoring: {
      std::vector<int> colors;
      if (rcol_on(g, nt, inst.r, colors, out.stats)) {
        out.value = inst.r;
        out.colors = colors;
      } else {
        out.feasible = false;
      }
      break;
    }
    case Problem::Coloring: {
      if (g.n == 0) break;
      for (int r = 1;; r++) {
        std::vector<int> colors;
        if (rcol_on(g, nt, r, colors, out.stats)) {
          out.value = r;
          out.colors = colors;
          break;
        }
      }
      break;
    }
  }
  std::string why;
  if (!validate_solution(inst, out, &why))
    throw std::logic_error("solver witness failed validation: " + why);
  return out;
}

// ---------------------------------------------------------------------------
// approximation schemes

namespace {

long long ceil_rat(const Rat& x) {
  long long q = x.num / x.den;
  if (x.num % x.den != 0 && x.num > 0) q++;
  return q;
}

std::pair<long long, uint64_t> max_stable_mask(const Graph& g, uint64_t sub) {
  if (!sub) return {0, 0};
  int best_v = -1, best_d = -1;
  for (uint64_t t = sub; t; t &= t - 1) {
    int v = std::countr_zero(t);
    int dd = std::popcount(g.row[v] & sub);
    if (dd > best_d) {
      best_d = dd;
      best_v = v;
    }
  }
  if (best_d == 0) return {std::popcount(sub), sub};
  auto skip = max_stable_mask(g, sub & ~((uint64_t)1 << best_v));
  auto take = max_stable_mask(g, sub & ~(g.row[best_v] | ((uint64_t)1 << best_v)));
  take.first++;
  take.second |= (uint64_t)1 << best_v;
  return skip.first >= take.first ? skip : take;
}

std::vector<uint64_t> mask_components(const Graph& g, uint64_t sub) {
  std::vector<uint64_t> out;
  uint64_t rest = sub;
  while (rest) {
    uint64_t comp = rest & (~rest + 1);
    while (true) {
      uint64_t grow = comp;
      for (uint64_t t = comp; t; t &= t - 1) grow |= g.row[std::countr_zero(t)] & sub;
      if (grow == comp) break;
      comp = grow;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

// every component of g[sub] has at most total/2 vertices
bool halved(const Graph& g, uint64_t sub, int total) {
  uint64_t rest = sub;
  while (rest) {
    uint64_t comp = rest & (~rest + 1);
    while (true) {
      uint64_t grow = comp;
      for (uint64_t t = comp; t; t &= t - 1) grow |= g.row[std::countr_zero(t)] & sub;
      if (grow == comp) break;
      comp = grow;
    }
    if (2 * std::popcount(comp) > total) return false;
    rest &= ~comp;
  }
  return true;
}

}  // namespace

Solution ptas_vertex_cover(const Graph& g, const Rat& eps) {
  if (!(Rat(0) < eps) || Rat(1) < eps) throw std::invalid_argument("epsilon must lie in (0, 1]");
  long long need = ceil_rat(Rat(2) / eps);
  Solution out;
  out.mode = SolveMode::OnePlusEps;
  VertexSet cover;
  Graph cur = g;
  std::vector<int> orig(g.n);
  std::iota(orig.begin(), orig.end(), 0);
  while (cur.n > 0) {
    CliqueResult cl = clique_number(cur);
    if ((long long)cl.witness.size() < need) {
      if (!cl.exact) throw std::runtime_error("clique search budget exhausted");
      break;
    }
    for (int v : cl.witness) cover.push_back(orig[v]);
    out.stats.cliques_stripped++;
    VertexSet keep;
    for (int v = 0; v < cur.n; v++)
      if (!vs_contains(cl.witness, v)) keep.push_back(v);
    InducedSubgraph sub = induced_subgraph(cur, keep);
    std::vector<int> norig(sub.graph.n);
    for (int v = 0; v < sub.graph.n; v++) norig[v] = orig[sub.old_of_new[v]];
    cur = sub.graph;
    orig = norig;
  }
  if (cur.n > 0) {
    TreewidthResult tw = treewidth_exact(cur);
    TreeDecomposition td = tw.witness ? *tw.witness : min_fill_td(cur);
    ProblemInstance rest{cur, Problem::VertexCover, 0, {}};
    Solution ex = solve_on_td(rest, td);
    out.stats.dp_states_total = ex.stats.dp_states_total;
    out.stats.dp_states_peak = ex.stats.dp_states_peak;
    out.stats.nice_nodes = ex.stats.nice_nodes;
    out.stats.width = ex.stats.width;
    for (int v : ex.witness) cover.push_back(orig[v]);
  }
  std::sort(cover.begin(), cover.end());
  out.witness = cover;
  out.value = (long long)cover.size();
  if (!is_vertex_cover(g, cover)) throw std::logic_error("ptas produced a non-cover");
  return out;
}

Solution qptas_stable_set(const Graph& g, const Rat& eps, int d, int initial_n, bool force,
                          long long pair_budget) {
  if (!(Rat(0) < eps) || Rat(1) < eps) throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  if (g.n > 63) throw std::invalid_argument("mask search limited to 63 vertices");
  if (g.n > 30 && !force) throw std::invalid_argument("desk-scale guardrail: n > 30 (force to override)");
  long long big_n = initial_n > 0 ? initial_n : g.n;
  double log_n_total = std::log2((double)std::max<long long>(big_n, 1));
  Solution out;
  out.mode = SolveMode::OneMinusEps;
  uint64_t all = g.n == 0 ? 0 : (((uint64_t)1 << g.n) - 1);
  long long pairs = 0;
  bool fell_back = false;
  std::unordered_map<uint64_t, std::pair<long long, uint64_t>> memo;
  std::function<std::pair<long long, uint64_t>(uint64_t)> rec =
      [&](uint64_t sub) -> std::pair<long long, uint64_t> {
    if (!sub) return {0, 0};
    auto hit = memo.find(sub);
    if (hit != memo.end()) return hit->second;
    int cnt = std::popcount(sub);
    std::pair<long long, uint64_t> res{0, 0};
    if (cnt == 1) {
      res = {1, sub};
    } else {
      auto comps = mask_components(g, sub);
      if (comps.size() > 1) {
        for (uint64_t c : comps) {
          auto sol = rec(c);
          res.first += sol.first;
          res.second |= sol.second;
        }
      } else {
        double capf =
            2.0 * d * std::log2((double)cnt) * log_n_total * (double)eps.den / (double)eps.num;
        long long cap = (long long)std::floor(capf + 1e-9);
        std::vector<int> vs;
        for (uint64_t t = sub; t; t &= t - 1) vs.push_back(std::countr_zero(t));
        // candidate Y sets of size <= d with their closed neighborhoods
        std::vector<std::pair<uint64_t, uint64_t>> ys;
        ys.push_back({0, 0});
        std::function<void(size_t, uint64_t, uint64_t, int)> gen = [&](size_t start, uint64_t m,
                                                                       uint64_t closed, int left) {
          if (!left) return;
          for (size_t i = start; i < vs.size(); i++) {
            uint64_t bit = (uint64_t)1 << vs[i];
            uint64_t m2 = m | bit;
            uint64_t c2 = closed | bit | g.row[vs[i]];
            ys.push_back({m2, c2});
            gen(i + 1, m2, c2, left - 1);
          }
        };
        gen(0, 0, 0, d);
        bool found = false, budget_out = false;
        long long best = -1;
        uint64_t bw = 0;
        for (uint64_t S = sub;; S = (S - 1) & sub) {
          if (cap >= cnt || std::popcount(S) <= cap) {
            uint64_t ns = 0;
            for (uint64_t t = S; t; t &= t - 1) ns |= g.row[std::countr_zero(t)];
            uint64_t base = sub & ~(ns & ~S);
            for (const auto& [ym, yc] : ys) {
              if (++pairs > pair_budget) {
                budget_out = true;
                break;
              }
              uint64_t rem = base & ~yc;
              // a skipped pair cannot beat the incumbent: its recursion
              // returns at most |rem| vertices
              if (found && std::popcount(rem) <= best) continue;
              if (rem == sub) continue;
              if (!halved(g, rem, cnt)) continue;
              auto sol = rec(rem);
              if (!found || sol.first > best) {
                found = true;
                best = sol.first;
                bw = sol.second;
              }
            }
          }
          if (budget_out || S == 0) break;
        }
        if (budget_out || !found) {
          fell_back = true;
          res = max_stable_mask(g, sub);
        } else {
          res = {best, bw};
        }
      }
    }
    memo.emplace(sub, res);
    return res;
  };
  auto sol = rec(all);
  out.value = sol.first;
  for (int v = 0; v < g.n; v++)
    if (sol.second >> v & 1) out.witness.push_back(v);
  out.stats.pairs_checked = pairs;
  out.stats.exact_fallback = fell_back;
  if (!is_stable_set(g, out.witness) || (long long)out.witness.size() != out.value)
    throw std::logic_error("qptas produced a broken witness");
  return out;
}

}  // namespace ehf
