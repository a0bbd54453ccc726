#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehf/connectivity.hpp"
#include "ehf/graph.hpp"

namespace ehf {

// Bags are indexed by tree node id; edges must form a tree over node ids.
struct TreeDecomposition {
  int n = 0;  // host vertex count
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  int nodes() const { return (int)bags.size(); }
  int width() const;  // max bag size - 1
  std::vector<std::vector<int>> tree_adj() const;
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct TdViolation {
  enum class Kind { BadTree, BadVertex, VertexUncovered, EdgeUncovered, NotSubtree };
  Kind kind;
  int a = -1, b = -1;
  std::string detail;
};
struct TdVerdict {
  bool valid = false;
  std::vector<TdViolation> violations;
};
// Coverage of vertices and edges plus per-vertex subtree connectivity.
TdVerdict validate_td(const Graph& g, const TreeDecomposition& td);

// PACE-2017 text format ("s td <bags> <max bag size> <n>", 1-indexed ids).
// to_pace(from_pace(s)) == s for files produced by to_pace.
std::string to_pace(const TreeDecomposition& td);
TreeDecomposition from_pace(const std::string& text);  // throws ParseError with line numbers

struct Adhesion {
  int u = -1, v = -1;
  VertexSet set;
};
// One entry per tree edge, in edge-list order.
std::vector<Adhesion> adhesions(const TreeDecomposition& td);
// chi(u) intersect chi(v) when uv is a tree edge, empty otherwise (also for u == v).
VertexSet adhesion(const TreeDecomposition& td, int u, int v);
int max_adhesion(const TreeDecomposition& td);

// Vertices of G_{t->toward}: the union of bags over the component of T minus t
// that contains toward. toward must be a tree neighbor of t.
VertexSet side_vertices(const TreeDecomposition& td, int t, int toward);

// Bag chi(t) with every adhesion to a tree neighbor completed into a clique.
InducedSubgraph torso(const Graph& g, const TreeDecomposition& td, int t);

// For every oriented tree edge (t, toward): some component D of
// G_{t->toward} minus chi(t) has N(D) containing the adhesion.
struct TightEdge {
  int t = -1, toward = -1;
  bool ok = false;
  VertexSet witness;  // qualifying component when ok
};
struct TightVerdict {
  bool tight = false;
  std::vector<TightEdge> edges;
};
TightVerdict is_tight(const Graph& g, const TreeDecomposition& td);

// Adhesion < k everywhere, and every pair Z in chi(t), Z' in chi(t') with
// |Z| = |Z'| <= k is either joined by |Z| fully disjoint paths or excused by
// an adhesion smaller than |Z| on the t-t' tree path. Exhaustive over node
// pairs (t == t' included) and subset pairs; guardrail n <= 12, k <= 4.
struct LeanViolation {
  int t = -1, t2 = -1;
  VertexSet z, z2;
  int linked = 0;  // max fully disjoint z-z2 paths
};
struct LeanVerdict {
  bool lean = false;
  std::string why;
  std::optional<LeanViolation> violation;
};
LeanVerdict is_k_lean(const Graph& g, const TreeDecomposition& td, int k, bool force = false);

// (a_n, ..., a_0): entry i counts bags of size n - i.
std::vector<int> fatness(const Graph& g, const TreeDecomposition& td);

// Min-fill elimination decomposition; always valid, no optimality claim.
TreeDecomposition min_fill_td(const Graph& g);

// Exhaustive: adhesion < k and lexicographically minimum fatness over all
// such decompositions (memoized component splitting; guardrail default 9).
// Heuristic: min-fill reduced and leaf-split, optimal flag false.
enum class TdMode { Exhaustive, Heuristic };
struct AtomicTd {
  TreeDecomposition td;
  bool optimal = false;
};
AtomicTd atomic_td(const Graph& g, int k, TdMode mode, int guardrail = 9);

// Least-id node t0 with w(G_{t0->t'} minus chi(t0)) <= 1/2 for every tree
// neighbor t'. Requires td valid and w normal; such a node always exists.
int center_node(const Graph& g, const TreeDecomposition& td, const WeightFunction& w);

// First node pair (t1 <= t2) such that the two bags meet the interior of
// every a-b path and no component of G minus the bag union attaches to both
// a and b. a, b must be distinct and non-adjacent. nullopt means no pair
// verifies (evidence of a theta in g, or of an invalid decomposition).
std::optional<std::pair<int, int>> basket_pair(const Graph& g, const TreeDecomposition& td, int a,
                                               int b);

// Recursive construction of a decomposition from a balanced-separator oracle.
// The oracle must return, for every normal weight function it is queried
// with, a (w, c)-balanced separator of size <= k. Every call is audited;
// violations abort the construction with the offending call recorded.
// On success the width is at most ceil(k/(1-c)) - 1 + k.
using SeparatorOracle = std::function<VertexSet(const WeightFunction&)>;
struct OracleCall {
  WeightFunction w;
  VertexSet returned;
  bool ok = false;
  std::string note;
};
struct TdBuild {
  bool ok = false;
  std::string error;
  TreeDecomposition td;
  std::vector<OracleCall> audit;
};
TdBuild td_from_balanced_separators(const Graph& g, const SeparatorOracle& oracle, const Rat& c,
                                    int k);

// Shrinking a dominating set into a balanced separator against a center bag.
// k_clique must equal the set of vertices whose minimum fan separator to the
// center bag has size >= 3L (these form a clique when g is in class, the
// decomposition is 3L-lean and tight, and no component of
// G minus (k_clique union N[xs]) weighs more than 1/2). Output
// y = k_clique union over x in xs of (fan cut of x plus x), verified
// balanced, with |y minus k_clique| <= 3L|xs|.
struct ShrinkResult {
  bool ok = false;
  std::string error;
  int t0 = -1;
  VertexSet k_set;  // recomputed high-fan set
  std::vector<VertexSet> deltas;
  VertexSet y;
  BalanceVerdict balance;
  bool lean_checked = false;
};
ShrinkResult shrink_separator(const Graph& g, const TreeDecomposition& td, const WeightFunction& w,
                              const VertexSet& k_clique, const VertexSet& xs, int L);

// Exact treewidth by elimination-prefix DP when 2^n fits the budget
// (n <= 20); otherwise bounds: degeneracy and clique lower bounds against a
// min-fill upper bound, witness from min-fill.
struct TreewidthResult {
  int lower = 0, upper = 0;
  bool exact = false;
  std::optional<TreeDecomposition> witness;
};
TreewidthResult treewidth_exact(const Graph& g, uint64_t budget = 1ull << 22);

}  // namespace ehf
