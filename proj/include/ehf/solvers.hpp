#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehf/graph.hpp"
#include "ehf/rational.hpp"
#include "ehf/treedec.hpp"

namespace ehf {

enum class Problem {
  StableSet,
  VertexCover,
  FeedbackVertexSet,
  DominatingSet,
  RColoring,
  Coloring,
};
const char* to_string(Problem p);

struct ProblemInstance {
  Graph g;
  Problem problem = Problem::StableSet;
  int r = 0;               // RColoring only, must be >= 1
  std::optional<Rat> eps;  // approximation modes only
};

enum class SolveMode { Exact, OnePlusEps, OneMinusEps, Heuristic };
const char* to_string(SolveMode m);

struct SolveStats {
  long long dp_states_total = 0;  // sum of table sizes over nice nodes
  long long dp_states_peak = 0;   // largest single table
  int nice_nodes = 0;
  int width = -1;
  long long pairs_checked = 0;  // qptas (S, Y) pairs examined
  int cliques_stripped = 0;     // ptas rounds
  bool exact_fallback = false;  // qptas had to leave the enumeration path
};

// value is the set size for the subset problems, the color count for
// Coloring, and r for a feasible RColoring. witness carries the chosen set;
// colors carries a proper coloring (one entry per vertex) when applicable.
struct Solution {
  long long value = 0;
  bool feasible = true;  // RColoring verdict, true elsewhere
  VertexSet witness;
  std::vector<int> colors;
  SolveMode mode = SolveMode::Exact;
  SolveStats stats;
};

bool is_stable_set(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_dominating_set(const Graph& g, const VertexSet& s);
bool is_forest_after_removal(const Graph& g, const VertexSet& s);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int r);

// Definitional recheck of a solution against the instance: witness structure
// plus value consistency. Every solver runs this before returning.
bool validate_solution(const ProblemInstance& inst, const Solution& sol,
                       std::string* why = nullptr);

// Nice form: leaves have empty bags, introduce/forget move one vertex, join
// children share the parent bag, and every host edge is introduced exactly
// once at a node whose bag holds both ends. Children precede parents in
// nodes; root is last and has an empty bag.
enum class NiceKind { Leaf, Introduce, IntroduceEdge, Forget, Join };
struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  int u = -1, v = -1;  // Introduce/Forget: u; IntroduceEdge: u < v
  VertexSet bag;
  int left = -1, right = -1;
};
struct NiceTd {
  int n = 0;
  std::vector<NiceNode> nodes;
  int root = -1;
  int width = -1;
};
NiceTd nice_td(const Graph& g, const TreeDecomposition& td);

// Exact optimum by dynamic programming over the decomposition. Bags are
// capped at 15 vertices (table keys pack 4 bits per bag slot). Coloring
// loops r upward until RColoring(r) is feasible.
Solution solve_on_td(const ProblemInstance& inst, const TreeDecomposition& td);

// Exhaustive oracle: n <= 20 for the subset problems, n <= 12 for coloring.
Solution brute_force(const ProblemInstance& inst);

// Strips cliques of size >= ceil(2/eps) while any exist, then solves the
// remainder exactly on a tree decomposition. Value <= (1+eps) * vc(g) when
// g avoids the four forbidden structures.
Solution ptas_vertex_cover(const Graph& g, const Rat& eps);

// Recursive enumeration of pairs (S, Y) with |S| <= 2*d*log2(n)*log2(N)/eps
// and |Y| <= d whose removal of N(S) u N[Y] leaves components of at most
// half the vertices; recurses on the remainder and keeps the best stable
// set. Falls back to an exact search (flagged in stats) when no pair
// qualifies or the pair budget runs out. initial_n 0 means |V(g)|.
Solution qptas_stable_set(const Graph& g, const Rat& eps, int d, int initial_n = 0,
                          bool force = false, long long pair_budget = 50'000'000);

}  // namespace ehf
