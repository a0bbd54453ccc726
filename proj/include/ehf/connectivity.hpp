#pragma once

#include <map>
#include <optional>

#include "ehf/graph.hpp"
#include "ehf/rational.hpp"
#include "ehf/structures.hpp"

namespace ehf {

// Exact per-vertex weights. Balance verdicts require a normal function
// (total exactly 1); helpers normalize integer weights.
struct WeightFunction {
  std::vector<Rat> w;

  Rat total() const;
  bool normal() const;
  Rat of(const VertexSet& s) const;

  static WeightFunction uniform(int n);
  // missing vertices weigh 0; normalizes to total 1 when normalize is set
  static WeightFunction from_map(int n, const std::map<int, Rat>& m, bool normalize);
};

// Partition (X, Y, Z) of V with X anticomplete to Z.
struct Separation {
  VertexSet x, y, z;
};
bool is_separation(const Graph& g, const Separation& s, std::string* why = nullptr);

struct Banana {
  int a = -1, b = -1;
  std::vector<std::vector<int>> paths;  // induced a..b paths, internally disjoint
  int k() const { return (int)paths.size(); }
};

// Minimum vertex set meeting the interior of every a-b path, a,b nonadjacent.
// Lexicographically least among minimum separators.
VertexSet min_separator(const Graph& g, int a, int b);

// Maximum family of pairwise internally disjoint a-b paths (vertex-capacity
// max flow); each path is chord-shortcut to an induced path afterwards.
// |paths| always equals |min_separator(g,a,b)|.
Banana max_banana(const Graph& g, int a, int b);

// Menger between vertex sets: k pairwise fully disjoint A-B paths (single
// vertices allowed when A and B meet) and a lex-least minimum hitting set of
// all A-B paths (which may use vertices of A and B).
struct SetMenger {
  int k = 0;
  std::vector<std::vector<int>> paths;
  VertexSet separator;
};
SetMenger set_menger(const Graph& g, const VertexSet& a, const VertexSet& b);

// Largest fan of v-to-s paths pairwise disjoint except at v, and the
// lex-least minimum set meeting every v-to-s path (v itself excluded,
// vertices of s allowed in the cut).
struct FanSeparator {
  int k = 0;
  VertexSet cut;
};
FanSeparator fan_separator(const Graph& g, int v, const VertexSet& s);

// Vertices whose fan to bag minus themselves has size >= threshold.
VertexSet high_fan_vertices(const Graph& g, const VertexSet& bag, int threshold);

struct BalanceVerdict {
  bool balanced = false;
  Rat heaviest;             // weight of the heaviest component of g minus x
  VertexSet heaviest_component;
};
BalanceVerdict is_balanced_separator(const Graph& g, const WeightFunction& w, const VertexSet& x,
                                     const Rat& c);

// Star cutsets ({x} union a subset of N(x) that disconnects g, searched
// exhaustively per center up to a degree cap) and clique cutsets up to a size
// cap. Witnesses are minimum size, lexicographically least.
struct StarCutsetInfo {
  int center = -1;
  Tri has = Tri::Unknown;  // Unknown only when deg(center) exceeds the cap
  VertexSet witness;
};
struct CutsetReport {
  std::vector<StarCutsetInfo> stars;
  std::vector<VertexSet> clique_cutsets;
};
CutsetReport star_and_clique_cutsets(const Graph& g, int star_degree_cap = 16,
                                     int clique_size_cap = 6);

// Greedy heavy-component descent: returns an induced path P, grown from
// `start`, whose closed neighborhood is a 1/2-balanced separator.
// Requires g connected and w normal.
Path gyarfas_path(const Graph& g, const WeightFunction& w, int start = 0);

// For a proper non-universal wheel and a long sector Q with ends x1, x2:
// W = spokes h whose x2->h subpath of (hole minus x1) holds an even number of
// spokes, Z = hole minus (Q and N(center)), and N[center] minus W is returned
// as a cutset candidate separating Q's interior from W and Z. `separates` is
// the BFS-verified verdict (failure witnesses a class violation of g, not a
// bug in the caller).
struct WheelForcerResult {
  VertexSet cutset;
  VertexSet w_side, z_side, q_interior;
  bool separates = false;
};
WheelForcerResult wheel_forcer_cutset(const Graph& g, const Certificate& wheel,
                                      const std::vector<int>& sector);

// For a pyramid and a path p whose ends lie strictly inside two distinct
// pyramid paths (excluding apex, the apex's neighbor, and the base vertex):
// does some vertex of {apex, base} have a neighbor in p's interior?
// vacuous flags an empty interior (never happens in a clean class member).
struct PyramidPathResult {
  bool vacuous = false;
  bool holds = false;
};
PyramidPathResult pyramid_neighborhood_check(const Graph& g, const Certificate& pyramid,
                                             const std::vector<int>& p);

// A component D of g minus N[center] with hole contained in N[D], if any.
// Class members never have one for proper wheels.
std::optional<VertexSet> find_hole_dominating_component(const Graph& g,
                                                        const std::vector<int>& hole, int center);

// A set Y with |Y| <= d_max whose closed neighborhood is a 1/2-balanced
// separator. Exhaustive scans all candidate sets in size-then-lex order (so
// absence is a certified negative and the answer is the least witness);
// Guided tries cheap candidates (singletons, path windows, hub pairs, pyramid
// corners, greedy growth) and falls back to the exhaustive scan on small
// graphs so the two strategies agree at test scale.
enum class SeparatorStrategy { Exhaustive, Guided };
std::optional<VertexSet> dominated_balanced_separator(const Graph& g, const WeightFunction& w,
                                                      int d_max, SeparatorStrategy strategy);

}  // namespace ehf
