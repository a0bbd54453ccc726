#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ehf {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

// Induced path: consecutive vertices adjacent, non-consecutive non-adjacent.
struct Path {
  std::vector<int> vertices;
  int length() const { return (int)vertices.size() - 1; }
  std::vector<int> interior() const {
    if (vertices.size() <= 2) return {};
    return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
  }
};

// Immutable simple undirected graph on vertex ids 0..n-1.
// Adjacency kept both as sorted lists and, for n <= 64, as bitmask rows
// (the desk-scale searches lean on the masks heavily).
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;   // sorted neighbor lists
  std::vector<uint64_t> row;           // bitmask rows, only valid if n <= 64
  std::vector<std::string> labels;     // optional, may be empty

  bool has_edge(int u, int v) const;
  int degree(int v) const { return (int)adj[v].size(); }
  int edge_count() const;
  bool small() const { return n <= 64; }
  std::vector<std::pair<int, int>> edges() const;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Checked element test against a sorted VertexSet.
bool vs_contains(const VertexSet& s, int v);
VertexSet vs_sorted(std::vector<int> v);
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
VertexSet vs_minus(const VertexSet& a, const VertexSet& b);

// G[x] plus the old->new id bijection (new ids follow sorted order of x).
struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_of_new;  // new id -> old id
  std::vector<int> new_of_old;  // old id -> new id, -1 outside x
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

// Open neighborhood N(X) or closed N[X].
VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed);

// Connected components of G minus `forbidden`, ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& forbidden);

// True iff all of x lies in one component of G (x nonempty).
bool is_connected_subset(const Graph& g, const VertexSet& x);

// Repeated minimum-degree peeling. Each vi has <= degeneracy neighbors later
// in the ordering.
struct DegeneracyResult {
  std::vector<int> order;
  int degeneracy = 0;
};
DegeneracyResult degeneracy_order(const Graph& g);

// Exact maximum clique with a node budget; flagged lower bound on exhaustion.
struct CliqueResult {
  int size = 0;
  VertexSet witness;
  bool exact = true;   // false iff the search budget ran out
  uint64_t nodes = 0;
};
CliqueResult clique_number(const Graph& g, uint64_t budget = 10'000'000);

// Validates the Path invariants against g.
bool is_induced_path(const Graph& g, const std::vector<int>& vertices);

// Shortest path between endpoints (BFS, smallest-id tie-breaks); empty if
// unreachable. Always induced, since it is a shortest path.
std::optional<std::vector<int>> shortest_path(const Graph& g, int from, int to,
                                              const VertexSet& forbidden = {});

}  // namespace ehf
