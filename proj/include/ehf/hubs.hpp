#pragma once

#include <string>
#include <vector>

#include "ehf/graph.hpp"

namespace ehf {

// Layered partition of the hub region Hub(G) \ {a, b}: every layer is a
// stable set and every vertex has at most d neighbors among the hubs not yet
// placed (its own layer and all later ones). d is the realized bound, not a
// target; the constructor keeps it small greedily and reports what it got.
struct HubPartition {
  std::vector<VertexSet> layers;
  int d = 0;
  int a = -1, b = -1;
};

// hub_set must be the correct hub set of g (see find_hubs); a and b are the
// excluded endpoints. Layers are extracted greedily along a degeneracy order
// of the remaining hub region, taking a maximal stable set of hubs whose
// remaining degree is at most twice the current degeneracy.
HubPartition hub_partition(const Graph& g, int a, int b, const std::vector<int>& hub_set);

enum class HubSearch { Greedy, Exhaustive };

// Smallest number of layers. Greedy returns the order of hub_partition's
// output. Exhaustive finds the true minimum over all layered partitions whose
// forward-degree bound is d_bound (default: the bound the greedy achieved)
// and returns -1 when no such partition exists; it is guarded to hub regions
// of at most 12 vertices. The first overload computes the hub set itself.
int hub_dimension(const Graph& g, int a, int b, HubSearch mode, int d_bound = -1,
                  uint64_t budget = 10'000'000);
int hub_dimension(const Graph& g, int a, int b, HubSearch mode,
                  const std::vector<int>& hub_set, int d_bound);

std::string hub_partition_json(const HubPartition& hp);

}  // namespace ehf
