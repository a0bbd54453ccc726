#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ehf/graph.hpp"

namespace ehf {

// Detection searches are budgeted (budget = max visited search nodes). A search
// that ends without exhausting its budget is exact; otherwise the verdict for
// "nothing found" degrades to Indeterminate.
inline constexpr uint64_t kDefaultBudget = 10'000'000;

enum class Verdict { Present, Absent, Indeterminate };
enum class Tri { Yes, No, Unknown };

const char* to_string(Verdict v);
const char* to_string(Tri t);

// A found structure. roles holds named vertex lists (see each finder for the
// exact keys); vertices is the sorted union. Finders return the certificate
// whose sorted vertex set is lexicographically smallest, with a canonical role
// layout, so results are reproducible and comparable across implementations.
struct Certificate {
  std::string kind;
  std::map<std::string, std::vector<int>> roles;
  std::vector<int> vertices;
};

struct DetectResult {
  Verdict verdict = Verdict::Absent;
  std::optional<Certificate> cert;
  uint64_t nodes = 0;
  bool exhausted = false;
};

// Definitional validators. These re-check a certificate from scratch against
// the structure definitions; every finder result must pass them.

// Induced cycle on >= 4 vertices, given in cyclic order.
bool is_hole(const Graph& g, const std::vector<int>& cycle);
bool is_even_hole(const Graph& g, const std::vector<int>& cycle);

// Two nonadjacent ends joined by three induced paths of length >= 2 whose
// interiors are pairwise disjoint and anticomplete.
bool is_theta(const Graph& g, int a, int b, const std::array<std::vector<int>, 3>& paths);

// Two vertex-disjoint triangles joined by three vertex-disjoint paths, one per
// corner pair, with no edges besides the triangles and the paths.
bool is_prism(const Graph& g, const std::array<int, 3>& tri_a, const std::array<int, 3>& tri_b,
              const std::array<std::vector<int>, 3>& paths);

// Apex joined to a triangle by three paths sharing only the apex, at most one
// of length one, no other edges. Has exactly four vertices of degree three.
bool is_pyramid(const Graph& g, int apex, const std::array<int, 3>& base,
                const std::array<std::vector<int>, 3>& paths);

// hole is a hole of g avoiding center, and center has >= 3 neighbours on it.
bool is_wheel(const Graph& g, const std::vector<int>& hole, int center);

bool validate_certificate(const Graph& g, const Certificate& cert, std::string* why = nullptr);

// Wheel taxonomy. spokes = |N(center) on hole|.
struct WheelFlags {
  int spokes = 0;
  bool even = false;           // even number of spokes
  bool universal = false;      // center complete to hole
  bool twin = false;           // spokes are exactly 3 consecutive hole vertices
  bool short_pyramid = false;  // exactly 3 spokes of which exactly two adjacent
  bool proper = false;         // neither twin nor short pyramid
};
WheelFlags wheel_flags(const Graph& g, const std::vector<int>& hole, int center);

// Sectors: maximal hole subpaths whose interior avoids N(center), listed in
// cyclic order, each including its two spoke endpoints. A sector is long iff
// it has nonempty interior.
std::vector<std::vector<int>> wheel_sectors(const Graph& g, const std::vector<int>& hole,
                                            int center);

// Finders. Certificates use these role keys:
//   c4 / even_hole / hole: "cycle" (cyclic order, min vertex first, smaller
//       neighbour second)
//   theta: "ends" [a,b] with a<b, "path1".."path3" (each a..b, sorted among
//       themselves lexicographically)
//   prism: "triangle1" (contains the global min corner, ascending),
//       "triangle2" (matched order), "path1".."path3" (triangle1[i]..triangle2[i])
//   pyramid: "apex", "base" (ascending), "path1".."path3" (apex..base[i])
//   wheel: "hole" (canonical cyclic order), "center"
DetectResult find_c4(const Graph& g, uint64_t budget = kDefaultBudget);
DetectResult find_hole(const Graph& g, uint64_t budget = kDefaultBudget);
DetectResult find_even_hole(const Graph& g, uint64_t budget = kDefaultBudget);
DetectResult find_theta(const Graph& g, uint64_t budget = kDefaultBudget);
DetectResult find_prism(const Graph& g, uint64_t budget = kDefaultBudget);
DetectResult find_pyramid(const Graph& g, uint64_t budget = kDefaultBudget);

enum class WheelFilter { Any, Even, Proper, ProperNonUniversal };
DetectResult find_wheel(const Graph& g, WheelFilter filter = WheelFilter::Any,
                        uint64_t budget = kDefaultBudget);

// A hub is a vertex that is the center of some proper wheel.
struct HubResult {
  Verdict verdict = Verdict::Absent;  // Present iff some hub was confirmed
  std::vector<int> hubs;
  std::vector<int> unresolved;  // budget ran out before deciding these
  std::map<int, Certificate> witness;
  uint64_t nodes = 0;
};
HubResult find_hubs(const Graph& g, uint64_t budget = kDefaultBudget);

// Membership in the class of (C4, theta, prism, even wheel)-free graphs.
// Violations are searched in the fixed order c4, theta, prism, even wheel
// (then clique of size t for the bounded variant) and the first one found is
// reported.
struct ClassResult {
  Tri in_class = Tri::Unknown;
  std::optional<Certificate> violation;
  uint64_t nodes = 0;
  bool exhausted = false;
};
ClassResult class_membership(const Graph& g, uint64_t budget = kDefaultBudget);
// Additionally requires clique number < t. The clique violation certificate
// has kind "clique" with role "clique".
ClassResult class_membership_bounded(const Graph& g, int t, uint64_t budget = kDefaultBudget);

std::string certificate_json(const Certificate& cert);

}  // namespace ehf
