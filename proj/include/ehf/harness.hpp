#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehf/graph.hpp"
#include "ehf/rational.hpp"
#include "ehf/structures.hpp"

namespace ehf {

enum class Family {
  RandomGnpFilteredC,   // G(n,p) resampled until class membership holds
  RandomGnpFilteredCt,  // additionally clique number < t
  ChordalRandom,        // incremental clique-attachment construction
  Cycles,               // C_n
  ThetaFreeRandom,      // G(n,p) resampled until theta-free
  HandcraftedLibrary,   // fixed named graphs, n is the library index
};
const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

// p defaults to a per-n schedule tuned so the filtered families keep
// acceptance above ~1% at n <= 18 (measured rates in docs/generators.md).
struct GeneratorSpec {
  Family family = Family::Cycles;
  int n = 0;
  uint64_t seed = 0;
  int t = 3;                // clique bound, RandomGnpFilteredCt only
  std::optional<double> p;  // edge probability override for the random families
};

struct GeneratedGraph {
  Graph graph;
  GeneratorSpec spec;      // p resolved to the value actually used
  ClassResult membership;  // full class check, recorded for every family
  bool family_ok = false;  // the family's own defining check
  std::string family_note;
  int attempts = 0;  // rejection rounds consumed, 1 when nothing was rejected
};

std::vector<std::string> handcrafted_names();

// Identical spec (seed included) gives an identical graph. Filtered families
// resample until their defining check passes; exhausting max_attempts throws
// with the acceptance statistics in the message.
GeneratedGraph generate(const GeneratorSpec& spec, int max_attempts = 5000);

// One row per generated instance. Wall-clock time lives in ms only; the JSON
// writer quarantines it with the timestamp so the rest is byte-stable.
struct InstanceRecord {
  int n = 0;  // host vertex count (differs from spec_n for library entries)
  int spec_n = 0;
  uint64_t seed = 0;
  Tri in_class = Tri::Unknown;
  bool family_ok = false;
  int clique = 0;
  int tw_lower = 0, tw_upper = 0;
  bool tw_exact = false;
  int banana = 0;  // max over the sampled nonadjacent pairs, 0 if none exist
  int pairs_sampled = 0;
  int smallest_dmax = -1;  // least d with a dominated balanced separator, -1 none found
  int hub_count = -1;      // -1 when the hub search hit its budget
  int hub_k = 0, hub_d = 0;
  double ms = 0;
};

struct CurvePoint {
  int n = 0;
  double log2n = 0;
  Rat mean{0};
  int max = 0;
  int count = 0;
};

// Least squares of the per-n means against log2 n. se is the slope's standard
// error (0 with fewer than three points); lo/hi bracket slope +- 2 se.
struct CurveFit {
  bool finite = false;
  double slope = 0, intercept = 0;
  double se = 0, lo = 0, hi = 0;
};

struct ExperimentReport {
  std::string kind;  // "logtw" | "banana"
  Family family = Family::Cycles;
  int t = 0;
  std::string value_name;  // which record field the curve aggregates
  std::vector<InstanceRecord> records;
  std::vector<CurvePoint> curve;
  CurveFit fit;
  int anchor_failures = 0;  // chordal instances with exact tw != clique - 1
  std::string caveat;
  std::vector<std::string> audit;  // one line per library call behind a number
  double total_ms = 0;
};

struct ExperimentConfig {
  Family family = Family::Cycles;
  std::vector<int> ns;
  std::vector<uint64_t> seeds;
  int t = 3;
  std::optional<double> p;
  int pair_samples = 10;
  int dmax_cap = 2;
  uint64_t budget = kDefaultBudget;
};

// Both experiments fill every record field; they differ in the aggregated
// curve (treewidth vs log2 n, max banana vs log2 n).
ExperimentReport experiment_logtw(const ExperimentConfig& cfg);
ExperimentReport experiment_banana(const ExperimentConfig& cfg);

// schema 1, keys sorted, rationals as {num, den}; "timing" and "timestamp"
// are the only fields that vary between identically-configured runs
std::string report_json(const ExperimentReport& r);
std::string report_csv(const ExperimentReport& r);

}  // namespace ehf
