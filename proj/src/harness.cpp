#include "ehf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ehf/connectivity.hpp"
#include "ehf/hubs.hpp"
#include "ehf/treedec.hpp"

namespace ehf {

const char* to_string(Family f) {
  switch (f) {
    case Family::RandomGnpFilteredC: return "random_gnp_filtered_C";
    case Family::RandomGnpFilteredCt: return "random_gnp_filtered_Ct";
    case Family::ChordalRandom: return "chordal_random";
    case Family::Cycles: return "cycles";
    case Family::ThetaFreeRandom: return "theta_free_random";
    case Family::HandcraftedLibrary: return "handcrafted_library";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::RandomGnpFilteredC, Family::RandomGnpFilteredCt, Family::ChordalRandom,
                   Family::Cycles, Family::ThetaFreeRandom, Family::HandcraftedLibrary})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

namespace {

Graph cyc(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; i++) es.push_back({i, (i + 1) % n});
  return make_graph(n, es);
}

Graph path_g(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1});
  return make_graph(n, es);
}

Graph clique_g(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) es.push_back({u, v});
  return make_graph(n, es);
}

Graph star_g(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; i++) es.push_back({0, i});
  return make_graph(leaves + 1, es);
}

Graph grid_g(int rows, int cols) {
  std::vector<std::pair<int, int>> es;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; r++)
    for (int c = 0; c < cols; c++) {
      if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
    }
  return make_graph(rows * cols, es);
}

Graph kab(int a, int b) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < a; u++)
    for (int v = 0; v < b; v++) es.push_back({u, a + v});
  return make_graph(a + b, es);
}

Graph wheel_g(int hole_len, const std::vector<int>& spokes) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < hole_len; i++) es.push_back({i, (i + 1) % hole_len});
  for (int s : spokes) es.push_back({s, hole_len});
  return make_graph(hole_len + 1, es);
}

Graph petersen_g() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; i++) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({i, i + 5});
    es.push_back({i + 5, 5 + (i + 2) % 5});
  }
  return make_graph(10, es);
}

Graph caterpillar8() {
  return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}});
}

Graph pyramid222() {
  return make_graph(
      7, {{0, 1}, {1, 4}, {0, 2}, {2, 5}, {0, 3}, {3, 6}, {4, 5}, {5, 6}, {4, 6}});
}

Graph theta233() {
  return make_graph(7, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}});
}

Graph prism111() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph w5_pair() {
  std::vector<std::pair<int, int>> es;
  for (int b : {0, 6}) {
    for (int i = 0; i < 5; i++) {
      es.push_back({b + i, b + (i + 1) % 5});
      es.push_back({b + i, b + 5});
    }
  }
  return make_graph(12, es);
}

const std::vector<std::pair<std::string, Graph (*)()>>& library() {
  static const std::vector<std::pair<std::string, Graph (*)()>> entries = {
      {"c5", [] { return cyc(5); }},
      {"c6", [] { return cyc(6); }},
      {"c7", [] { return cyc(7); }},
      {"path10", [] { return path_g(10); }},
      {"star6", [] { return star_g(6); }},
      {"caterpillar8", caterpillar8},
      {"k4", [] { return clique_g(4); }},
      {"k6", [] { return clique_g(6); }},
      {"petersen", petersen_g},
      {"grid33", [] { return grid_g(3, 3); }},
      {"grid44", [] { return grid_g(4, 4); }},
      {"k23", [] { return kab(2, 3); }},
      {"w5", [] { return wheel_g(5, {0, 1, 2, 3, 4}); }},
      {"w7", [] { return wheel_g(7, {0, 1, 2, 3, 4, 5, 6}); }},
      {"wheel9-3", [] { return wheel_g(9, {0, 3, 6}); }},
      {"pyramid222", pyramid222},
      {"theta233", theta233},
      {"prism111", prism111},
      {"w5-pair", w5_pair},
  };
  return entries;
}

Graph gnp_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  double clamped = std::min(1.0, std::max(0.0, p));
  uint64_t thr = (uint64_t)llround(clamped * 4294967296.0);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if ((rng() >> 32) < thr) es.push_back({u, v});
  return make_graph(n, es);
}

// each new vertex attaches to a clique inside an earlier vertex's
// neighborhood, so reverse insertion order is a perfect elimination order
Graph chordal_graph(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; i++) {
    int j = (int)(rng() % i);
    std::vector<int> k = {j};
    std::vector<int> cand;
    for (int u = 0; u < i; u++)
      if (u != j && adj[j][u]) cand.push_back(u);
    for (int x = (int)cand.size() - 1; x > 0; x--) std::swap(cand[x], cand[rng() % (x + 1)]);
    for (int u : cand) {
      bool joined = true;
      for (int v : k)
        if (!adj[u][v]) {
          joined = false;
          break;
        }
      if (joined && rng() % 100 < 55) k.push_back(u);
    }
    for (int v : k) {
      adj[i][v] = adj[v][i] = 1;
      es.push_back({v, i});
    }
  }
  return make_graph(n, es);
}

double default_p(Family f, int n) {
  double a = f == Family::ThetaFreeRandom ? 3.2 : 2.4;
  return std::min(0.5, a / std::max(1, n));
}

std::string iso_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

std::vector<std::string> handcrafted_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : library()) out.push_back(name);
  return out;
}

GeneratedGraph generate(const GeneratorSpec& spec, int max_attempts) {
  GeneratedGraph out;
  out.spec = spec;
  switch (spec.family) {
    case Family::Cycles: {
      if (spec.n < 3) throw std::invalid_argument("cycles family needs n >= 3");
      out.graph = cyc(spec.n);
      out.family_ok = true;
      out.family_note = "cycle";
      out.attempts = 1;
      break;
    }
    case Family::HandcraftedLibrary: {
      if (spec.n < 0 || spec.n >= (int)library().size())
        throw std::invalid_argument("library index out of range, have " +
                                    std::to_string(library().size()) + " entries");
      out.graph = library()[spec.n].second();
      out.family_ok = true;
      out.family_note = "library:" + library()[spec.n].first;
      out.attempts = 1;
      break;
    }
    case Family::ChordalRandom: {
      if (spec.n < 1) throw std::invalid_argument("chordal_random needs n >= 1");
      out.graph = chordal_graph(spec.n, spec.seed);
      DetectResult hole = find_hole(out.graph);
      if (hole.verdict != Verdict::Absent)
        throw std::logic_error("chordal construction produced a hole");
      out.family_ok = true;
      out.family_note = "chordal (hole-free, verified)";
      out.attempts = 1;
      break;
    }
    case Family::RandomGnpFilteredC:
    case Family::RandomGnpFilteredCt:
    case Family::ThetaFreeRandom: {
      if (spec.n < 1) throw std::invalid_argument("random family needs n >= 1");
      double p = spec.p ? *spec.p : default_p(spec.family, spec.n);
      out.spec.p = p;
      std::mt19937_64 rng(spec.seed);
      int unknown = 0;
      for (int att = 1; att <= max_attempts; att++) {
        Graph g = gnp_graph(spec.n, p, rng());
        if (spec.family == Family::ThetaFreeRandom) {
          DetectResult dr = find_theta(g);
          if (dr.verdict == Verdict::Indeterminate) {
            unknown++;
            continue;
          }
          if (dr.verdict == Verdict::Present) continue;
          out.graph = g;
          out.membership = class_membership(g);
          out.family_ok = true;
          out.family_note = "theta-free";
          out.attempts = att;
          return out;
        }
        ClassResult cr = spec.family == Family::RandomGnpFilteredC
                             ? class_membership(g)
                             : class_membership_bounded(g, spec.t);
        if (cr.in_class == Tri::Unknown) {
          unknown++;
          continue;
        }
        if (cr.in_class == Tri::No) continue;
        out.graph = g;
        out.membership = cr;
        out.family_ok = true;
        out.family_note = spec.family == Family::RandomGnpFilteredC
                              ? "no c4, theta, prism, or even wheel"
                              : "no c4, theta, prism, or even wheel; clique < " +
                                    std::to_string(spec.t);
        out.attempts = att;
        return out;
      }
      std::ostringstream msg;
      msg << "rejection budget exhausted: 0/" << max_attempts << " accepted (family "
          << to_string(spec.family) << ", n=" << spec.n << ", p=" << p << ", " << unknown
          << " indeterminate)";
      throw std::runtime_error(msg.str());
    }
  }
  if (spec.family != Family::RandomGnpFilteredC && spec.family != Family::RandomGnpFilteredCt &&
      spec.family != Family::ThetaFreeRandom)
    out.membership = class_membership(out.graph);
  return out;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

InstanceRecord measure_instance(const GeneratedGraph& gen, const ExperimentConfig& cfg,
                                std::vector<std::string>& audit) {
  const Graph& g = gen.graph;
  auto t0 = std::chrono::steady_clock::now();
  InstanceRecord rec;
  rec.n = g.n;
  rec.spec_n = gen.spec.n;
  rec.seed = gen.spec.seed;
  rec.in_class = gen.membership.in_class;
  rec.family_ok = gen.family_ok;
  std::ostringstream tag;
  tag << "family=" << to_string(gen.spec.family) << " n=" << g.n << " seed=" << gen.spec.seed
      << ": ";
  audit.push_back(tag.str() + "generate -> " + gen.family_note + ", attempts=" +
                  std::to_string(gen.attempts) + ", class=" + to_string(rec.in_class));

  CliqueResult cq = clique_number(g, cfg.budget);
  rec.clique = cq.size;
  audit.push_back(tag.str() + "clique_number -> " + std::to_string(cq.size) +
                  (cq.exact ? "" : " (lower bound)"));

  TreewidthResult tw = treewidth_exact(g);
  rec.tw_lower = tw.lower;
  rec.tw_upper = tw.upper;
  rec.tw_exact = tw.exact;
  audit.push_back(tag.str() + "treewidth_exact -> [" + std::to_string(tw.lower) + "," +
                  std::to_string(tw.upper) + "] exact=" + (tw.exact ? "1" : "0"));

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < g.n; u++)
    for (int v = u + 1; v < g.n; v++)
      if (!g.has_edge(u, v)) pairs.push_back({u, v});
  std::mt19937_64 prng(gen.spec.seed * 0x9e3779b97f4a7c15ULL + (uint64_t)g.n);
  for (int i = (int)pairs.size() - 1; i > 0; i--) std::swap(pairs[i], pairs[prng() % (i + 1)]);
  if ((int)pairs.size() > cfg.pair_samples) pairs.resize(cfg.pair_samples);
  rec.pairs_sampled = (int)pairs.size();
  for (auto [a, b] : pairs) rec.banana = std::max(rec.banana, max_banana(g, a, b).k());
  audit.push_back(tag.str() + "max_banana over " + std::to_string(rec.pairs_sampled) +
                  " pairs -> " + std::to_string(rec.banana));

  WeightFunction w = WeightFunction::uniform(g.n);
  for (int d = 0; d <= cfg.dmax_cap; d++) {
    if (dominated_balanced_separator(g, w, d, SeparatorStrategy::Guided)) {
      rec.smallest_dmax = d;
      break;
    }
  }
  audit.push_back(tag.str() + "dominated_balanced_separator smallest d_max (cap " +
                  std::to_string(cfg.dmax_cap) + ") -> " + std::to_string(rec.smallest_dmax));

  HubResult hr = find_hubs(g, cfg.budget);
  rec.hub_count = hr.unresolved.empty() ? (int)hr.hubs.size() : -1;
  if (rec.hub_count > 0) {
    int a = -1, b = -1;
    for (int u = 0; u < g.n && a < 0; u++)
      for (int v = u + 1; v < g.n; v++)
        if (!g.has_edge(u, v)) {
          a = u;
          b = v;
          break;
        }
    if (a >= 0) {
      HubPartition hp = hub_partition(g, a, b, hr.hubs);
      rec.hub_k = (int)hp.layers.size();
      rec.hub_d = hp.d;
    }
  }
  audit.push_back(tag.str() + "find_hubs -> count=" + std::to_string(rec.hub_count) +
                  ", partition k=" + std::to_string(rec.hub_k) + " d=" +
                  std::to_string(rec.hub_d));

  rec.ms = ms_since(t0);
  return rec;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, bool banana_kind) {
  ExperimentReport r;
  r.kind = banana_kind ? "banana" : "logtw";
  r.family = cfg.family;
  r.t = cfg.family == Family::RandomGnpFilteredCt ? cfg.t : 0;
  r.value_name = banana_kind ? "banana" : "tw";
  r.caveat =
      "slope and intercept are empirical fits; the structural bounds they mirror "
      "carry no effective constants";
  auto t0 = std::chrono::steady_clock::now();

  std::vector<int> ns = cfg.ns;
  std::sort(ns.begin(), ns.end());
  std::vector<uint64_t> seeds = cfg.seeds;
  std::sort(seeds.begin(), seeds.end());
  for (int n : ns)
    for (uint64_t seed : seeds) {
      GeneratorSpec spec;
      spec.family = cfg.family;
      spec.n = n;
      spec.seed = seed;
      spec.t = cfg.t;
      spec.p = cfg.p;
      GeneratedGraph gen = generate(spec);
      r.records.push_back(measure_instance(gen, cfg, r.audit));
    }

  if (cfg.family == Family::ChordalRandom) {
    for (const InstanceRecord& rec : r.records) {
      bool ok = rec.tw_exact ? rec.tw_upper == rec.clique - 1
                             : rec.tw_lower <= rec.clique - 1 && rec.clique - 1 <= rec.tw_upper;
      if (!ok) r.anchor_failures++;
    }
  }

  std::map<int, std::vector<int>> by_n;
  for (const InstanceRecord& rec : r.records)
    by_n[rec.n].push_back(banana_kind ? rec.banana : rec.tw_upper);
  for (const auto& [n, vals] : by_n) {
    CurvePoint pt;
    pt.n = n;
    pt.log2n = std::log2((double)n);
    long long sum = 0;
    for (int v : vals) {
      sum += v;
      pt.max = std::max(pt.max, v);
    }
    pt.count = (int)vals.size();
    pt.mean = Rat(sum, pt.count);
    r.curve.push_back(pt);
  }

  int m = (int)r.curve.size();
  if (m >= 2 && r.curve.front().n != r.curve.back().n) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const CurvePoint& pt : r.curve) {
      double x = pt.log2n, y = (double)pt.mean.num / (double)pt.mean.den;
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double den = m * sxx - sx * sx;
    r.fit.slope = (m * sxy - sx * sy) / den;
    r.fit.intercept = (sy - r.fit.slope * sx) / m;
    r.fit.finite = std::isfinite(r.fit.slope) && std::isfinite(r.fit.intercept);
    if (m >= 3) {
      double ssr = 0;
      for (const CurvePoint& pt : r.curve) {
        double y = (double)pt.mean.num / (double)pt.mean.den;
        double e = y - (r.fit.intercept + r.fit.slope * pt.log2n);
        ssr += e * e;
      }
      r.fit.se = std::sqrt(ssr / (m - 2) / (sxx - sx * sx / m));
    }
    r.fit.lo = r.fit.slope - 2 * r.fit.se;
    r.fit.hi = r.fit.slope + 2 * r.fit.se;
  }
  r.total_ms = ms_since(t0);
  return r;
}

}  // namespace

ExperimentReport experiment_logtw(const ExperimentConfig& cfg) {
  return run_experiment(cfg, false);
}

ExperimentReport experiment_banana(const ExperimentConfig& cfg) {
  return run_experiment(cfg, true);
}

std::string report_json(const ExperimentReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = r.kind;
  j["family"] = to_string(r.family);
  j["t"] = r.t;
  j["value_name"] = r.value_name;
  j["caveat"] = r.caveat;
  j["anchor_failures"] = r.anchor_failures;
  j["records"] = nlohmann::json::array();
  nlohmann::json record_ms = nlohmann::json::array();
  for (const InstanceRecord& rec : r.records) {
    nlohmann::json jr;
    jr["n"] = rec.n;
    jr["spec_n"] = rec.spec_n;
    jr["seed"] = rec.seed;
    jr["in_class"] = to_string(rec.in_class);
    jr["family_ok"] = rec.family_ok;
    jr["clique"] = rec.clique;
    jr["tw"] = {{"lower", rec.tw_lower}, {"upper", rec.tw_upper}, {"exact", rec.tw_exact}};
    jr["banana"] = rec.banana;
    jr["pairs_sampled"] = rec.pairs_sampled;
    jr["smallest_dmax"] = rec.smallest_dmax;
    jr["hubs"] = {{"count", rec.hub_count}, {"k", rec.hub_k}, {"d", rec.hub_d}};
    j["records"].push_back(jr);
    record_ms.push_back(rec.ms);
  }
  j["curve"] = nlohmann::json::array();
  for (const CurvePoint& pt : r.curve)
    j["curve"].push_back({{"n", pt.n},
                          {"log2n", pt.log2n},
                          {"mean", {{"num", pt.mean.num}, {"den", pt.mean.den}}},
                          {"max", pt.max},
                          {"count", pt.count}});
  j["fit"] = {{"finite", r.fit.finite}, {"slope", r.fit.slope}, {"intercept", r.fit.intercept},
              {"se", r.fit.se},         {"lo", r.fit.lo},       {"hi", r.fit.hi}};
  j["audit"] = r.audit;
  j["timing"] = {{"total_ms", r.total_ms}, {"record_ms", record_ms}};
  j["timestamp"] = iso_now();
  return j.dump();
}

std::string report_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "n,log2n,mean_num,mean_den,max,count\n";
  for (const CurvePoint& pt : r.curve)
    out << pt.n << "," << pt.log2n << "," << pt.mean.num << "," << pt.mean.den << "," << pt.max
        << "," << pt.count << "\n";
  return out.str();
}

}  // namespace ehf
