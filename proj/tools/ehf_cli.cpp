#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ehf/connectivity.hpp"
#include "ehf/graph.hpp"
#include "ehf/harness.hpp"
#include "ehf/hubs.hpp"
#include "ehf/io.hpp"
#include "ehf/solvers.hpp"
#include "ehf/structures.hpp"
#include "ehf/treedec.hpp"

using nlohmann::json;
using namespace ehf;

namespace {

std::string iso_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// every command fills one envelope; --json writes it out ("-" for stdout)
struct Emitter {
  json j;
  std::string path;

  int finish(int code) {
    if (!path.empty()) {
      j["schema"] = 1;
      j["exit"] = code;
      j["timestamp"] = iso_now();
      if (path == "-") {
        std::cout << j.dump() << "\n";
      } else {
        std::ofstream f(path);
        if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
        f << j.dump() << "\n";
      }
    }
    return code;
  }
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void check_vertex(const Graph& g, int v, const char* name) {
  if (v < 0 || v >= g.n)
    throw std::invalid_argument(std::string(name) + "=" + std::to_string(v) +
                                " out of range for n=" + std::to_string(g.n));
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json cert_json(const Certificate& c) { return json::parse(certificate_json(c)); }

WeightFunction load_weights(const Graph& g, const std::string& path) {
  if (path.empty()) return WeightFunction::uniform(g.n);
  return WeightFunction::from_map(g.n, read_weights_file(path), true);
}

TreeDecomposition load_td(const std::string& path) { return from_pace(slurp(path)); }

const char* violation_name(TdViolation::Kind k) {
  switch (k) {
    case TdViolation::Kind::BadTree: return "bad_tree";
    case TdViolation::Kind::BadVertex: return "bad_vertex";
    case TdViolation::Kind::VertexUncovered: return "vertex_uncovered";
    case TdViolation::Kind::EdgeUncovered: return "edge_uncovered";
    case TdViolation::Kind::NotSubtree: return "not_subtree";
  }
  return "?";
}

// the library reports guardrail and budget stops as exceptions; those exit 3,
// plain bad input exits 2
bool is_guardrail(const std::string& msg) {
  for (const char* k : {"guardrail", "guarded", "budget", "limited", "too large", "unsupported"})
    if (msg.find(k) != std::string::npos) return true;
  return false;
}

struct Args {
  std::string graph_path, td_path, weights_path, out_path, json_path, csv_path;
  std::string kind, family, mode = "td", problem, action, format = "edgelist", eps;
  int a = -1, b = -1, t = 0, k = 3, r = 0, d = 1, n = 0, dmax = -1, pairs = 10, dmax_cap = 2;
  int guardrail = 9;
  uint64_t seed = 0, budget = kDefaultBudget;
  bool exhaustive = false, force = false;
  std::vector<int> ns;
  std::vector<uint64_t> seeds;
  std::optional<double> p;
};

int cmd_detect(const Args& a) {
  Emitter em{{}, a.json_path};
  Graph g = read_graph_file(a.graph_path);
  DetectResult dr;
  if (a.kind == "c4") dr = find_c4(g, a.budget);
  else if (a.kind == "hole") dr = find_hole(g, a.budget);
  else if (a.kind == "even_hole") dr = find_even_hole(g, a.budget);
  else if (a.kind == "theta") dr = find_theta(g, a.budget);
  else if (a.kind == "prism") dr = find_prism(g, a.budget);
  else if (a.kind == "pyramid") dr = find_pyramid(g, a.budget);
  else if (a.kind == "wheel") dr = find_wheel(g, WheelFilter::Any, a.budget);
  else if (a.kind == "even_wheel") dr = find_wheel(g, WheelFilter::Even, a.budget);
  else if (a.kind == "proper_wheel") dr = find_wheel(g, WheelFilter::Proper, a.budget);
  else if (a.kind == "proper_nonuniversal_wheel")
    dr = find_wheel(g, WheelFilter::ProperNonUniversal, a.budget);
  else throw std::invalid_argument("unknown kind " + a.kind);
  em.j["command"] = "detect";
  em.j["kind"] = a.kind;
  em.j["verdict"] = to_string(dr.verdict);
  em.j["nodes"] = dr.nodes;
  em.j["exhausted"] = dr.exhausted;
  if (dr.cert) em.j["certificate"] = cert_json(*dr.cert);
  std::cout << a.kind << ": " << to_string(dr.verdict);
  if (dr.cert) {
    std::cout << " [";
    for (size_t i = 0; i < dr.cert->vertices.size(); i++)
      std::cout << (i ? " " : "") << dr.cert->vertices[i];
    std::cout << "]";
  }
  std::cout << "\n";
  if (dr.verdict == Verdict::Present) return em.finish(0);
  return em.finish(dr.verdict == Verdict::Absent ? 1 : 3);
}

int cmd_class(const Args& a) {
  Emitter em{{}, a.json_path};
  Graph g = read_graph_file(a.graph_path);
  ClassResult cr = a.t > 0 ? class_membership_bounded(g, a.t, a.budget)
                           : class_membership(g, a.budget);
  std::string verdict;
  if (cr.in_class == Tri::Yes)
    verdict = a.t > 0 ? "IN_C_" + std::to_string(a.t) : "IN_C";
  else if (cr.in_class == Tri::No)
    verdict = "VIOLATION";
  else
    verdict = "UNKNOWN";
  em.j["command"] = "class";
  em.j["t"] = a.t;
  em.j["verdict"] = verdict;
  em.j["in_class"] = to_string(cr.in_class);
  em.j["nodes"] = cr.nodes;
  em.j["exhausted"] = cr.exhausted;
  if (cr.violation) em.j["violation"] = cert_json(*cr.violation);
  std::cout << verdict;
  if (cr.violation) std::cout << " (" << cr.violation->kind << ")";
  std::cout << "\n";
  if (cr.in_class == Tri::Yes) return em.finish(0);
  return em.finish(cr.in_class == Tri::No ? 1 : 3);
}

int cmd_banana(const Args& a) {
  Emitter em{{}, a.json_path};
  Graph g = read_graph_file(a.graph_path);
  check_vertex(g, a.a, "a");
  check_vertex(g, a.b, "b");
  Banana bn = max_banana(g, a.a, a.b);
  VertexSet sep = min_separator(g, a.a, a.b);
  em.j["command"] = "banana";
  em.j["a"] = a.a;
  em.j["b"] = a.b;
  em.j["k"] = bn.k();
  em.j["paths"] = bn.paths;
  em.j["separator"] = sep;
  std::cout << "banana " << a.a << ".." << a.b << ": k=" << bn.k() << ", separator size "
            << sep.size() << "\n";
  return em.finish(0);
}

int cmd_separator(const Args& a) {
  Emitter em{{}, a.json_path};
  Graph g = read_graph_file(a.graph_path);
  em.j["command"] = "separator";
  if (a.dmax >= 0) {
    WeightFunction w = load_weights(g, a.weights_path);
    auto y = dominated_balanced_separator(g, w, a.dmax, SeparatorStrategy::Guided);
    em.j["d_max"] = a.dmax;
    em.j["found"] = y.has_value();
    if (y) {
      em.j["y"] = *y;
      em.j["separator"] = neighborhood(g, *y, true);
      std::cout << "dominated separator: |y|=" << y->size() << "\n";
      return em.finish(0);
    }
    std::cout << "no dominated balanced separator with d_max=" << a.dmax << "\n";
    return em.finish(1);
  }
  check_vertex(g, a.a, "a");
  check_vertex(g, a.b, "b");
  VertexSet sep = min_separator(g, a.a, a.b);
  em.j["a"] = a.a;
  em.j["b"] = a.b;
  em.j["separator"] = sep;
  em.j["size"] = sep.size();
  std::cout << "separator " << a.a << ".." << a.b << ": size " << sep.size() << "\n";
  return em.finish(0);
}

int cmd_td(const Args& a) {
  Emitter em{{}, a.json_path};
  Graph g = read_graph_file(a.graph_path);
  em.j["command"] = "td";
  em.j["action"] = a.action;
  if (a.action == "validate") {
    if (a.td_path.empty()) throw std::invalid_argument("validate needs --td");
    TreeDecomposition td = load_td(a.td_path);
    TdVerdict v = validate_td(g, td);
    em.j["valid"] = v.valid;
    em.j["width"] = td.width();
    em.j["violations"] = json::array();
    for (const TdViolation& viol : v.violations)
      em.j["violations"].push_back({{"kind", violation_name(viol.kind)},
                                    {"a", viol.a},
                                    {"b", viol.b},
                                    {"detail", viol.detail}});
    std::cout << (v.valid ? "valid" : "invalid") << " (width " << td.width() << ")\n";
    return em.finish(v.valid ? 0 : 1);
  }
  if (a.action == "convert") {
    TreeDecomposition td = min_fill_td(g);
    em.j["width"] = td.width();
    em.j["nodes"] = td.nodes();
    write_text(a.out_path, to_pace(td));
    return em.finish(0);
  }
  if (a.action == "exact") {
    TreewidthResult r = treewidth_exact(g);
    em.j["lower"] = r.lower;
    em.j["upper"] = r.upper;
    em.j["exact"] = r.exact;
    if (r.witness && !a.out_path.empty()) write_text(a.out_path, to_pace(*r.witness));
    std::cout << "treewidth " << (r.exact ? std::to_string(r.upper)
                                          : "[" + std::to_string(r.lower) + "," +
                                                std::to_string(r.upper) + "]")
              << "\n";
    return em.finish(r.exact ? 0 : 3);
  }
  if (a.action == "atomic") {
    TdMode mode = a.exhaustive ? TdMode::Exhaustive : TdMode::Heuristic;
    AtomicTd at = atomic_td(g, a.k, mode, a.guardrail);
    em.j["k"] = a.k;
    em.j["width"] = at.td.width();
    em.j["optimal"] = at.optimal;
    em.j["max_adhesion"] = max_adhesion(at.td);
    if (!a.out_path.empty()) write_text(a.out_path, to_pace(at.td));
    std::cout << "atomic td: width " << at.td.width() << ", max adhesion "
              << max_adhesion(at.td) << (at.optimal ? " (optimal fatness)" : "") << "\n";
    return em.finish(0);
  }
  if (a.action == "basket") {
    check_vertex(g, a.a, "a");
    check_vertex(g, a.b, "b");
    TreeDecomposition td = a.td_path.empty()
                               ? atomic_td(g, a.k,
                                           a.exhaustive ? TdMode::Exhaustive : TdMode::Heuristic,
                                           a.guardrail)
                                     .td
                               : load_td(a.td_path);
    auto pr = basket_pair(g, td, a.a, a.b);
    em.j["a"] = a.a;
    em.j["b"] = a.b;
    em.j["found"] = pr.has_value();
    if (pr) {
      em.j["t1"] = pr->first;
      em.j["t2"] = pr->second;
      em.j["bag1"] = td.bags[pr->first];
      em.j["bag2"] = td.bags[pr->second];
      std::cout << "basket pair: nodes " << pr->first << ", " << pr->second << "\n";
      return em.finish(0);
    }
    std::cout << "no node pair verifies\n";
    return em.finish(1);
  }
  if (a.action == "center") {
    TreeDecomposition td = a.td_path.empty() ? min_fill_td(g) : load_td(a.td_path);
    WeightFunction w = load_weights(g, a.weights_path);
    int t0 = center_node(g, td, w);
    em.j["node"] = t0;
    em.j["bag"] = td.bags[t0];
    std::cout << "center node " << t0 << "\n";
    return em.finish(0);
  }
  throw std::invalid_argument("unknown td action " + a.action);
}

int cmd_solve(const Args& a) {
  Emitter em{{}, a.json_path};
  Graph g = read_graph_file(a.graph_path);
  ProblemInstance inst;
  inst.g = g;
  if (a.problem == "stable_set") inst.problem = Problem::StableSet;
  else if (a.problem == "vertex_cover") inst.problem = Problem::VertexCover;
  else if (a.problem == "dominating_set") inst.problem = Problem::DominatingSet;
  else if (a.problem == "feedback_vertex_set") inst.problem = Problem::FeedbackVertexSet;
  else if (a.problem == "coloring") inst.problem = Problem::Coloring;
  else if (a.problem == "rcoloring") inst.problem = Problem::RColoring;
  else throw std::invalid_argument("unknown problem " + a.problem);
  inst.r = a.r;

  Solution sol;
  if (a.mode == "td") {
    TreeDecomposition td = a.td_path.empty() ? min_fill_td(g) : load_td(a.td_path);
    sol = solve_on_td(inst, td);
  } else if (a.mode == "brute") {
    sol = brute_force(inst);
  } else if (a.mode == "ptas") {
    if (inst.problem != Problem::VertexCover)
      throw std::invalid_argument("ptas covers vertex_cover only");
    if (a.eps.empty()) throw std::invalid_argument("ptas needs --eps");
    sol = ptas_vertex_cover(g, parse_rat(a.eps));
  } else if (a.mode == "qptas") {
    if (inst.problem != Problem::StableSet)
      throw std::invalid_argument("qptas covers stable_set only");
    if (a.eps.empty()) throw std::invalid_argument("qptas needs --eps");
    sol = qptas_stable_set(g, parse_rat(a.eps), a.d, 0, a.force);
  } else {
    throw std::invalid_argument("unknown mode " + a.mode);
  }

  em.j["command"] = "solve";
  em.j["problem"] = to_string(inst.problem);
  em.j["mode"] = a.mode;
  em.j["value"] = sol.value;
  em.j["feasible"] = sol.feasible;
  em.j["witness"] = sol.witness;
  if (!sol.colors.empty()) em.j["colors"] = sol.colors;
  em.j["stats"] = {{"dp_states_total", sol.stats.dp_states_total},
                   {"dp_states_peak", sol.stats.dp_states_peak},
                   {"nice_nodes", sol.stats.nice_nodes},
                   {"width", sol.stats.width},
                   {"pairs_checked", sol.stats.pairs_checked},
                   {"cliques_stripped", sol.stats.cliques_stripped},
                   {"exact_fallback", sol.stats.exact_fallback}};
  std::cout << to_string(inst.problem) << " = " << sol.value
            << (sol.feasible ? "" : " (infeasible)") << "\n";
  return em.finish(sol.feasible ? 0 : 1);
}

int cmd_hubpart(const Args& a) {
  Emitter em{{}, a.json_path};
  Graph g = read_graph_file(a.graph_path);
  check_vertex(g, a.a, "a");
  check_vertex(g, a.b, "b");
  HubResult hr = find_hubs(g, a.budget);
  if (!hr.unresolved.empty()) {
    std::cerr << "hub search budget exhausted with " << hr.unresolved.size()
              << " vertices unresolved\n";
    return em.finish(3);
  }
  HubPartition hp = hub_partition(g, a.a, a.b, hr.hubs);
  em.j = json::parse(hub_partition_json(hp));
  em.j["command"] = "hubpart";
  em.j["hubs"] = hr.hubs;
  em.j["dimension_greedy"] = (int)hp.layers.size();
  if (a.exhaustive) {
    int exact = hub_dimension(g, a.a, a.b, HubSearch::Exhaustive, hr.hubs, hp.d);
    em.j["dimension_exhaustive"] = exact;
    em.j["d_bound"] = hp.d;
  }
  std::cout << hr.hubs.size() << " hubs, k=" << hp.layers.size() << ", d=" << hp.d << "\n";
  return em.finish(0);
}

int cmd_generate(const Args& a) {
  Emitter em{{}, a.json_path};
  auto fam = family_from_string(a.family);
  if (!fam) throw std::invalid_argument("unknown family " + a.family);
  GeneratorSpec spec;
  spec.family = *fam;
  spec.n = a.n;
  spec.seed = a.seed;
  spec.t = a.t;
  spec.p = a.p;
  GeneratedGraph gen = generate(spec);
  em.j["command"] = "generate";
  em.j["family"] = to_string(spec.family);
  em.j["n"] = spec.n;
  em.j["host_n"] = gen.graph.n;
  em.j["seed"] = spec.seed;
  if (gen.spec.p) em.j["p"] = *gen.spec.p;
  if (spec.family == Family::RandomGnpFilteredCt) em.j["t"] = spec.t;
  em.j["attempts"] = gen.attempts;
  em.j["family_ok"] = gen.family_ok;
  em.j["family_note"] = gen.family_note;
  em.j["in_class"] = to_string(gen.membership.in_class);
  if (gen.membership.violation) em.j["violation"] = cert_json(*gen.membership.violation);
  em.j["edges"] = gen.graph.edges();
  if (!a.out_path.empty()) {
    std::ostringstream out;
    if (a.format == "edgelist") write_graph(out, gen.graph);
    else if (a.format == "dimacs") write_graph_dimacs(out, gen.graph);
    else throw std::invalid_argument("graphs are written as edgelist or dimacs, not " + a.format);
    write_text(a.out_path, out.str());
  }
  std::cout << to_string(spec.family) << ": n=" << gen.graph.n << " m="
            << gen.graph.edge_count() << " attempts=" << gen.attempts << " class="
            << to_string(gen.membership.in_class) << "\n";
  return em.finish(0);
}

int cmd_experiment(const Args& a) {
  auto fam = family_from_string(a.family);
  if (!fam) throw std::invalid_argument("unknown family " + a.family);
  if (a.ns.empty()) throw std::invalid_argument("experiment needs --ns");
  if (a.seeds.empty()) throw std::invalid_argument("experiment needs --seeds");
  ExperimentConfig cfg;
  cfg.family = *fam;
  cfg.ns = a.ns;
  cfg.seeds = a.seeds;
  cfg.t = a.t;
  cfg.p = a.p;
  cfg.pair_samples = a.pairs;
  cfg.dmax_cap = a.dmax_cap;
  cfg.budget = a.budget;
  ExperimentReport rep =
      a.kind == "banana" ? experiment_banana(cfg) : experiment_logtw(cfg);
  if (!a.json_path.empty()) write_text(a.json_path, report_json(rep) + "\n");
  if (!a.csv_path.empty()) write_text(a.csv_path, report_csv(rep));
  for (const CurvePoint& pt : rep.curve)
    std::cout << "n=" << pt.n << " mean " << pt.mean.str() << " max " << pt.max << " ("
              << pt.count << " runs)\n";
  if (rep.fit.finite)
    std::cout << rep.value_name << " vs log2 n: slope " << rep.fit.slope << " (se "
              << rep.fit.se << ")\n";
  if (rep.anchor_failures) std::cout << "anchor failures: " << rep.anchor_failures << "\n";
  return rep.anchor_failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure detection, connectivity, and decomposition toolkit"};
  app.require_subcommand(1);
  Args a;
  int rc = 0;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", a.graph_path, "graph file (edge list or dimacs)")->required();
    sub->add_option("--budget", a.budget, "search node budget");
    sub->add_option("--json", a.json_path, "write a json result ('-' for stdout)");
  };

  CLI::App* detect = app.add_subcommand("detect", "find one forbidden structure");
  add_graph(detect);
  detect->add_option("--kind", a.kind, "structure kind")
      ->required()
      ->check(CLI::IsMember({"c4", "hole", "even_hole", "theta", "prism", "pyramid", "wheel",
                             "even_wheel", "proper_wheel", "proper_nonuniversal_wheel"}));
  detect->callback([&] { rc = cmd_detect(a); });

  CLI::App* cls = app.add_subcommand("class", "class membership verdict");
  add_graph(cls);
  cls->add_option("--t", a.t, "also require clique number < t");
  cls->callback([&] { rc = cmd_class(a); });

  CLI::App* banana = app.add_subcommand("banana", "maximum banana between two vertices");
  add_graph(banana);
  banana->add_option("--a", a.a, "first endpoint")->required();
  banana->add_option("--b", a.b, "second endpoint")->required();
  banana->callback([&] { rc = cmd_banana(a); });

  CLI::App* sep = app.add_subcommand("separator", "minimum or dominated balanced separator");
  add_graph(sep);
  sep->add_option("--a", a.a, "first endpoint");
  sep->add_option("--b", a.b, "second endpoint");
  sep->add_option("--dmax", a.dmax, "search a dominated balanced separator with |Y| <= dmax");
  sep->add_option("--weights", a.weights_path, "weight file (uniform when absent)");
  sep->callback([&] { rc = cmd_separator(a); });

  CLI::App* td = app.add_subcommand("td", "tree decomposition operations");
  td->add_option("action", a.action, "validate|convert|exact|atomic|basket|center")
      ->required()
      ->check(CLI::IsMember({"validate", "convert", "exact", "atomic", "basket", "center"}));
  add_graph(td);
  td->add_option("--td", a.td_path, "decomposition file (pace format)");
  td->add_option("--k", a.k, "adhesion bound for atomic decompositions");
  td->add_flag("--exhaustive", a.exhaustive, "exhaustive atomic search");
  td->add_option("--guardrail", a.guardrail, "exhaustive search size guardrail");
  td->add_option("--a", a.a, "basket endpoint");
  td->add_option("--b", a.b, "basket endpoint");
  td->add_option("--weights", a.weights_path, "weight file for center");
  td->add_option("--out", a.out_path, "write the decomposition here (pace)");
  td->callback([&] { rc = cmd_td(a); });

  CLI::App* solve = app.add_subcommand("solve", "optimize a vertex-subset or coloring problem");
  add_graph(solve);
  solve->add_option("--problem", a.problem, "problem name")
      ->required()
      ->check(CLI::IsMember({"stable_set", "vertex_cover", "dominating_set",
                             "feedback_vertex_set", "coloring", "rcoloring"}));
  solve->add_option("--mode", a.mode, "td|brute|ptas|qptas");
  solve->add_option("--r", a.r, "colors for rcoloring");
  solve->add_option("--eps", a.eps, "approximation slack, e.g. 1/2");
  solve->add_option("--d", a.d, "qptas branching degree bound");
  solve->add_flag("--force", a.force, "override the qptas size guardrail");
  solve->add_option("--td", a.td_path, "decomposition file (pace format)");
  solve->callback([&] { rc = cmd_solve(a); });

  CLI::App* hub = app.add_subcommand("hubpart", "hub partition and hub dimension");
  add_graph(hub);
  hub->add_option("--a", a.a, "excluded vertex")->required();
  hub->add_option("--b", a.b, "excluded vertex")->required();
  hub->add_flag("--exhaustive", a.exhaustive, "also compute the exhaustive dimension");
  hub->callback([&] { rc = cmd_hubpart(a); });

  CLI::App* gen = app.add_subcommand("generate", "emit a graph from a named family");
  gen->add_option("--family", a.family, "family name")->required();
  gen->add_option("--n", a.n, "size (library index for handcrafted_library)")->required();
  gen->add_option("--seed", a.seed, "random seed");
  gen->add_option("--t", a.t, "clique bound for random_gnp_filtered_Ct");
  gen->add_option("--p", a.p, "edge probability override");
  gen->add_option("--out", a.out_path, "write the graph here");
  gen->add_option("--format", a.format, "edgelist|dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  gen->add_option("--json", a.json_path, "write a json result ('-' for stdout)");
  gen->add_option("--budget", a.budget, "verification budget");
  gen->callback([&] { rc = cmd_generate(a); });

  CLI::App* exp = app.add_subcommand("experiment", "measurement pipelines over a family");
  exp->add_option("--kind", a.kind, "logtw|banana")
      ->required()
      ->check(CLI::IsMember({"logtw", "banana"}));
  exp->add_option("--family", a.family, "family name")->required();
  exp->add_option("--ns", a.ns, "sizes")->required()->delimiter(',');
  exp->add_option("--seeds", a.seeds, "seeds")->required()->delimiter(',');
  exp->add_option("--t", a.t, "clique bound");
  exp->add_option("--p", a.p, "edge probability override");
  exp->add_option("--pairs", a.pairs, "nonadjacent pairs sampled per instance");
  exp->add_option("--dmax-cap", a.dmax_cap, "largest dominated-separator d_max probed");
  exp->add_option("--budget", a.budget, "per-call search budget");
  exp->add_option("--json", a.json_path, "write the report here");
  exp->add_option("--csv", a.csv_path, "write the curve here");
  exp->callback([&] { rc = cmd_experiment(a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    if (is_guardrail(e.what())) {
      std::cerr << "guardrail: " << e.what() << "\n";
      return 3;
    }
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << (is_guardrail(e.what()) ? "budget: " : "error: ") << e.what() << "\n";
    return is_guardrail(e.what()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
