#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehf/structures.hpp"
#include "support/builders.hpp"
#include "support/oracle.hpp"

using namespace ehf;
using support::cycle;
using support::clique;
using support::complete_bipartite;
using support::disjoint_union;
using support::gnp;
using support::grid;
using support::path_graph;
using support::petersen;
using support::prism_graph;
using support::pyramid_graph;
using support::star;
using support::theta_graph;
using support::wheel_graph;

TEST_CASE("hole validators") {
  auto c6 = cycle(6);
  CHECK(is_hole(c6, {0, 1, 2, 3, 4, 5}));
  CHECK(is_hole(c6, {2, 3, 4, 5, 0, 1}));
  CHECK(is_hole(c6, {5, 4, 3, 2, 1, 0}));
  CHECK(!is_hole(c6, {0, 1, 2, 4, 3, 5}));
  CHECK(!is_hole(c6, {0, 1, 2, 3}));
  CHECK(!is_hole(c6, {0, 1, 2, 2, 4, 5}));
  CHECK(!is_hole(clique(4), {0, 1, 2, 3}));
  CHECK(!is_hole(cycle(3), {0, 1, 2}));
  CHECK(is_even_hole(c6, {0, 1, 2, 3, 4, 5}));
  CHECK(is_even_hole(cycle(4), {0, 1, 2, 3}));
  CHECK(!is_even_hole(cycle(5), {0, 1, 2, 3, 4}));
  ehf::Graph chorded = ehf::make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  CHECK(!is_hole(chorded, {0, 1, 2, 3, 4, 5}));
}

TEST_CASE("theta validator") {
  auto k23 = complete_bipartite(2, 3);
  std::array<std::vector<int>, 3> paths = {{{0, 2, 1}, {0, 3, 1}, {0, 4, 1}}};
  CHECK(is_theta(k23, 0, 1, paths));
  std::array<std::vector<int>, 3> rev = {{{1, 2, 0}, {1, 3, 0}, {1, 4, 0}}};
  CHECK(is_theta(k23, 1, 0, rev));
  CHECK(!is_theta(k23, 0, 2, paths));
  std::array<std::vector<int>, 3> dup = {{{0, 2, 1}, {0, 2, 1}, {0, 4, 1}}};
  CHECK(!is_theta(k23, 0, 1, dup));
  // adjacent interiors (edge 2-3 added) must be rejected
  ehf::Graph bad =
      ehf::make_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}, {2, 3}});
  CHECK(!is_theta(bad, 0, 1, paths));
}

TEST_CASE("prism and pyramid validators") {
  auto pr = prism_graph(1, 1, 1);
  std::array<std::vector<int>, 3> pp = {{{0, 3}, {1, 4}, {2, 5}}};
  CHECK(is_prism(pr, {0, 1, 2}, {3, 4, 5}, pp));
  std::array<std::vector<int>, 3> crossed = {{{0, 4}, {1, 3}, {2, 5}}};
  CHECK(!is_prism(pr, {0, 1, 2}, {4, 3, 5}, crossed));

  auto py = pyramid_graph(1, 2, 2);
  std::array<std::vector<int>, 3> qp = {{{0, 1}, {0, 4, 2}, {0, 5, 3}}};
  CHECK(is_pyramid(py, 0, {1, 2, 3}, qp));
  // two length-one legs are not a pyramid
  auto py2 = ehf::make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {0, 1}, {0, 2}, {0, 4}, {4, 3}});
  std::array<std::vector<int>, 3> qp2 = {{{0, 1}, {0, 2}, {0, 4, 3}}};
  CHECK(!is_pyramid(py2, 0, {1, 2, 3}, qp2));
}

TEST_CASE("wheel validator and taxonomy flags") {
  auto w = wheel_graph(6, {0, 2, 4});
  std::vector<int> hole = {0, 1, 2, 3, 4, 5};
  CHECK(is_wheel(w, hole, 6));
  CHECK(!is_wheel(w, {0, 1, 2, 3, 4, 6}, 5));
  CHECK(!is_wheel(wheel_graph(6, {0, 2}), hole, 6));

  auto f = wheel_flags(w, hole, 6);
  CHECK(f.spokes == 3);
  CHECK(!f.even);
  CHECK(!f.universal);
  CHECK(!f.twin);
  CHECK(!f.short_pyramid);
  CHECK(f.proper);

  f = wheel_flags(wheel_graph(5, {0, 1, 2, 3, 4}), {0, 1, 2, 3, 4}, 5);
  CHECK(f.spokes == 5);
  CHECK(f.universal);
  CHECK(f.proper);
  CHECK(!f.even);

  f = wheel_flags(wheel_graph(6, {0, 1, 2}), hole, 6);
  CHECK(f.twin);
  CHECK(!f.short_pyramid);
  CHECK(!f.proper);

  f = wheel_flags(wheel_graph(6, {0, 1, 3}), hole, 6);
  CHECK(f.short_pyramid);
  CHECK(!f.twin);
  CHECK(!f.proper);

  f = wheel_flags(wheel_graph(6, {0, 1, 2, 3}), hole, 6);
  CHECK(f.spokes == 4);
  CHECK(f.even);
  CHECK(f.proper);
  CHECK(!f.universal);

  // wrap-around twin on the shortest hole
  f = wheel_flags(wheel_graph(4, {0, 1, 3}), {0, 1, 2, 3}, 4);
  CHECK(f.twin);
}

TEST_CASE("wheel sectors") {
  auto u5 = wheel_graph(5, {0, 1, 2, 3, 4});
  auto secs = wheel_sectors(u5, {0, 1, 2, 3, 4}, 5);
  REQUIRE(secs.size() == 5);
  for (int i = 0; i < 5; i++) {
    CHECK(secs[i] == std::vector<int>{i, (i + 1) % 5});
  }

  auto w = wheel_graph(6, {0, 2, 4});
  secs = wheel_sectors(w, {0, 1, 2, 3, 4, 5}, 6);
  REQUIRE(secs.size() == 3);
  CHECK(secs[0] == std::vector<int>{0, 1, 2});
  CHECK(secs[1] == std::vector<int>{2, 3, 4});
  CHECK(secs[2] == std::vector<int>{4, 5, 0});

  auto w2 = wheel_graph(6, {0, 1, 3});
  secs = wheel_sectors(w2, {0, 1, 2, 3, 4, 5}, 6);
  REQUIRE(secs.size() == 3);
  CHECK(secs[0] == std::vector<int>{0, 1});
  CHECK(secs[1] == std::vector<int>{1, 2, 3});
  CHECK(secs[2] == std::vector<int>{3, 4, 5, 0});
}

TEST_CASE("even hole finder") {
  auto r = find_even_hole(cycle(6));
  REQUIRE(r.verdict == Verdict::Present);
  CHECK(r.cert->roles["cycle"] == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(r.cert->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(!r.exhausted);

  r = find_even_hole(cycle(5));
  CHECK(r.verdict == Verdict::Absent);
  CHECK(!r.exhausted);

  // two odd paths make the only even hole
  r = find_even_hole(theta_graph(2, 3, 3));
  REQUIRE(r.verdict == Verdict::Present);
  CHECK(r.cert->vertices == std::vector<int>{0, 1, 3, 4, 5, 6});
  CHECK(r.cert->roles["cycle"] == std::vector<int>{0, 3, 4, 1, 6, 5});
}

TEST_CASE("c4 finder") {
  auto r = find_c4(complete_bipartite(2, 3));
  REQUIRE(r.verdict == Verdict::Present);
  CHECK(r.cert->vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(r.cert->roles["cycle"] == std::vector<int>{0, 2, 1, 3});
  CHECK(find_c4(petersen()).verdict == Verdict::Absent);
  CHECK(find_c4(clique(3)).verdict == Verdict::Absent);
}

TEST_CASE("theta finder on the smallest theta") {
  auto r = find_theta(complete_bipartite(2, 3));
  REQUIRE(r.verdict == Verdict::Present);
  auto& c = *r.cert;
  CHECK(c.roles["ends"] == std::vector<int>{0, 1});
  CHECK(c.roles["path1"] == std::vector<int>{0, 2, 1});
  CHECK(c.roles["path2"] == std::vector<int>{0, 3, 1});
  CHECK(c.roles["path3"] == std::vector<int>{0, 4, 1});
  CHECK(c.vertices == std::vector<int>{0, 1, 2, 3, 4});
  std::string why;
  CHECK_MESSAGE(validate_certificate(complete_bipartite(2, 3), c, &why), why);
}

TEST_CASE("prism finder") {
  auto pr = prism_graph(1, 1, 1);
  auto r = find_prism(pr);
  REQUIRE(r.verdict == Verdict::Present);
  auto& c = *r.cert;
  CHECK(c.roles["triangle1"] == std::vector<int>{0, 1, 2});
  CHECK(c.roles["triangle2"] == std::vector<int>{3, 4, 5});
  CHECK(c.roles["path1"] == std::vector<int>{0, 3});
  CHECK(c.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  std::string why;
  CHECK_MESSAGE(validate_certificate(pr, c, &why), why);
  CHECK(find_prism(cycle(9)).verdict == Verdict::Absent);
}

TEST_CASE("pyramid finder") {
  auto py = pyramid_graph(1, 2, 2);
  auto r = find_pyramid(py);
  REQUIRE(r.verdict == Verdict::Present);
  auto& c = *r.cert;
  CHECK(c.roles["apex"] == std::vector<int>{0});
  CHECK(c.roles["base"] == std::vector<int>{1, 2, 3});
  CHECK(c.roles["path1"] == std::vector<int>{0, 1});
  CHECK(c.roles["path2"] == std::vector<int>{0, 4, 2});
  CHECK(c.roles["path3"] == std::vector<int>{0, 5, 3});
  std::string why;
  CHECK_MESSAGE(validate_certificate(py, c, &why), why);
  CHECK(find_pyramid(theta_graph(2, 2, 2)).verdict == Verdict::Absent);
  CHECK(find_pyramid(clique(6)).verdict == Verdict::Absent);
}

TEST_CASE("wheel finder with filters") {
  auto u5 = wheel_graph(5, {0, 1, 2, 3, 4});
  auto r = find_wheel(u5, WheelFilter::Any);
  REQUIRE(r.verdict == Verdict::Present);
  CHECK(r.cert->roles["hole"] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(r.cert->roles["center"] == std::vector<int>{5});
  CHECK(r.cert->roles["spokes"] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(find_wheel(u5, WheelFilter::Proper).verdict == Verdict::Present);
  CHECK(find_wheel(u5, WheelFilter::ProperNonUniversal).verdict == Verdict::Absent);
  CHECK(find_wheel(u5, WheelFilter::Even).verdict == Verdict::Absent);

  auto w4 = wheel_graph(6, {0, 1, 2, 3});
  r = find_wheel(w4, WheelFilter::Even);
  REQUIRE(r.verdict == Verdict::Present);
  auto f = wheel_flags(w4, r.cert->roles["hole"], r.cert->roles["center"][0]);
  CHECK(f.spokes == 4);
  CHECK(f.even);
  std::string why;
  CHECK_MESSAGE(validate_certificate(w4, *r.cert, &why), why);

  // twin wheels are wheels but not proper
  auto tw = wheel_graph(6, {0, 1, 2});
  CHECK(find_wheel(tw, WheelFilter::Any).verdict == Verdict::Present);
  CHECK(find_wheel(tw, WheelFilter::Proper).verdict == Verdict::Absent);
}

TEST_CASE("hub search") {
  auto u5 = wheel_graph(5, {0, 1, 2, 3, 4});
  auto h = find_hubs(u5);
  CHECK(h.verdict == Verdict::Present);
  CHECK(h.hubs == std::vector<int>{5});
  CHECK(h.unresolved.empty());
  std::string why;
  REQUIRE(h.witness.count(5) == 1);
  CHECK_MESSAGE(validate_certificate(u5, h.witness[5], &why), why);
  CHECK(h.witness[5].roles["center"] == std::vector<int>{5});

  h = find_hubs(path_graph(7));
  CHECK(h.verdict == Verdict::Absent);
  CHECK(h.hubs.empty());
  CHECK(h.unresolved.empty());

  auto w = wheel_graph(6, {0, 2, 4});
  h = find_hubs(w);
  CHECK(h.hubs == std::vector<int>{6});
  auto wit = h.witness[6];
  CHECK(wheel_flags(w, wit.roles["hole"], 6).proper);

  // twin wheel center is not a hub
  h = find_hubs(wheel_graph(6, {0, 1, 2}));
  CHECK(h.verdict == Verdict::Absent);
  CHECK(h.hubs.empty());
}

TEST_CASE("budget exhaustion degrades to indeterminate") {
  auto r = find_even_hole(cycle(6), 3);
  CHECK(r.verdict == Verdict::Indeterminate);
  CHECK(r.exhausted);
  CHECK(!r.cert.has_value());

  auto h = find_hubs(wheel_graph(6, {0, 2, 4}), 2);
  CHECK(h.verdict == Verdict::Indeterminate);
  CHECK(h.hubs.empty());
  CHECK(h.unresolved.size() == 7);
}

TEST_CASE("class membership") {
  CHECK(class_membership(path_graph(6)).in_class == Tri::Yes);
  CHECK(class_membership(clique(5)).in_class == Tri::Yes);

  // C6 has an even hole yet belongs to the class
  auto r = class_membership(cycle(6));
  CHECK(r.in_class == Tri::Yes);
  CHECK(find_even_hole(cycle(6)).verdict == Verdict::Present);

  r = class_membership(cycle(4));
  REQUIRE(r.in_class == Tri::No);
  CHECK(r.violation->kind == "c4");

  // both a C4 and a theta exist; the C4 is reported first
  r = class_membership(complete_bipartite(2, 3));
  REQUIRE(r.in_class == Tri::No);
  CHECK(r.violation->kind == "c4");

  r = class_membership(theta_graph(2, 3, 3));
  REQUIRE(r.in_class == Tri::No);
  CHECK(r.violation->kind == "theta");

  r = class_membership(prism_graph(2, 2, 2));
  REQUIRE(r.in_class == Tri::No);
  CHECK(r.violation->kind == "prism");

  r = class_membership(wheel_graph(6, {0, 1, 2, 3}));
  REQUIRE(r.in_class == Tri::No);
  CHECK(r.violation->kind == "wheel");

  // the odd wheel is not itself a violation, but center+0+1+2 induce a C4
  auto v = class_membership(wheel_graph(6, {0, 2, 4})).violation;
  REQUIRE(v.has_value());
  CHECK(v->kind == "c4");
  CHECK(v->vertices == std::vector<int>{0, 1, 2, 6});
}

TEST_CASE("bounded class membership adds the clique test") {
  auto r = class_membership_bounded(clique(5), 5);
  REQUIRE(r.in_class == Tri::No);
  CHECK(r.violation->kind == "clique");
  CHECK(r.violation->roles["clique"].size() == 5);
  std::string why;
  CHECK_MESSAGE(validate_certificate(clique(5), *r.violation, &why), why);

  CHECK(class_membership_bounded(clique(5), 6).in_class == Tri::Yes);
  CHECK(class_membership_bounded(cycle(6), 3).in_class == Tri::Yes);
  r = class_membership_bounded(cycle(4), 2);
  REQUIRE(r.in_class == Tri::No);
  CHECK(r.violation->kind == "c4");
}

TEST_CASE("certificate json is deterministic") {
  auto r = find_theta(complete_bipartite(2, 3));
  REQUIRE(r.verdict == Verdict::Present);
  std::string j = certificate_json(*r.cert);
  CHECK(j ==
        "{\"kind\":\"theta\",\"roles\":{\"ends\":[0,1],\"path1\":[0,2,1],"
        "\"path2\":[0,3,1],\"path3\":[0,4,1]},\"vertices\":[0,1,2,3,4]}");
  CHECK(j == certificate_json(*r.cert));
}

TEST_CASE("certificate validation rejects corruption") {
  auto g = complete_bipartite(2, 3);
  auto cert = *find_theta(g).cert;
  std::string why;
  CHECK(validate_certificate(g, cert, &why));

  auto broken = cert;
  broken.kind = "c4";
  CHECK(!validate_certificate(g, broken, &why));
  CHECK(!why.empty());

  broken = cert;
  broken.roles["path1"] = {0, 2};
  CHECK(!validate_certificate(g, broken, &why));

  broken = cert;
  broken.roles["ends"] = {1, 0};
  CHECK(!validate_certificate(g, broken, &why));

  auto w = wheel_graph(6, {0, 2, 4});
  auto wc = find_hubs(w).witness[6];
  CHECK(validate_certificate(w, wc, &why));
  auto wb = wc;
  wb.roles["spokes"] = {0, 2, 5};
  wb.vertices = {0, 1, 2, 3, 4, 5, 6};
  CHECK(!validate_certificate(w, wb, &why));
}

TEST_CASE("finders pick the lexicographically least certificate") {
  auto g = disjoint_union(theta_graph(2, 3, 3), theta_graph(2, 2, 2));
  auto r = find_theta(g);
  REQUIRE(r.verdict == Verdict::Present);
  CHECK(r.cert->vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  auto c4 = find_c4(g);
  REQUIRE(c4.verdict == Verdict::Present);
  CHECK(c4.cert->vertices == std::vector<int>{7, 8, 9, 10});

  auto twice = find_theta(g);
  CHECK(twice.cert->roles == r.cert->roles);
  CHECK(twice.cert->vertices == r.cert->vertices);
}

namespace {

void check_against_oracle(const ehf::Graph& g) {
  auto chk = [&](support::OKind k, DetectResult r) {
    auto o = support::oracle_find(g, k);
    REQUIRE(!r.exhausted);
    if (o) {
      REQUIRE(r.verdict == Verdict::Present);
      REQUIRE(r.cert.has_value());
      CHECK(r.cert->vertices == *o);
      std::string why;
      CHECK_MESSAGE(validate_certificate(g, *r.cert, &why), why);
    } else {
      CHECK(r.verdict == Verdict::Absent);
    }
  };
  chk(support::OKind::C4, find_c4(g));
  chk(support::OKind::Hole, find_hole(g));
  chk(support::OKind::EvenHole, find_even_hole(g));
  chk(support::OKind::Theta, find_theta(g));
  chk(support::OKind::Prism, find_prism(g));
  chk(support::OKind::Pyramid, find_pyramid(g));

  WheelFilter filters[4] = {WheelFilter::Any, WheelFilter::Even, WheelFilter::Proper,
                            WheelFilter::ProperNonUniversal};
  for (int fi = 0; fi < 4; fi++) {
    auto o = support::oracle_find_wheel(g, fi);
    auto r = find_wheel(g, filters[fi]);
    REQUIRE(!r.exhausted);
    if (o) {
      REQUIRE(r.verdict == Verdict::Present);
      REQUIRE(r.cert.has_value());
      CHECK(r.cert->vertices == *o);
      std::string why;
      CHECK_MESSAGE(validate_certificate(g, *r.cert, &why), why);
    } else {
      CHECK(r.verdict == Verdict::Absent);
    }
  }

  auto h = find_hubs(g);
  CHECK(h.unresolved.empty());
  CHECK(h.hubs == support::oracle_hubs(g));
  for (auto& [x, cert] : h.witness) {
    std::string why;
    CHECK_MESSAGE(validate_certificate(g, cert, &why), why);
    CHECK(cert.roles.at("center") == std::vector<int>{x});
    CHECK(wheel_flags(g, cert.roles.at("hole"), x).proper);
  }
}

}  // namespace

TEST_CASE("detectors agree with the subset oracle") {
  std::vector<ehf::Graph> pool;
  for (int n : {5, 6, 7, 8, 9})
    for (int pi = 0; pi < 3; pi++)
      for (uint64_t seed = 0; seed < 12; seed++)
        pool.push_back(gnp(n, 0.2 + 0.15 * pi, seed * 977 + n * 31 + pi));
  pool.push_back(petersen());
  pool.push_back(grid(3, 3));
  pool.push_back(star(5));
  pool.push_back(clique(5));
  pool.push_back(theta_graph(2, 2, 2));
  pool.push_back(theta_graph(2, 3, 4));
  pool.push_back(prism_graph(1, 1, 1));
  pool.push_back(prism_graph(2, 1, 2));
  pool.push_back(pyramid_graph(1, 2, 2));
  pool.push_back(pyramid_graph(2, 2, 3));
  pool.push_back(wheel_graph(6, {0, 1, 3}));
  pool.push_back(wheel_graph(7, {0, 2, 4}));
  pool.push_back(wheel_graph(8, {0, 2, 4, 6}));
  for (auto& g : pool) check_against_oracle(g);
}
