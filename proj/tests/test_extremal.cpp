// Enumeration, argmax search, main-statement verification, lemma trials.
// Census numbers were frozen from an independent brute-force enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "alphax/canonical.hpp"
#include "alphax/extremal.hpp"
#include "alphax/families.hpp"
#include "alphax/graph.hpp"

using namespace alphax;

TEST_CASE("labeled census at order six") {
  // brute force over all C(15,8) subsets gives these counts
  std::map<int, long> per_class;
  std::map<int, long> per_pendants;
  long total = 0;
  std::vector<Edge> prev;
  bool order_ok = true;
  EnumerationQuery q;
  q.order = 6;
  enumerate_tricyclic(q, [&](const Graph& g) {
    ++total;
    ++per_class[cycle_class(g)];
    ++per_pendants[pendant_count(g)];
    if (!prev.empty() && !(prev < g.edges())) order_ok = false;
    prev = g.edges();
  });
  CHECK(total == 6165);
  CHECK(per_class == std::map<int, long>{{4, 360}, {6, 3915}, {7, 1890}});
  CHECK(per_pendants ==
        std::map<int, long>{{0, 2805}, {1, 3120}, {2, 240}});
  CHECK(order_ok);  // strictly increasing lexicographic edge lists
}

TEST_CASE("query filters match post-filtering") {
  for (int k : {0, 1, 2}) {
    long direct = 0;
    EnumerationQuery q;
    q.order = 6;
    q.pendants = k;
    enumerate_tricyclic(q, [&](const Graph& g) {
      ++direct;
      CHECK(pendant_count(g) == k);
    });
    const long expected = k == 0 ? 2805 : k == 1 ? 3120 : 240;
    CHECK(direct == expected);
  }
  long cls4 = 0;
  EnumerationQuery q;
  q.order = 6;
  q.cycle_filter = 4;
  enumerate_tricyclic(q, [&](const Graph& g) {
    ++cls4;
    CHECK(cycle_class(g) == 4);
  });
  CHECK(cls4 == 360);
}

TEST_CASE("query validation") {
  EnumerationQuery q;
  q.order = 3;
  CHECK_THROWS_AS(enumerate_tricyclic(q, [](const Graph&) {}),
                  std::invalid_argument);
  q.order = exhaustive_order_cap() + 1;
  CHECK_THROWS_AS(enumerate_tricyclic(q, [](const Graph&) {}),
                  std::invalid_argument);
  q.order = 6;
  q.cycle_filter = 5;
  CHECK_THROWS_AS(enumerate_tricyclic(q, [](const Graph&) {}),
                  std::invalid_argument);
}

TEST_CASE("order cap honors its environment override") {
  CHECK(exhaustive_order_cap() >= 4);
  setenv("ALPHA_EXTREMAL_MAX_N", "7", 1);
  CHECK(exhaustive_order_cap() == 7);
  setenv("ALPHA_EXTREMAL_MAX_N", "99", 1);   // out of range: ignored
  CHECK(exhaustive_order_cap() == 9);
  setenv("ALPHA_EXTREMAL_MAX_N", "junk", 1);
  CHECK(exhaustive_order_cap() == 9);
  unsetenv("ALPHA_EXTREMAL_MAX_N");
  CHECK(exhaustive_order_cap() == 9);
}

TEST_CASE("argmax at order six matches the frozen maximizer") {
  EnumerationQuery q;
  q.order = 6;
  q.pendants = 2;
  const ExtremalReport rep = argmax_radius(q, 0.5);
  CHECK(rep.graphs_enumerated == 240);
  CHECK(rep.max_radius == doctest::Approx(3.4547579830779767).epsilon(1e-11));
  CHECK(rep.tie_count == 60);
  CHECK(rep.tie_classes.size() == 1);
  CHECK(rep.tie_class_counts == std::vector<long>{60});
  CHECK(rep.runner_up == doctest::Approx(3.3364118505004754).epsilon(1e-11));
  const Graph witness(rep.witness_order, rep.witness_edges);
  CHECK(are_isomorphic(witness,
                       construct_family({FamilyId::T7, 6, 2})));
}

TEST_CASE("argmax is independent of the worker count") {
  EnumerationQuery q;
  q.order = 7;
  q.pendants = 1;
  const ExtremalReport serial = argmax_radius(q, 0.6, 1);
  const ExtremalReport parallel = argmax_radius(q, 0.6, 4);
  CHECK(serial.graphs_enumerated == parallel.graphs_enumerated);
  CHECK(serial.max_radius == parallel.max_radius);  // bitwise equality
  CHECK(serial.tie_count == parallel.tie_count);
  CHECK(serial.tie_classes == parallel.tie_classes);
  CHECK(serial.tie_class_counts == parallel.tie_class_counts);
  CHECK(serial.witness_edges == parallel.witness_edges);
  CHECK(serial.runner_up == parallel.runner_up);
}

TEST_CASE("empty result set is reported as such") {
  EnumerationQuery q;
  q.order = 6;
  q.pendants = 2;
  q.cycle_filter = 3;  // no class-3 graphs exist at order 6
  const ExtremalReport rep = argmax_radius(q, 0.5);
  CHECK(rep.graphs_enumerated == 0);
  CHECK(rep.tie_count == 0);
  CHECK(rep.tie_classes.empty());
}

TEST_CASE("uniqueness corollary at the smallest admissible order") {
  const CorollaryReport rep = verify_corollary(8, 1, 0.5);
  CHECK(rep.search.graphs_enumerated == 4474680);
  CHECK(rep.search.max_radius ==
        doctest::Approx(4.137458608817689).epsilon(1e-11));
  CHECK(rep.search.tie_count == 840);
  CHECK(rep.search.tie_classes.size() == 1);
  CHECK(rep.unique_iso_to_target);
  CHECK(rep.violations == 0);
  CHECK(rep.min_gap > 0.4);
  CHECK(rep.passed);
}

TEST_CASE("statement verification rejects out-of-range parameters") {
  CHECK_THROWS_AS(verify_theorem(8, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(7, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(8, 1, 0.4), std::domain_error);
  CHECK_THROWS_AS(verify_theorem(8, 1, 1.0), std::domain_error);
}

TEST_CASE("random connected graphs have the requested shape") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected_graph(rng, 8, 12);
    CHECK(g.order() == 8);
    CHECK(g.size() == 12);
    CHECK(is_connected(g));
  }
  CHECK_THROWS_AS(random_connected_graph(rng, 5, 3), std::invalid_argument);
}

TEST_CASE("lemma trials pass at a reduced budget") {
  const auto reports = verify_lemma_properties(25, 3);
  REQUIRE(reports.size() == 5);
  const LemmaId order[] = {LemmaId::L1, LemmaId::L3, LemmaId::L4, LemmaId::L5,
                           LemmaId::L6};
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].lemma == order[i]);
    CHECK(reports[i].trials == 25);
    CHECK(reports[i].failures == 0);
    CHECK(reports[i].seed == 3);
    CHECK(reports[i].first_failure_edges.empty());
  }
}

TEST_CASE("lemma trials are reproducible for a fixed seed") {
  const auto a = verify_lemma_properties(10, 42);
  const auto b = verify_lemma_properties(10, 42);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].failures == b[i].failures);
    CHECK(a[i].hypothesis_misses == b[i].hypothesis_misses);
  }
}
