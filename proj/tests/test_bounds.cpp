// Closed-form bounds and the benchmark inequality chain.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "alphax/bounds.hpp"
#include "alphax/graph.hpp"
#include "alphax/spectra.hpp"

using namespace alphax;

namespace {

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

Graph random_connected(std::mt19937_64& rng, int n) {
  std::vector<Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});
  std::uniform_int_distribution<int> md(n - 1, static_cast<int>(all.size()));
  for (;;) {
    std::vector<Edge> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), md(rng), rng);
    Graph g(n, pick);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("lower bound closed forms") {
  // below one half: alpha*(max degree + 1)
  CHECK(lower_bound_maxdeg(4, 0.25) == 0.25 * 5);
  CHECK(lower_bound_maxdeg(4, 0.0) == 0.0);
  // at and above one half: alpha*maxdeg + (1-alpha)^2/alpha
  CHECK(lower_bound_maxdeg(4, 0.5) == 2.5);
  CHECK(lower_bound_maxdeg(4, 0.8) ==
        doctest::Approx(0.8 * 4 + 0.04 / 0.8).epsilon(1e-15));
  CHECK_THROWS_AS(lower_bound_maxdeg(-1, 0.5), std::invalid_argument);
  // the star with four leaves attains the bound with equality at alpha = 1/2
  CHECK(alpha_spectral_radius(star(4), 0.5).radius ==
        doctest::Approx(2.5).epsilon(1e-11));
}

TEST_CASE("degree mean upper bound") {
  const Graph g = star(4);
  // hub: 0.5*4 + 0.5*1 = 2.5 ; leaf: 0.5*1 + 0.5*4 = 2.5
  CHECK(upper_bound_degree_mean(g, 0.5) == 2.5);
  const Graph p(3, {{0, 1}, {1, 2}});
  // center: 0.3*2 + 0.7*1 = 1.3 ; end: 0.3*1 + 0.7*2 = 1.7
  CHECK(upper_bound_degree_mean(p, 0.3) == doctest::Approx(1.7).epsilon(1e-15));
}

TEST_CASE("signless laplacian upper bound") {
  const Graph g = star(4);
  // (2a-1)*maxdeg + (1-a)*lsmax with lsmax(star4) = 5
  CHECK(upper_bound_sq(g, 0.5) == doctest::Approx(2.5).epsilon(1e-11));
  CHECK(upper_bound_sq(g, 0.8) ==
        doctest::Approx(0.6 * 4 + 0.2 * 5.0).epsilon(1e-11));
  CHECK_THROWS_AS(upper_bound_sq(g, 0.49), std::domain_error);
}

TEST_CASE("bounds report sandwiches the radius on random graphs") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> nd(4, 10);
  const double alphas[] = {0.0, 0.3, 0.5, 0.8};
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_connected(rng, nd(rng));
    const double a = alphas[t % 4];
    const BoundsReport rep = bounds_report(g, a);
    const double rho = alpha_spectral_radius(g, a).radius;
    CHECK(rep.lower_maxdeg <= rho + 1e-9);
    CHECK(rho <= rep.upper_degree_mean + 1e-9);
    CHECK(rep.upper_sq.has_value() == (a >= 0.5));
    if (rep.upper_sq) CHECK(rho <= *rep.upper_sq + 1e-9);
    CHECK(rep.alpha == a);
    CHECK(rep.order == g.order());
    CHECK(rep.size == g.size());
  }
}

TEST_CASE("inequality chain structure") {
  const auto recs = inequality_chain(1, 0.5);
  REQUIRE(recs.size() == 9);
  const char* names[] = {"eq4",  "eq5",  "eq7",  "eq100", "eq9",
                         "eq10", "eq11", "eq101", "claim3"};
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].name == names[i]);
    CHECK(recs[i].holds);
    CHECK(recs[i].strict == (recs[i].name != std::string("claim3")));
  }
  // benchmark value B(1, 1/2) = 0.5*7 + 0.25/0.5 = 4
  for (const auto& r : recs) CHECK(r.rhs == 4.0);
  // first record lhs frozen: 27/8
  CHECK(recs[0].lhs == 3.375);
  // final record is an equality exactly at alpha = 1/2, hence non-strict
  const auto& last = recs.back();
  CHECK(last.lhs == last.rhs);
}

TEST_CASE("inequality chain holds across the full parameter box") {
  for (int k = 1; k <= 50; ++k)
    for (int i = 0; i <= 9; ++i) {
      const double a = 0.5 + 0.05 * i;
      for (const auto& r : inequality_chain(k, a)) {
        CAPTURE(k);
        CAPTURE(a);
        CAPTURE(r.name);
        CHECK(r.holds);
        if (r.strict) CHECK(r.lhs < r.rhs);
      }
    }
}

TEST_CASE("inequality chain rejects out-of-range parameters") {
  CHECK_THROWS_AS(inequality_chain(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(inequality_chain(1, 0.4), std::domain_error);
  CHECK_THROWS_AS(inequality_chain(1, 1.0), std::domain_error);
}
