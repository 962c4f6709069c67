// Extremal family constructors and their structural invariants.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "alphax/families.hpp"
#include "alphax/graph.hpp"
#include "alphax/spectra.hpp"

using namespace alphax;

TEST_CASE("base graphs") {
  const Graph g1 = base_graph(BaseId::G1);
  CHECK(g1.order() == 7);
  CHECK(g1.size() == 9);
  CHECK(count_cycles(g1) == 3);
  CHECK(g1.degree(0) == 6);

  const Graph g2 = base_graph(BaseId::G2);
  CHECK(g2.order() == 6);
  CHECK(g2.size() == 8);
  CHECK(count_cycles(g2) == 4);
  CHECK(g2.degree(0) == 5);

  const Graph g3 = base_graph(BaseId::G3);
  CHECK(g3.order() == 5);
  CHECK(g3.size() == 7);
  CHECK(count_cycles(g3) == 6);
  CHECK(g3.degree(0) == 4);

  const Graph k4 = base_graph(BaseId::K4);
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(count_cycles(k4) == 7);
  CHECK(k4.degree(0) == 3);
}

TEST_CASE("family metadata") {
  CHECK(family_base(FamilyId::T3) == BaseId::G1);
  CHECK(family_base(FamilyId::T4) == BaseId::G2);
  CHECK(family_base(FamilyId::T6) == BaseId::G3);
  CHECK(family_base(FamilyId::T7) == BaseId::K4);
  CHECK(base_order(FamilyId::T3) == 7);
  CHECK(base_order(FamilyId::T4) == 6);
  CHECK(base_order(FamilyId::T6) == 5);
  CHECK(base_order(FamilyId::T7) == 4);
  CHECK(cycle_count_of(FamilyId::T3) == 3);
  CHECK(cycle_count_of(FamilyId::T4) == 4);
  CHECK(cycle_count_of(FamilyId::T6) == 6);
  CHECK(cycle_count_of(FamilyId::T7) == 7);
  for (int k : {1, 2, 5}) {
    CHECK(family_max_degree(FamilyId::T3, k) == k + 6);
    CHECK(family_max_degree(FamilyId::T4, k) == k + 5);
    CHECK(family_max_degree(FamilyId::T6, k) == k + 4);
    CHECK(family_max_degree(FamilyId::T7, k) == k + 3);
  }
  for (const char* name : {"T3", "T4", "T6", "T7"})
    CHECK(family_name(parse_family(name)) == name);
  CHECK_THROWS_AS(parse_family("T5"), std::invalid_argument);
}

TEST_CASE("nearly equal path lengths") {
  CHECK(nearly_equal_lengths(7, 3) == std::vector<int>{3, 2, 2});
  CHECK(nearly_equal_lengths(5, 5) == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(nearly_equal_lengths(1, 1) == std::vector<int>{1});
  CHECK(nearly_equal_lengths(10, 4) == std::vector<int>{3, 3, 2, 2});
  for (int t = 1; t <= 12; ++t)
    for (int k = 1; k <= t; ++k) {
      const auto parts = nearly_equal_lengths(t, k);
      REQUIRE(parts.size() == static_cast<size_t>(k));
      CHECK(std::accumulate(parts.begin(), parts.end(), 0) == t);
      CHECK(parts.front() - parts.back() <= 1);
      CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
    }
}

TEST_CASE("constructed instances have the promised shape") {
  struct Case {
    FamilyId fam;
    int n, k, maxdeg, cycles;
  };
  const Case cases[] = {
      {FamilyId::T3, 8, 1, 7, 3},   {FamilyId::T3, 12, 3, 9, 3},
      {FamilyId::T4, 8, 1, 6, 4},   {FamilyId::T4, 9, 2, 7, 4},
      {FamilyId::T6, 8, 1, 5, 6},   {FamilyId::T6, 10, 5, 9, 6},
      {FamilyId::T7, 8, 1, 4, 7},   {FamilyId::T7, 11, 4, 7, 7},
  };
  for (const auto& c : cases) {
    const Graph g = construct_family({c.fam, c.n, c.k});
    CAPTURE(family_name(c.fam));
    CHECK(g.order() == c.n);
    CHECK(g.size() == c.n + 2);
    CHECK(is_tricyclic(g));
    CHECK(pendant_count(g) == c.k);
    CHECK(g.max_degree() == c.maxdeg);
    CHECK(g.degree(0) == c.maxdeg);  // attachment vertex carries the maximum
    CHECK(cycle_class(g) == c.cycles);
  }
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(construct_family({FamilyId::T3, 8, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_family({FamilyId::T3, 7, 1}),
                  std::invalid_argument);  // needs base order + k
  CHECK_THROWS_AS(construct_family({FamilyId::T7, 5, 2}),
                  std::invalid_argument);
}

TEST_CASE("frozen reference radii for family instances") {
  // independent dense-solver values
  auto rho = [](FamilyId f, int n, int k, double a) {
    return alpha_spectral_radius(construct_family({f, n, k}), a).radius;
  };
  CHECK(rho(FamilyId::T3, 8, 1, 0.5) ==
        doctest::Approx(4.1374586088176875).epsilon(1e-11));
  CHECK(rho(FamilyId::T4, 8, 1, 0.5) ==
        doctest::Approx(3.729721160567801).epsilon(1e-11));
  CHECK(rho(FamilyId::T6, 8, 1, 0.5) ==
        doctest::Approx(3.4663044321834873).epsilon(1e-11));
  CHECK(rho(FamilyId::T7, 8, 1, 0.5) ==
        doctest::Approx(3.1967786805757563).epsilon(1e-11));
  CHECK(rho(FamilyId::T4, 9, 2, 0.8) ==
        doctest::Approx(5.6731716116909645).epsilon(1e-11));
  CHECK(rho(FamilyId::T3, 12, 3, 0.6) ==
        doctest::Approx(5.734418999424895).epsilon(1e-11));
  // signless laplacian of the four-cycle family stays below k + 7
  const Graph t4 = construct_family({FamilyId::T4, 10, 3});
  CHECK(signless_laplacian_radius(t4) ==
        doctest::Approx(9.250866011511764).epsilon(1e-11));
}

TEST_CASE("family ordering at sample parameters") {
  for (double a : {0.5, 0.75, 0.9}) {
    for (int n : {8, 10, 13}) {
      const int k = n - 7;  // largest admissible pendant count
      double prev = 1e300;
      for (FamilyId f :
           {FamilyId::T3, FamilyId::T4, FamilyId::T6, FamilyId::T7}) {
        const double r =
            alpha_spectral_radius(construct_family({f, n, k}), a).radius;
        CAPTURE(a);
        CAPTURE(n);
        CHECK(r < prev);
        prev = r;
      }
    }
  }
}
