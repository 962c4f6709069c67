#pragma once

// The four candidate-maximizer families of tricyclic graphs with k pendant
// vertices. Each family takes a fixed small base graph and attaches k pendant
// paths of nearly equal lengths at a designated hub (always vertex 0).

#include <string>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

enum class FamilyId { T3, T4, T6, T7 };
enum class BaseId { G1, G2, G3, K4 };

// T3 <- G1 (3 cycles), T4 <- G2 (4), T6 <- G3 (6), T7 <- K4 (7).
BaseId family_base(FamilyId f);
int base_order(BaseId b);    // 7, 6, 5, 4
int base_order(FamilyId f);
int cycle_count_of(FamilyId f);  // 3, 4, 6, 7

std::string family_name(FamilyId f);
// Accepts "T3", "T4", "T6", "T7"; throws std::invalid_argument otherwise.
FamilyId parse_family(const std::string& name);

// Hub max degree after attaching k pendant paths:
// T3: k+6, T4: k+5, T6: k+4, T7: k+3.
int family_max_degree(FamilyId f, int k);

// k path lengths summing to total, sorted descending, pairwise differing by
// at most 1 (each floor(total/k) or ceil(total/k)). Requires total >= k >= 1.
std::vector<int> nearly_equal_lengths(int total, int k);

// The fixed base graphs, hub = vertex 0:
//  G1: three triangles sharing the hub (order 7).
//  G2: theta graph (paths of lengths 1,2,2 between the hub and a second
//      branch vertex) plus a triangle at the hub (order 6).
//  G3: two branch vertices joined by an edge and three internally disjoint
//      paths of length 2 (order 5).
//  K4: complete graph on 4 vertices.
Graph base_graph(BaseId b);

struct FamilySpec {
  FamilyId family;
  int order;     // n, total vertices
  int pendants;  // k >= 1; requires order >= base_order(family) + k
};

// Base graph plus k pendant paths of nearly equal lengths at the hub,
// longest first, new vertices numbered consecutively from the base order.
Graph construct_family(const FamilySpec& spec);

}  // namespace alphax
