#pragma once

// Isomorphism testing and a canonical byte encoding for small graphs.

#include <cstdint>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

// Canonical encoding for graphs of order <= 16: one byte for n followed by
// the lexicographically minimal upper-triangular adjacency bit string
// (row-major, MSB first) over all vertex orders that list degrees in
// descending blocks. Equal byte sequences <=> isomorphic graphs.
std::vector<uint8_t> canonical_form(const Graph& g);

// Rebuilds the (canonically labeled) graph from its encoding.
Graph decode_canonical_form(const std::vector<uint8_t>& bytes);

// Exact isomorphism test: invariant screen (order, size, degree sequence,
// adjacency spectrum within 1e-9) followed by backtracking over
// degree-compatible vertex assignments.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace alphax
