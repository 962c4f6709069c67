#pragma once

// Simple undirected graphs on labeled vertices 0..n-1, stored immutably.
// All structural operations return new graphs; nothing here mutates in place.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alphax {

using Edge = std::pair<int, int>;

// Thrown by edge-list parsing; line is 1-based within the input text.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

class Graph {
 public:
  // Edges may be given in any order but must be loop-free and duplicate-free
  // (after normalizing u<v). Throws std::invalid_argument otherwise.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return deg_.at(v); }
  const std::vector<int>& degrees() const { return deg_; }
  int max_degree() const;
  // Sorted ascending with u < v in every pair.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const;
  bool has_edge(int u, int v) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> deg_;
  std::vector<int> adj_off_;   // CSR offsets, size n_+1
  std::vector<int> adj_flat_;  // concatenated sorted neighbor lists
};

enum class EdgeClass { PendantPathEdge, InternalPathEdge, Other };

// --- queries -----------------------------------------------------------

bool is_connected(const Graph& g);
int pendant_count(const Graph& g);
// Connected and m = n + 2.
bool is_tricyclic(const Graph& g);
// Number of (not necessarily induced) cycles, counted via the cycle space:
// all nonempty symmetric differences of fundamental cycles whose edge set is
// itself a single cycle. Requires a connected graph and m - n + 1 <= 20.
int count_cycles(const Graph& g);
// For tricyclic graphs the cycle count is one of {3,4,6,7}; anything else
// indicates an internal error (std::logic_error).
int cycle_class(const Graph& g);
// uv must be an edge. Classifies by the maximal chain of degree-2 vertices
// containing uv: both chain ends of degree >= 3 (possibly the same vertex)
// -> InternalPathEdge; an end of degree 1 with a valid start -> PendantPathEdge;
// otherwise Other (covers K2 and components that are bare cycles).
EdgeClass classify_edge(const Graph& g, int u, int v);

// --- surgeries ---------------------------------------------------------

// Replace edge uv by the path u - w - v where w = n is the new vertex.
Graph subdivide_edge(const Graph& g, int u, int v);
// Detach every w in moved from v and attach it to u instead. Each w must be a
// current neighbor of v, not equal to u, and not already adjacent to u.
// moved must be nonempty and duplicate-free.
Graph relocate_neighbors(const Graph& g, int u, int v,
                         const std::vector<int>& moved);
// Attach |lengths| disjoint pendant paths at v, the i-th of lengths[i] >= 1
// edges. New vertices are numbered consecutively from n, longer-first order
// preserved as given. lengths must be nonempty.
Graph attach_pendant_paths(const Graph& g, int v,
                           const std::vector<int>& lengths);

// --- edge-list text format ----------------------------------------------
// '#' lines are comments; first data line is "n m"; then exactly m lines
// "u v" with 0 <= u < v < n; LF endings. Parsing is order-insensitive
// beyond the header. Errors carry 1-based line numbers.

Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace alphax
