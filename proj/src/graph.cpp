#include "alphax/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

namespace alphax {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("vertex count must be positive");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");

  deg_.assign(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg_[u];
    ++deg_[v];
  }
  adj_off_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) adj_off_[v + 1] = adj_off_[v] + deg_[v];
  adj_flat_.resize(adj_off_[n_]);
  std::vector<int> fill(adj_off_.begin(), adj_off_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_flat_[fill[u]++] = v;
    adj_flat_[fill[v]++] = u;
  }
  for (int v = 0; v < n_; ++v)
    std::sort(adj_flat_.begin() + adj_off_[v], adj_flat_.begin() + adj_off_[v + 1]);
}

int Graph::max_degree() const {
  return deg_.empty() ? 0 : *std::max_element(deg_.begin(), deg_.end());
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return {adj_flat_.data() + adj_off_[v],
          static_cast<size_t>(deg_[v])};
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("vertex out of range");
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

int pendant_count(const Graph& g) {
  return static_cast<int>(std::count(g.degrees().begin(), g.degrees().end(), 1));
}

bool is_tricyclic(const Graph& g) {
  return g.size() == g.order() + 2 && is_connected(g);
}

namespace {

// Dynamic bitset over edge indices, sized for m edges.
using EdgeMask = std::vector<uint64_t>;

EdgeMask make_mask(int m) { return EdgeMask((m + 63) / 64, 0); }
void mask_set(EdgeMask& b, int i) { b[i >> 6] |= uint64_t{1} << (i & 63); }
void mask_xor(EdgeMask& a, const EdgeMask& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

// True when the edge subset given by mask forms a single cycle.
bool mask_is_cycle(const Graph& g, const EdgeMask& mask) {
  std::vector<int> deg(g.order(), 0);
  std::vector<int> verts;
  int edge_count = 0;
  int first_vertex = -1;
  for (int i = 0; i < g.size(); ++i) {
    if (!(mask[i >> 6] >> (i & 63) & 1)) continue;
    ++edge_count;
    auto [u, v] = g.edges()[i];
    if (deg[u]++ == 0) verts.push_back(u);
    if (deg[v]++ == 0) verts.push_back(v);
    first_vertex = u;
  }
  if (edge_count == 0) return false;
  for (int v : verts)
    if (deg[v] != 2) return false;
  if (static_cast<int>(verts.size()) != edge_count) return false;
  // 2-regular with #vertices == #edges: connected iff one traversal covers all.
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{first_vertex};
  seen[first_vertex] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!deg[w] || seen[w]) continue;
      auto it = std::lower_bound(g.edges().begin(), g.edges().end(),
                                 Edge{std::min(v, w), std::max(v, w)});
      int idx = static_cast<int>(it - g.edges().begin());
      if (!(mask[idx >> 6] >> (idx & 63) & 1)) continue;  // edge not selected
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == static_cast<int>(verts.size());
}

}  // namespace

int count_cycles(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  const int n = g.order(), m = g.size();
  const int c = m - n + 1;
  if (c <= 0) return 0;
  if (c > 20) throw std::invalid_argument("cycle space too large");

  // BFS spanning tree from 0, recording each vertex's parent and parent edge.
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0), order;
  std::vector<char> seen(n, 0);
  std::vector<char> tree_edge(m, 0);
  order.push_back(0);
  seen[0] = 1;
  for (size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      depth[w] = depth[v] + 1;
      auto it = std::lower_bound(g.edges().begin(), g.edges().end(),
                                 Edge{std::min(v, w), std::max(v, w)});
      parent_edge[w] = static_cast<int>(it - g.edges().begin());
      tree_edge[parent_edge[w]] = 1;
      order.push_back(w);
    }
  }

  std::vector<EdgeMask> fundamentals;
  for (int i = 0; i < m; ++i) {
    if (tree_edge[i]) continue;
    auto [u, v] = g.edges()[i];
    EdgeMask cyc = make_mask(m);
    mask_set(cyc, i);
    int a = u, b = v;
    while (depth[a] > depth[b]) {
      mask_set(cyc, parent_edge[a]);
      a = parent[a];
    }
    while (depth[b] > depth[a]) {
      mask_set(cyc, parent_edge[b]);
      b = parent[b];
    }
    while (a != b) {
      mask_set(cyc, parent_edge[a]);
      mask_set(cyc, parent_edge[b]);
      a = parent[a];
      b = parent[b];
    }
    fundamentals.push_back(std::move(cyc));
  }

  int cycles = 0;
  for (uint32_t subset = 1; subset < (uint32_t{1} << c); ++subset) {
    EdgeMask acc = make_mask(m);
    for (int j = 0; j < c; ++j)
      if (subset >> j & 1) mask_xor(acc, fundamentals[j]);
    if (mask_is_cycle(g, acc)) ++cycles;
  }
  return cycles;
}

int cycle_class(const Graph& g) {
  if (!is_tricyclic(g)) throw std::invalid_argument("graph is not tricyclic");
  int c = count_cycles(g);
  if (c != 3 && c != 4 && c != 6 && c != 7)
    throw std::logic_error("tricyclic cycle count outside {3,4,6,7}");
  return c;
}

namespace {

// Walks the degree-2 chain starting at `cur` having arrived from `prev`.
// Returns the first vertex of degree != 2, or -1 if the walk loops back
// (the component is a bare cycle). steps receives the number of edges walked.
int chain_terminal(const Graph& g, int prev, int cur, int* steps) {
  *steps = 0;
  while (g.degree(cur) == 2) {
    auto nb = g.neighbors(cur);
    int nxt = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
    ++*steps;
    if (*steps > g.order()) return -1;
  }
  return cur;
}

}  // namespace

EdgeClass classify_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge");
  int steps_l = 0, steps_r = 0;
  int left = g.degree(u) == 2 ? chain_terminal(g, v, u, &steps_l) : u;
  int right = g.degree(v) == 2 ? chain_terminal(g, u, v, &steps_r) : v;
  if (left < 0 || right < 0) return EdgeClass::Other;  // bare cycle component
  const int dl = g.degree(left), dr = g.degree(right);
  if (dl >= 3 && dr >= 3) return EdgeClass::InternalPathEdge;  // left==right allowed
  if (dl == 1 && dr == 1) {
    // Whole chain is a path component; a valid pendant start needs degree >= 2,
    // so the path must have at least 2 edges (rules out K2).
    return steps_l + steps_r + 1 >= 2 ? EdgeClass::PendantPathEdge
                                      : EdgeClass::Other;
  }
  if (dl == 1 || dr == 1) return EdgeClass::PendantPathEdge;
  return EdgeClass::Other;
}

Graph subdivide_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge");
  const int w = g.order();
  std::vector<Edge> edges;
  edges.reserve(g.size() + 1);
  for (auto e : g.edges())
    if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
  edges.emplace_back(u, w);
  edges.emplace_back(v, w);
  return Graph(w + 1, std::move(edges));
}

Graph relocate_neighbors(const Graph& g, int u, int v,
                         const std::vector<int>& moved) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw std::invalid_argument("bad vertex pair");
  if (moved.empty()) throw std::invalid_argument("empty relocation set");
  std::vector<int> sorted = moved;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate vertex in relocation set");
  for (int w : sorted) {
    if (w == u || !g.has_edge(v, w) || g.has_edge(u, w))
      throw std::invalid_argument("vertex not relocatable");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [a, b] : g.edges()) {
    bool drop = std::binary_search(sorted.begin(), sorted.end(), a) ? b == v
              : std::binary_search(sorted.begin(), sorted.end(), b) ? a == v
              : false;
    if (!drop) edges.emplace_back(a, b);
  }
  for (int w : sorted) edges.emplace_back(std::min(u, w), std::max(u, w));
  return Graph(g.order(), std::move(edges));
}

Graph attach_pendant_paths(const Graph& g, int v,
                           const std::vector<int>& lengths) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  if (lengths.empty()) throw std::invalid_argument("empty length sequence");
  for (int len : lengths)
    if (len < 1) throw std::invalid_argument("path length must be >= 1");
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (int len : lengths) {
    int prev = v;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(std::min(prev, next), std::max(prev, next));
      prev = next++;
    }
  }
  return Graph(next, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;

  auto parse_two = [&](const std::string& s, int& a, int& b) -> bool {
    const char* p = s.data();
    const char* end = s.data() + s.size();
    while (p < end && *p == ' ') ++p;
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ' ') return false;
    p = r1.ptr;
    while (p < end && *p == ' ') ++p;
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{}) return false;
    for (p = r2.ptr; p < end; ++p)
      if (*p != ' ' && *p != '\r') return false;
    return true;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    int a, b;
    if (!parse_two(line, a, b)) throw ParseError(lineno, "expected two integers");
    if (n < 0) {
      n = a;
      m = b;
      if (n < 1) throw ParseError(lineno, "header vertex count must be positive");
      if (m < 0) throw ParseError(lineno, "negative header edge count");
      continue;
    }
    if (static_cast<int>(edges.size()) == m)
      throw ParseError(lineno, "more edge lines than header size");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(lineno, "endpoint out of range");
    if (a == b) throw ParseError(lineno, "loop edge");
    if (a >= b) throw ParseError(lineno, "endpoints must satisfy u < v");
    edges.emplace_back(a, b);
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(lineno == 0 ? 1 : lineno, "edge count does not match header");
  std::vector<Edge> check = edges;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw ParseError(lineno == 0 ? 1 : lineno, "duplicate edge");
  return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace alphax
