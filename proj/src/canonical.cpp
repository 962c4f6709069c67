#include "alphax/canonical.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "alphax/spectra.hpp"

namespace alphax {

namespace {

constexpr int kMaxCanonOrder = 16;

struct CanonSearch {
  int n;
  int nbits;
  std::array<uint32_t, kMaxCanonOrder> adj{};   // original-label adjacency rows
  std::vector<std::vector<int>> cell_members;   // candidates per position cell
  std::vector<int> pos_cell;                    // position -> cell index
  std::vector<int> row_off;                     // row-major bit offsets
  std::vector<uint8_t> cur, best;
  std::vector<int> perm;
  std::vector<char> used;
  bool has_best = false;

  void set_bit(int k, bool v) {
    uint8_t m = uint8_t(0x80u >> (k & 7));
    if (v)
      cur[k >> 3] |= m;
    else
      cur[k >> 3] &= uint8_t(~m);
  }

  int pair_bit(int i, int j) const { return row_off[i] + (j - i - 1); }

  void dfs(int p) {
    if (has_best && std::ranges::lexicographical_compare(best, cur)) return;
    if (p == n) {
      if (!has_best || std::ranges::lexicographical_compare(cur, best)) {
        best = cur;
        has_best = true;
      }
      return;
    }
    for (int u : cell_members[pos_cell[p]]) {
      if (used[u]) continue;
      used[u] = 1;
      perm[p] = u;
      for (int i = 0; i < p; ++i)
        set_bit(pair_bit(i, p), adj[u] >> perm[i] & 1);
      dfs(p + 1);
      for (int i = 0; i < p; ++i) set_bit(pair_bit(i, p), false);
      used[u] = 0;
    }
  }
};

}  // namespace

std::vector<uint8_t> canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonOrder)
    throw std::invalid_argument("canonical form limited to order 16");

  CanonSearch s;
  s.n = n;
  s.nbits = n * (n - 1) / 2;
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= uint32_t{1} << v;
    s.adj[v] |= uint32_t{1} << u;
  }
  // Positions take degrees in descending blocks; each block's candidates are
  // the vertices of that degree.
  std::vector<int> degs = g.degrees();
  std::vector<int> distinct = degs;
  std::sort(distinct.rbegin(), distinct.rend());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  s.pos_cell.reserve(n);
  for (size_t c = 0; c < distinct.size(); ++c) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (degs[v] == distinct[c]) members.push_back(v);
    for (size_t i = 0; i < members.size(); ++i)
      s.pos_cell.push_back(static_cast<int>(c));
    s.cell_members.push_back(std::move(members));
  }
  s.row_off.resize(std::max(n, 1));
  for (int i = 0; i < n; ++i) s.row_off[i] = i * (2 * n - i - 1) / 2;
  s.cur.assign((s.nbits + 7) / 8, 0);
  s.best.assign((s.nbits + 7) / 8, 0);
  s.perm.assign(n, -1);
  s.used.assign(n, 0);
  if (n > 0)
    s.dfs(0);
  else
    s.has_best = true;

  std::vector<uint8_t> out;
  out.reserve(1 + s.best.size());
  out.push_back(static_cast<uint8_t>(n));
  out.insert(out.end(), s.best.begin(), s.best.end());
  return out;
}

Graph decode_canonical_form(const std::vector<uint8_t>& bytes) {
  if (bytes.empty()) throw std::invalid_argument("empty encoding");
  const int n = bytes[0];
  const int nbits = n * (n - 1) / 2;
  if (static_cast<int>(bytes.size()) != 1 + (nbits + 7) / 8)
    throw std::invalid_argument("encoding length mismatch");
  std::vector<Edge> edges;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (bytes[1 + (k >> 3)] & (0x80u >> (k & 7))) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

namespace {

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& order,
                    std::vector<int>& map, std::vector<char>& used, size_t p) {
  if (p == order.size()) return true;
  const int v = order[p];
  for (int w = 0; w < b.order(); ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (size_t i = 0; i < p && ok; ++i)
      ok = a.has_edge(order[i], v) == b.has_edge(map[order[i]], w);
    if (!ok) continue;
    used[w] = 1;
    map[v] = w;
    if (extend_mapping(a, b, order, map, used, p + 1)) return true;
    used[w] = 0;
    map[v] = -1;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  if (a.order() <= kOracleMaxOrder) {
    auto sa = full_spectrum_oracle(build_a_alpha(a, 0.0));
    auto sb = full_spectrum_oracle(build_a_alpha(b, 0.0));
    for (size_t i = 0; i < sa.size(); ++i)
      if (std::abs(sa[i] - sb[i]) > 1e-9) return false;
  }
  std::vector<int> order(a.order());
  for (int i = 0; i < a.order(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a.degree(x) > a.degree(y); });
  std::vector<int> map(a.order(), -1);
  std::vector<char> used(b.order(), 0);
  return extend_mapping(a, b, order, map, used, 0);
}

}  // namespace alphax
