#include "alphax/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>

#include "alphax/families.hpp"

namespace alphax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLemmaAlphas[] = {0.0, 0.3, 0.5, 0.8};
// Perron-entry comparisons in lemma hypotheses use this guard so that a
// solver-level wobble can never flip the required ordering.
constexpr double kPerronOrderGuard = 1e-8;

}  // namespace

int exhaustive_order_cap() {
  if (const char* s = std::getenv("ALPHA_EXTREMAL_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 4 && v <= 16) return static_cast<int>(v);
  }
  return 9;
}

namespace {

struct EnumProblem {
  int n = 0, m = 0;
  std::optional<int> k;
  std::optional<int> cls;
  std::vector<Edge> all;  // candidate edges, lexicographic
  int M = 0;
};

EnumProblem make_problem(const EnumerationQuery& q) {
  if (q.order < 4)
    throw std::invalid_argument("no tricyclic graph has fewer than 4 vertices");
  if (q.order > exhaustive_order_cap())
    throw std::invalid_argument(
        "order exceeds the exhaustive cap (override with ALPHA_EXTREMAL_MAX_N)");
  if (q.pendants && *q.pendants < 0)
    throw std::invalid_argument("negative pendant filter");
  if (q.cycle_filter && *q.cycle_filter != 3 && *q.cycle_filter != 4 &&
      *q.cycle_filter != 6 && *q.cycle_filter != 7)
    throw std::invalid_argument("cycle filter must be one of 3, 4, 6, 7");
  EnumProblem p;
  p.n = q.order;
  p.m = q.order + 2;
  p.k = q.pendants;
  p.cls = q.cycle_filter;
  for (int u = 0; u < p.n; ++u)
    for (int v = u + 1; v < p.n; ++v) p.all.emplace_back(u, v);
  p.M = static_cast<int>(p.all.size());
  return p;
}

// Depth-first scan over m-subsets of the candidate edges in lexicographic
// index order. Once the scan passes every edge whose smaller endpoint is w,
// the degree of each vertex <= w is final, so zero-degree vertices and
// pendant-count infeasibility prune whole subtrees; both conditions are
// monotone in the scan position, so a failed check abandons all later
// branches of the current level as well.
class Enumerator {
 public:
  Enumerator(const EnumProblem& p, const std::function<void(const Graph&)>& cb)
      : p_(p), cb_(cb), deg_(std::max(p.n, 1), 0) {
    chosen_.reserve(p.m);
  }

  void run_all() {
    if (p_.m > p_.M) return;
    rec(0, p_.m, 0, 0);
  }

  // Only subsets whose two smallest chosen indices are exactly e1 < e2.
  void run_prefix(int e1, int e2) {
    if (p_.m < 2 || e2 >= p_.M || p_.M - 1 - e2 < p_.m - 2) return;
    int checked = 0, fd1 = 0;
    if (!advance(p_.all[e1].first, checked, fd1)) return;
    choose(e1);
    if (advance(p_.all[e2].first, checked, fd1)) {
      choose(e2);
      rec(e2 + 1, p_.m - 2, checked, fd1);
      unchoose(e2);
    }
    unchoose(e1);
  }

 private:
  bool advance(int upto, int& checked, int& fd1) {
    while (checked < upto) {
      const int d = deg_[checked];
      if (d == 0) return false;
      fd1 += (d == 1);
      ++checked;
    }
    if (p_.k) {
      if (fd1 > *p_.k) return false;
      if (*p_.k > fd1 + (p_.n - checked)) return false;
    }
    return true;
  }

  void choose(int e) {
    ++deg_[p_.all[e].first];
    ++deg_[p_.all[e].second];
    chosen_.push_back(p_.all[e]);
  }

  void unchoose(int e) {
    --deg_[p_.all[e].first];
    --deg_[p_.all[e].second];
    chosen_.pop_back();
  }

  void rec(int start, int remaining, int checked, int fd1) {
    if (remaining == 0) {
      complete();
      return;
    }
    for (int e = start; e <= p_.M - remaining; ++e) {
      if (!advance(p_.all[e].first, checked, fd1)) return;
      choose(e);
      rec(e + 1, remaining - 1, checked, fd1);
      unchoose(e);
    }
  }

  void complete() {
    if (p_.k) {
      int d1 = 0;
      for (int v = 0; v < p_.n; ++v) d1 += (deg_[v] == 1);
      if (d1 != *p_.k) return;
    }
    for (int v = 0; v < p_.n; ++v)
      if (deg_[v] == 0) return;
    int parent[16];
    for (int v = 0; v < p_.n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int comps = p_.n;
    for (auto [u, v] : chosen_) {
      const int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --comps;
      }
    }
    if (comps != 1) return;
    Graph g(p_.n, chosen_);
    if (p_.cls && cycle_class(g) != *p_.cls) return;
    cb_(g);
  }

  const EnumProblem& p_;
  const std::function<void(const Graph&)>& cb_;
  std::vector<int> deg_;
  std::vector<Edge> chosen_;
};

}  // namespace

void enumerate_tricyclic(const EnumerationQuery& q,
                         const std::function<void(const Graph&)>& cb) {
  const EnumProblem p = make_problem(q);
  Enumerator en(p, cb);
  en.run_all();
}

namespace {

// Tie tracking that is independent of processing order: the final maximum,
// the copies within kTieWindow of it, and the best radius outside that
// window are all order-free functions of the enumerated (graph, radius)
// multiset, so serial runs and any partitioned merge agree exactly.
struct ArgmaxAcc {
  double max_radius = kNegInf;
  double runner_up = kNegInf;
  std::map<std::vector<uint8_t>, std::vector<double>> window;
  long graphs = 0;

  void evict() {
    for (auto it = window.begin(); it != window.end();) {
      auto& radii = it->second;
      size_t keep = 0;
      for (const double r : radii) {
        if (r >= max_radius - kTieWindow)
          radii[keep++] = r;
        else if (r > runner_up)
          runner_up = r;
      }
      radii.resize(keep);
      it = radii.empty() ? window.erase(it) : std::next(it);
    }
  }

  void consider(const Graph& g, double rho) {
    ++graphs;
    if (rho < max_radius - kTieWindow) {
      if (rho > runner_up) runner_up = rho;
      return;
    }
    if (rho > max_radius) {
      max_radius = rho;
      evict();
    }
    window[canonical_form(g)].push_back(rho);
  }

  void merge(ArgmaxAcc&& o) {
    graphs += o.graphs;
    if (o.runner_up > runner_up) runner_up = o.runner_up;
    if (o.max_radius > max_radius) {
      max_radius = o.max_radius;
      evict();
    }
    for (auto& [canon, radii] : o.window) {
      for (const double r : radii) {
        if (r >= max_radius - kTieWindow)
          window[canon].push_back(r);
        else if (r > runner_up)
          runner_up = r;
      }
    }
  }
};

ExtremalReport finalize_report(ArgmaxAcc&& acc, const EnumerationQuery& q,
                               double alpha_value, double wall_ms) {
  ExtremalReport r;
  r.alpha = alpha_value;
  r.cycle_filter = q.cycle_filter;
  r.graphs_enumerated = acc.graphs;
  r.wall_ms = wall_ms;
  r.max_radius = acc.max_radius;
  r.runner_up = acc.runner_up;
  for (auto& [canon, radii] : acc.window) {
    r.tie_classes.push_back(canon);
    r.tie_class_counts.push_back(static_cast<long>(radii.size()));
    r.tie_count += static_cast<long>(radii.size());
  }
  if (!r.tie_classes.empty()) {
    const Graph w = decode_canonical_form(r.tie_classes.front());
    r.witness_edges = w.edges();
    r.witness_order = w.order();
  }
  return r;
}

}  // namespace

ExtremalReport argmax_radius(const EnumerationQuery& q, AlphaParam alpha,
                             int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  const EnumProblem p = make_problem(q);
  if (jobs <= 0)
    jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  ArgmaxAcc total;
  auto radius_of = [&alpha](const Graph& g) {
    return alpha_spectral_radius(g, alpha).radius;
  };

  if (jobs == 1 || p.m < 2) {
    const std::function<void(const Graph&)> cb = [&](const Graph& g) {
      total.consider(g, radius_of(g));
    };
    Enumerator en(p, cb);
    en.run_all();
  } else {
    // Work split by the two smallest chosen edge indices. Partition results
    // are merged in task order, and every merged quantity is order-free, so
    // the outcome matches the serial run bit for bit.
    std::vector<std::pair<int, int>> tasks;
    for (int e1 = 0; e1 <= p.M - p.m; ++e1)
      for (int e2 = e1 + 1; e2 <= p.M - p.m + 1; ++e2) tasks.emplace_back(e1, e2);
    std::vector<ArgmaxAcc> parts(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const size_t t = next.fetch_add(1);
        if (t >= tasks.size()) break;
        ArgmaxAcc acc;
        const std::function<void(const Graph&)> cb = [&](const Graph& g) {
          acc.consider(g, radius_of(g));
        };
        Enumerator en(p, cb);
        en.run_prefix(tasks[t].first, tasks[t].second);
        parts[t] = std::move(acc);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& part : parts) total.merge(std::move(part));
  }

  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return finalize_report(std::move(total), q, alpha.value(), wall_ms);
}

TheoremReport verify_theorem(int n, int k, AlphaParam alpha, int jobs) {
  if (k < 1) throw std::invalid_argument("pendant count must be >= 1");
  if (n < k + 7)
    throw std::invalid_argument("order must be at least pendant count + 7");
  if (alpha.value() < 0.5 || alpha.value() >= 1.0)
    throw std::domain_error("statement covers alpha in [1/2, 1)");

  TheoremReport rep;
  const Graph t3 = construct_family({FamilyId::T3, n, k});
  const auto target = canonical_form(t3);

  EnumerationQuery q;
  q.order = n;
  q.pendants = k;
  rep.search = argmax_radius(q, alpha, jobs);

  rep.unique_iso_to_target = rep.search.tie_count > 0 &&
                             rep.search.tie_classes.size() == 1 &&
                             rep.search.tie_classes.front() == target;

  rep.rho_t3 = alpha_spectral_radius(t3, alpha).radius;
  rep.rho_t4 =
      alpha_spectral_radius(construct_family({FamilyId::T4, n, k}), alpha).radius;
  rep.rho_t6 =
      alpha_spectral_radius(construct_family({FamilyId::T6, n, k}), alpha).radius;
  rep.rho_t7 =
      alpha_spectral_radius(construct_family({FamilyId::T7, n, k}), alpha).radius;
  rep.family_ordering_ok = rep.rho_t3 > rep.rho_t4 + kFamilyOrderingMargin &&
                           rep.rho_t3 > rep.rho_t6 + kFamilyOrderingMargin &&
                           rep.rho_t3 > rep.rho_t7 + kFamilyOrderingMargin;
  rep.passed = rep.unique_iso_to_target && rep.family_ordering_ok;
  return rep;
}

CorollaryReport verify_corollary(int n, int k, AlphaParam alpha, int jobs) {
  if (k < 1) throw std::invalid_argument("pendant count must be >= 1");
  if (n < k + 7)
    throw std::invalid_argument("order must be at least pendant count + 7");
  if (alpha.value() < 0.5 || alpha.value() >= 1.0)
    throw std::domain_error("statement covers alpha in [1/2, 1)");

  CorollaryReport rep;
  const auto target = canonical_form(construct_family({FamilyId::T3, n, k}));
  EnumerationQuery q;
  q.order = n;
  q.pendants = k;
  rep.search = argmax_radius(q, alpha, jobs);

  for (size_t i = 0; i < rep.search.tie_classes.size(); ++i)
    if (rep.search.tie_classes[i] != target)
      rep.violations += rep.search.tie_class_counts[i];
  rep.unique_iso_to_target = rep.search.tie_count > 0 && rep.violations == 0;
  rep.min_gap = rep.search.runner_up == kNegInf
                    ? std::numeric_limits<double>::infinity()
                    : rep.search.max_radius - rep.search.runner_up;
  rep.passed = rep.unique_iso_to_target && rep.min_gap > kStrictMargin;
  return rep;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, int m) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  if (m < n - 1 || m > static_cast<int>(all.size()))
    throw std::invalid_argument("edge count cannot give a connected graph");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Edge> pick;
    pick.reserve(m);
    std::sample(all.begin(), all.end(), std::back_inserter(pick), m, rng);
    Graph g(n, std::move(pick));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("could not sample a connected graph");
}

namespace {

double radius_any(const Graph& g, AlphaParam alpha) {
  return dominant_eigpair(build_a_alpha(g, alpha), /*connected=*/false).radius;
}

// G minus vertex x, remaining vertices relabeled downward.
Graph delete_vertex(const Graph& g, int x) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (u == x || v == x) continue;
    edges.emplace_back(u - (u > x), v - (v > x));
  }
  return Graph(g.order() - 1, std::move(edges));
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// One lemma trial: builds an instance (or reports a hypothesis miss) and
// checks the required strict inequality at every alpha in kLemmaAlphas.
struct TrialOutcome {
  bool hypothesis_met = false;
  bool failed = false;
  std::vector<Edge> instance_edges;  // filled on failure
  int instance_order = 0;

  void record_failure(const Graph& g) {
    if (!failed) {
      instance_edges = g.edges();
      instance_order = g.order();
    }
    failed = true;
  }
};

TrialOutcome trial_l1(std::mt19937_64& rng) {
  const int n = rand_int(rng, 5, 10);
  const int m = rand_int(rng, n - 1, std::min(n + 2, n * (n - 1) / 2));
  const Graph g = random_connected_graph(rng, n, m);

  std::vector<Edge> removable;
  for (auto e : g.edges()) {
    std::vector<Edge> rest;
    for (auto f : g.edges())
      if (f != e) rest.push_back(f);
    if (is_connected(Graph(n, rest))) removable.push_back(e);
  }
  Graph h = [&]() {
    if (!removable.empty()) {
      const Edge e = removable[rand_int(rng, 0, static_cast<int>(removable.size()) - 1)];
      std::vector<Edge> rest;
      for (auto f : g.edges())
        if (f != e) rest.push_back(f);
      return Graph(n, rest);
    }
    // tree: drop a random leaf instead
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 1) leaves.push_back(v);
    return delete_vertex(g, leaves[rand_int(rng, 0, static_cast<int>(leaves.size()) - 1)]);
  }();

  TrialOutcome out;
  out.hypothesis_met = true;
  for (const double a : kLemmaAlphas) {
    const double rg = alpha_spectral_radius(g, a).radius;
    const double rh = alpha_spectral_radius(h, a).radius;
    if (!(rg > rh + kStrictMargin)) out.record_failure(g);
  }
  return out;
}

TrialOutcome trial_l3(std::mt19937_64& rng) {
  TrialOutcome out;
  for (int attempt = 0; attempt < 50 && !out.hypothesis_met; ++attempt) {
    const int n = rand_int(rng, 5, 10);
    const int m = rand_int(rng, n - 1, std::min(n + 2, n * (n - 1) / 2));
    const Graph g = random_connected_graph(rng, n, m);

    // Need, at every alpha, some ordered pair (u,v) with x_u clearly >= x_v
    // and a nonempty set of v-neighbors that can move to u.
    bool all_alphas_ok = true;
    std::vector<std::array<int, 2>> picks;  // (u,v) per alpha
    std::vector<std::vector<int>> moved_sets;
    for (const double a : kLemmaAlphas) {
      const auto perron = alpha_spectral_radius(g, a).perron;
      std::vector<std::array<int, 2>> candidates;
      for (int u = 0; u < n && all_alphas_ok; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u == v || perron[u] < perron[v] + kPerronOrderGuard) continue;
          for (int w : g.neighbors(v))
            if (w != u && !g.has_edge(u, w)) {
              candidates.push_back({u, v});
              break;
            }
        }
      }
      if (candidates.empty()) {
        all_alphas_ok = false;
        break;
      }
      const auto [u, v] = candidates[rand_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
      std::vector<int> movable;
      for (int w : g.neighbors(v))
        if (w != u && !g.has_edge(u, w)) movable.push_back(w);
      std::vector<int> moved;
      for (int w : movable)
        if (rand_int(rng, 0, 1)) moved.push_back(w);
      if (moved.empty()) moved.push_back(movable[rand_int(rng, 0, static_cast<int>(movable.size()) - 1)]);
      picks.push_back({u, v});
      moved_sets.push_back(std::move(moved));
    }
    if (!all_alphas_ok) continue;

    out.hypothesis_met = true;
    for (size_t i = 0; i < std::size(kLemmaAlphas); ++i) {
      const double a = kLemmaAlphas[i];
      const double rg = alpha_spectral_radius(g, a).radius;
      const Graph moved = relocate_neighbors(g, picks[i][0], picks[i][1], moved_sets[i]);
      const double rm = radius_any(moved, a);  // relocation may disconnect
      if (!(rm > rg + kStrictMargin)) out.record_failure(g);
    }
  }
  return out;
}

TrialOutcome trial_l4(std::mt19937_64& rng) {
  TrialOutcome out;
  for (int attempt = 0; attempt < 50 && !out.hypothesis_met; ++attempt) {
    const int n = rand_int(rng, 5, 10);
    const int m = rand_int(rng, n, std::min(n + 2, n * (n - 1) / 2));  // has a cycle
    const Graph g = random_connected_graph(rng, n, m);
    std::vector<Edge> internal;
    for (auto [u, v] : g.edges())
      if (classify_edge(g, u, v) == EdgeClass::InternalPathEdge)
        internal.emplace_back(u, v);
    if (internal.empty()) continue;
    out.hypothesis_met = true;
    const auto [u, v] = internal[rand_int(rng, 0, static_cast<int>(internal.size()) - 1)];
    const Graph sub = subdivide_edge(g, u, v);
    for (const double a : kLemmaAlphas) {
      const double rg = alpha_spectral_radius(g, a).radius;
      const double rs = alpha_spectral_radius(sub, a).radius;
      if (!(rg > rs + kStrictMargin)) out.record_failure(g);
    }
  }
  return out;
}

TrialOutcome trial_l5(std::mt19937_64& rng) {
  const int n0 = rand_int(rng, 3, 6);
  const int m0 = rand_int(rng, n0 - 1, std::min(n0 + 2, n0 * (n0 - 1) / 2));
  const Graph base = random_connected_graph(rng, n0, m0);
  const int w = rand_int(rng, 0, n0 - 1);
  const int s = rand_int(rng, 1, 2);
  const int r = rand_int(rng, s, s + 2);

  const Graph balanced = attach_pendant_paths(base, w, {r, s});
  const Graph skewed =
      s > 1 ? attach_pendant_paths(base, w, {r + 1, s - 1})
            : attach_pendant_paths(base, w, {r + 1});

  TrialOutcome out;
  out.hypothesis_met = true;
  for (const double a : kLemmaAlphas) {
    const double rb = alpha_spectral_radius(balanced, a).radius;
    const double rs = alpha_spectral_radius(skewed, a).radius;
    if (!(rb > rs + kStrictMargin)) out.record_failure(balanced);
  }
  return out;
}

TrialOutcome trial_l6(std::mt19937_64& rng) {
  TrialOutcome out;
  for (int attempt = 0; attempt < 50 && !out.hypothesis_met; ++attempt) {
    const int n = rand_int(rng, 5, 9);
    const int m = rand_int(rng, n - 1, std::min(n + 2, n * (n - 1) / 2));
    const Graph g = random_connected_graph(rng, n, m);
    std::vector<Edge> pendant;
    for (auto [u, v] : g.edges())
      if (classify_edge(g, u, v) == EdgeClass::PendantPathEdge)
        pendant.emplace_back(u, v);
    if (pendant.empty()) continue;
    out.hypothesis_met = true;
    const auto [u, v] = pendant[rand_int(rng, 0, static_cast<int>(pendant.size()) - 1)];
    const Graph sub = subdivide_edge(g, u, v);
    for (const double a : kLemmaAlphas) {
      const double rg = alpha_spectral_radius(g, a).radius;
      const double rs = alpha_spectral_radius(sub, a).radius;
      if (!(rs > rg + kStrictMargin)) out.record_failure(g);
    }
  }
  return out;
}

}  // namespace

std::vector<LemmaTrialReport> verify_lemma_properties(int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  std::mt19937_64 rng(seed);
  const std::pair<LemmaId, TrialOutcome (*)(std::mt19937_64&)> suites[] = {
      {LemmaId::L1, trial_l1}, {LemmaId::L3, trial_l3}, {LemmaId::L4, trial_l4},
      {LemmaId::L5, trial_l5}, {LemmaId::L6, trial_l6}};

  std::vector<LemmaTrialReport> reports;
  for (const auto& [id, fn] : suites) {
    LemmaTrialReport rep;
    rep.lemma = id;
    rep.trials = trials;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
      const TrialOutcome out = fn(rng);
      if (!out.hypothesis_met) {
        ++rep.hypothesis_misses;
      } else if (out.failed) {
        if (rep.failures == 0) {
          rep.first_failure_edges = out.instance_edges;
          rep.first_failure_order = out.instance_order;
        }
        ++rep.failures;
      }
    }
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace alphax
