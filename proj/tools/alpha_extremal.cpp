// Command-line front end. Subcommands: spectral, construct, bounds,
// verify (theorem|corollary|lemmas|inequalities), enumerate.
//
// Exit codes: 0 success, 1 verification assertion failed (first
// counterexample printed as an edge list), 2 parse or parameter errors,
// 3 disconnected input where connectivity is required.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alphax/bounds.hpp"
#include "alphax/canonical.hpp"
#include "alphax/extremal.hpp"
#include "alphax/families.hpp"
#include "alphax/graph.hpp"
#include "alphax/spectra.hpp"

using json = nlohmann::ordered_json;
using namespace alphax;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr double kSandwichTol = 1e-9;

enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kSpecError = 2,
  kDisconnected = 3,
};

struct DisconnectedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

double parse_alpha(const std::string& s) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (...) {
    throw std::invalid_argument("cannot parse alpha: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("cannot parse alpha: " + s);
  if (!(v >= 0.0 && v < 1.0))
    throw std::invalid_argument("alpha must lie in [0,1): " + s);
  return v;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

json make_report(const std::string& command, json inputs, json results,
                 double wall_ms) {
  json rep;
  rep["command"] = command;
  rep["inputs"] = std::move(inputs);
  rep["results"] = std::move(results);
  rep["versions"] = {{"alpha_extremal", kToolVersion}};
  rep["wall_time_ms"] = wall_ms;
  return rep;
}

void print_counterexample(const std::vector<Edge>& edges, int order) {
  std::cout << "counterexample:\n";
  std::cout << order << " " << edges.size() << "\n";
  for (auto [u, v] : edges) std::cout << u << " " << v << "\n";
}

// ---- spectral -----------------------------------------------------------

int cmd_spectral(const std::string& input, const std::string& alpha_text,
                 bool want_perron, bool as_json) {
  const double alpha = parse_alpha(alpha_text);
  const Graph g = load_graph(input);
  if (!is_connected(g)) throw DisconnectedInput("input graph is disconnected");
  Timer timer;
  const SpectralResult r = alpha_spectral_radius(g, alpha);
  if (as_json) {
    json inputs{{"input", input}, {"alpha", alpha_text},
                {"order", g.order()}, {"size", g.size()}};
    json results;
    results["radius"] = r.radius;
    results["iterations"] = r.iterations;
    results["residual"] = r.residual;
    results["residual_tolerance"] = kResidualTol;
    if (want_perron) results["perron"] = r.perron;
    std::cout << make_report("spectral", inputs, results, timer.ms()).dump(2)
              << "\n";
  } else {
    std::cout << "alpha " << alpha_text << ", order " << g.order() << ", size "
              << g.size() << "\n";
    std::cout << "radius " << fmt17(r.radius) << "\n";
    std::cout << "iterations " << r.iterations << ", residual "
              << fmt17(r.residual) << "\n";
    if (want_perron) {
      std::cout << "perron\n";
      for (double x : r.perron) std::cout << "  " << fmt17(x) << "\n";
    }
  }
  return kOk;
}

// ---- construct ----------------------------------------------------------

int cmd_construct(const std::string& family, int n, int k,
                  const std::string& out, bool as_json) {
  const Graph g = construct_family({parse_family(family), n, k});
  const std::string text = format_edge_list(g);
  if (!out.empty()) {
    std::ofstream o(out, std::ios::binary);
    if (!o) throw std::invalid_argument("cannot open output file: " + out);
    o << text;
  }
  const int cls = cycle_class(g);
  if (as_json) {
    json inputs{{"family", family}, {"n", n}, {"k", k}};
    if (!out.empty()) inputs["out"] = out;
    json results{{"order", g.order()},
                 {"size", g.size()},
                 {"max_degree", g.max_degree()},
                 {"cycle_class", cls},
                 {"pendant_count", pendant_count(g)},
                 {"edges", edges_json(g.edges())}};
    std::cout << make_report("construct", inputs, results, 0.0).dump(2) << "\n";
  } else if (out.empty()) {
    std::cout << text;  // edge list itself when no file was requested
    std::cerr << family << "(" << n << "," << k << "): max degree "
              << g.max_degree() << ", cycle class " << cls << "\n";
  } else {
    std::cout << family << "(" << n << "," << k << "): order " << g.order()
              << ", size " << g.size() << ", max degree " << g.max_degree()
              << ", cycle class " << cls << ", written to " << out << "\n";
  }
  return kOk;
}

// ---- bounds -------------------------------------------------------------

int cmd_bounds(const std::string& input, const std::string& alpha_text,
               bool as_json) {
  const double alpha = parse_alpha(alpha_text);
  const Graph g = load_graph(input);
  if (!is_connected(g)) throw DisconnectedInput("input graph is disconnected");
  Timer timer;
  const BoundsReport b = bounds_report(g, alpha);
  const double rho = alpha_spectral_radius(g, alpha).radius;
  double upper_min = b.upper_degree_mean;
  if (b.upper_sq) upper_min = std::min(upper_min, *b.upper_sq);
  const bool sandwich =
      b.lower_maxdeg <= rho + kSandwichTol && rho <= upper_min + kSandwichTol;
  if (as_json) {
    json inputs{{"input", input}, {"alpha", alpha_text},
                {"order", g.order()}, {"size", g.size()}};
    json results;
    results["lower_maxdeg"] = b.lower_maxdeg;
    results["upper_degree_mean"] = b.upper_degree_mean;
    results["upper_sq"] = b.upper_sq ? json(*b.upper_sq) : json(nullptr);
    results["radius"] = rho;
    results["sandwich"] = {{"holds", sandwich}, {"tolerance", kSandwichTol}};
    std::cout << make_report("bounds", inputs, results, timer.ms()).dump(2)
              << "\n";
  } else {
    std::cout << "alpha " << alpha_text << ", order " << g.order() << ", size "
              << g.size() << "\n";
    std::cout << "lower_maxdeg       " << fmt17(b.lower_maxdeg) << "\n";
    std::cout << "radius             " << fmt17(rho) << "\n";
    std::cout << "upper_degree_mean  " << fmt17(b.upper_degree_mean) << "\n";
    if (b.upper_sq) std::cout << "upper_sq           " << fmt17(*b.upper_sq) << "\n";
    std::cout << "sandwich " << (sandwich ? "holds" : "VIOLATED")
              << " (tolerance " << fmt17(kSandwichTol) << ")\n";
  }
  return sandwich ? kOk : kAssertionFailed;
}

// ---- verify theorem / corollary ------------------------------------------

json extremal_json(const ExtremalReport& r) {
  json j;
  j["graphs_enumerated"] = r.graphs_enumerated;
  j["max_radius"] = r.max_radius;
  j["tie_count"] = r.tie_count;
  j["tie_window"] = kTieWindow;
  j["tie_class_count"] = r.tie_classes.size();
  j["runner_up"] = std::isinf(r.runner_up) ? json(nullptr) : json(r.runner_up);
  j["witness_order"] = r.witness_order;
  j["witness_edges"] = edges_json(r.witness_edges);
  return j;
}

int cmd_verify_theorem(int n, int k, const std::string& alpha_text, int jobs,
                       bool as_json) {
  const double alpha = parse_alpha(alpha_text);
  Timer timer;
  const TheoremReport rep = verify_theorem(n, k, alpha, jobs);
  if (as_json) {
    json inputs{{"n", n}, {"k", k}, {"alpha", alpha_text}, {"jobs", jobs}};
    json results = extremal_json(rep.search);
    results["unique_iso_to_target"] = rep.unique_iso_to_target;
    results["rho_t3"] = rep.rho_t3;
    results["rho_t4"] = rep.rho_t4;
    results["rho_t6"] = rep.rho_t6;
    results["rho_t7"] = rep.rho_t7;
    results["family_ordering_margin"] = kFamilyOrderingMargin;
    results["family_ordering_ok"] = rep.family_ordering_ok;
    results["passed"] = rep.passed;
    std::cout << make_report("verify theorem", inputs, results, timer.ms())
                     .dump(2)
              << "\n";
  } else {
    std::cout << "verify theorem: n=" << n << " k=" << k << " alpha="
              << alpha_text << "\n";
    std::cout << "graphs " << rep.search.graphs_enumerated << ", max radius "
              << fmt17(rep.search.max_radius) << ", ties "
              << rep.search.tie_count << " in " << rep.search.tie_classes.size()
              << " class(es)\n";
    std::cout << "rho: T3 " << fmt17(rep.rho_t3) << ", T4 " << fmt17(rep.rho_t4)
              << ", T6 " << fmt17(rep.rho_t6) << ", T7 " << fmt17(rep.rho_t7)
              << "\n";
    std::cout << (rep.passed ? "PASS" : "FAIL") << "\n";
  }
  if (!rep.passed) {
    if (!rep.unique_iso_to_target && !rep.search.tie_classes.empty()) {
      const auto target =
          canonical_form(construct_family({FamilyId::T3, n, k}));
      for (const auto& cls : rep.search.tie_classes)
        if (cls != target) {
          const Graph bad = decode_canonical_form(cls);
          print_counterexample(bad.edges(), bad.order());
          break;
        }
    }
    return kAssertionFailed;
  }
  return kOk;
}

int cmd_verify_corollary(int n, int k, const std::string& alpha_text, int jobs,
                         bool as_json) {
  const double alpha = parse_alpha(alpha_text);
  Timer timer;
  const CorollaryReport rep = verify_corollary(n, k, alpha, jobs);
  if (as_json) {
    json inputs{{"n", n}, {"k", k}, {"alpha", alpha_text}, {"jobs", jobs}};
    json results = extremal_json(rep.search);
    results["unique_iso_to_target"] = rep.unique_iso_to_target;
    results["violations"] = rep.violations;
    results["min_gap"] =
        std::isinf(rep.min_gap) ? json(nullptr) : json(rep.min_gap);
    results["strict_margin"] = kStrictMargin;
    results["passed"] = rep.passed;
    std::cout << make_report("verify corollary", inputs, results, timer.ms())
                     .dump(2)
              << "\n";
  } else {
    std::cout << "verify corollary: n=" << n << " k=" << k << " alpha="
              << alpha_text << "\n";
    std::cout << "graphs " << rep.search.graphs_enumerated << ", max radius "
              << fmt17(rep.search.max_radius) << ", violations "
              << rep.violations << ", min gap "
              << (std::isinf(rep.min_gap) ? std::string("none")
                                          : fmt17(rep.min_gap))
              << "\n";
    std::cout << (rep.passed ? "PASS" : "FAIL") << "\n";
  }
  if (!rep.passed) {
    if (rep.violations > 0) {
      const auto target =
          canonical_form(construct_family({FamilyId::T3, n, k}));
      for (const auto& cls : rep.search.tie_classes)
        if (cls != target) {
          const Graph bad = decode_canonical_form(cls);
          print_counterexample(bad.edges(), bad.order());
          break;
        }
    }
    return kAssertionFailed;
  }
  return kOk;
}

// ---- verify lemmas --------------------------------------------------------

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::L1: return "L1";
    case LemmaId::L3: return "L3";
    case LemmaId::L4: return "L4";
    case LemmaId::L5: return "L5";
    case LemmaId::L6: return "L6";
  }
  return "?";
}

int cmd_verify_lemmas(int trials, uint64_t seed, bool as_json) {
  Timer timer;
  const auto reports = verify_lemma_properties(trials, seed);
  long failures = 0;
  for (const auto& r : reports) failures += r.failures;
  if (as_json) {
    json inputs{{"trials", trials}, {"seed", seed}};
    json rows = json::array();
    for (const auto& r : reports) {
      json row{{"lemma", lemma_name(r.lemma)},
               {"trials", r.trials},
               {"failures", r.failures},
               {"hypothesis_misses", r.hypothesis_misses},
               {"strict_margin", kStrictMargin}};
      if (r.failures > 0) {
        row["first_failure_order"] = r.first_failure_order;
        row["first_failure_edges"] = edges_json(r.first_failure_edges);
      }
      rows.push_back(row);
    }
    json results{{"lemmas", rows}, {"total_failures", failures},
                 {"passed", failures == 0}};
    json rep = make_report("verify lemmas", inputs, results, timer.ms());
    rep["seed"] = seed;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "verify lemmas: trials " << trials << ", seed " << seed
              << ", margin " << fmt17(kStrictMargin) << "\n";
    for (const auto& r : reports)
      std::cout << lemma_name(r.lemma) << ": failures " << r.failures
                << ", hypothesis misses " << r.hypothesis_misses << "\n";
    std::cout << (failures == 0 ? "PASS" : "FAIL") << "\n";
  }
  if (failures > 0) {
    for (const auto& r : reports)
      if (r.failures > 0) {
        print_counterexample(r.first_failure_edges, r.first_failure_order);
        break;
      }
    return kAssertionFailed;
  }
  return kOk;
}

// ---- verify inequalities ---------------------------------------------------

std::vector<std::string> parse_grid(const std::string& grid) {
  // "start:stop:step", all decimal
  std::vector<double> parts;
  std::string token;
  std::istringstream in(grid);
  while (std::getline(in, token, ':')) {
    size_t pos = 0;
    parts.push_back(std::stod(token, &pos));
    if (pos != token.size()) throw std::invalid_argument("bad grid: " + grid);
  }
  if (parts.size() != 3 || parts[2] <= 0 || parts[0] > parts[1])
    throw std::invalid_argument("grid must be start:stop:step with step > 0");
  std::vector<std::string> out;
  const int count = static_cast<int>((parts[1] - parts[0]) / parts[2] + 1e-9) + 1;
  for (int i = 0; i < count; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", parts[0] + i * parts[2]);
    out.emplace_back(buf);
  }
  return out;
}

int cmd_verify_inequalities(int k_max, const std::string& grid, bool as_json) {
  if (k_max < 1) throw std::invalid_argument("k-max must be >= 1");
  Timer timer;
  const auto alphas = parse_grid(grid);
  long checked = 0;
  json failures = json::array();
  for (int k = 1; k <= k_max; ++k) {
    for (const auto& at : alphas) {
      const double a = parse_alpha(at);
      for (const auto& rec : inequality_chain(k, a)) {
        ++checked;
        if (!rec.holds)
          failures.push_back({{"k", k},
                              {"alpha", at},
                              {"name", rec.name},
                              {"lhs", rec.lhs},
                              {"rhs", rec.rhs},
                              {"strict", rec.strict}});
      }
    }
  }
  const bool passed = failures.empty();
  if (as_json) {
    json inputs{{"k_max", k_max}, {"alpha_grid", grid}};
    json results{{"alphas", alphas},
                 {"records_checked", checked},
                 {"failures", failures},
                 {"passed", passed}};
    std::cout
        << make_report("verify inequalities", inputs, results, timer.ms()).dump(2)
        << "\n";
  } else {
    std::cout << "verify inequalities: k in 1.." << k_max << ", alpha grid "
              << grid << " (" << alphas.size() << " points)\n";
    std::cout << "records checked " << checked << ", failures "
              << failures.size() << "\n";
    if (!passed) {
      const auto& f = failures.front();
      std::cout << "first failure: k=" << f["k"] << " alpha=" << f["alpha"]
                << " record=" << f["name"]
                << " lhs=" << fmt17(f["lhs"].get<double>())
                << " rhs=" << fmt17(f["rhs"].get<double>()) << "\n";
    }
    std::cout << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? kOk : kAssertionFailed;
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(int n, std::optional<int> k, std::optional<int> cls,
                  const std::vector<std::string>& alpha_texts,
                  const std::string& out, bool as_json) {
  std::vector<double> alphas;
  for (const auto& s : alpha_texts) alphas.push_back(parse_alpha(s));

  std::ofstream file;
  if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out);
  }
  std::ostream& stream = out.empty() ? std::cout : file;

  EnumerationQuery q;
  q.order = n;
  q.pendants = k;
  q.cycle_filter = cls;

  Timer timer;
  long total = 0;
  std::map<int, long> per_class;
  enumerate_tricyclic(q, [&](const Graph& g) {
    ++total;
    const int c = cycle_class(g);
    ++per_class[c];
    json line;
    line["edges"] = edges_json(g.edges());
    line["pendants"] = pendant_count(g);
    line["cycles"] = c;
    if (!alphas.empty()) {
      json rho;
      for (size_t i = 0; i < alphas.size(); ++i)
        rho[alpha_texts[i]] = alpha_spectral_radius(g, alphas[i]).radius;
      line["rho"] = rho;
    }
    stream << line.dump() << "\n";
  });

  json counts;
  for (const auto& [c, cnt] : per_class) counts[std::to_string(c)] = cnt;
  if (as_json) {
    json inputs{{"n", n}};
    if (k) inputs["k"] = *k;
    if (cls) inputs["class"] = *cls;
    if (!alpha_texts.empty()) inputs["alpha"] = alpha_texts;
    if (!out.empty()) inputs["out"] = out;
    json results{{"graphs", total}, {"class_counts", counts}};
    std::cout << make_report("enumerate", inputs, results, timer.ms()).dump(2)
              << "\n";
  } else {
    std::ostream& info = out.empty() ? std::cerr : std::cout;
    info << "graphs " << total << "\n";
    for (const auto& [c, cnt] : per_class)
      info << "class " << c << ": " << cnt << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A_alpha spectral radius toolkit for tricyclic graphs"};
  app.require_subcommand(1);

  // spectral
  auto* sp = app.add_subcommand("spectral", "dominant A_alpha eigenpair of a graph");
  std::string sp_input, sp_alpha = "0.5";
  bool sp_perron = false, sp_json = false;
  sp->add_option("--input", sp_input, "edge-list file")->required();
  sp->add_option("--alpha", sp_alpha, "alpha in [0,1)");
  sp->add_flag("--perron", sp_perron, "also print the Perron vector");
  sp->add_flag("--json", sp_json, "machine-readable report");

  // construct
  auto* co = app.add_subcommand("construct", "build a family instance");
  std::string co_family, co_out;
  int co_n = 0, co_k = 0;
  bool co_json = false;
  co->add_option("--family", co_family, "one of T3, T4, T6, T7")->required();
  co->add_option("--n", co_n, "total order")->required();
  co->add_option("--k", co_k, "pendant vertex count")->required();
  co->add_option("--out", co_out, "write edge list to this file");
  co->add_flag("--json", co_json, "machine-readable report");

  // bounds
  auto* bo = app.add_subcommand("bounds", "closed-form bounds and the computed radius");
  std::string bo_input, bo_alpha = "0.5";
  bool bo_json = false;
  bo->add_option("--input", bo_input, "edge-list file")->required();
  bo->add_option("--alpha", bo_alpha, "alpha in [0,1)");
  bo->add_flag("--json", bo_json, "machine-readable report");

  // verify
  auto* ve = app.add_subcommand("verify", "verification harnesses");
  ve->require_subcommand(1);

  auto* vt = ve->add_subcommand("theorem", "unique maximizer among k-pendant tricyclic graphs");
  int vt_n = 0, vt_k = 0, vt_jobs = 1;
  std::string vt_alpha = "0.5";
  bool vt_json = false;
  vt->add_option("--n", vt_n, "order")->required();
  vt->add_option("--k", vt_k, "pendant count")->required();
  vt->add_option("--alpha", vt_alpha, "alpha in [1/2,1)");
  vt->add_option("--jobs", vt_jobs, "worker threads (0 = all cores)");
  vt->add_flag("--json", vt_json, "machine-readable report");

  auto* vc = ve->add_subcommand("corollary", "uniqueness with an explicit radius gap");
  int vc_n = 0, vc_k = 0, vc_jobs = 1;
  std::string vc_alpha = "0.5";
  bool vc_json = false;
  vc->add_option("--n", vc_n, "order")->required();
  vc->add_option("--k", vc_k, "pendant count")->required();
  vc->add_option("--alpha", vc_alpha, "alpha in [1/2,1)");
  vc->add_option("--jobs", vc_jobs, "worker threads (0 = all cores)");
  vc->add_flag("--json", vc_json, "machine-readable report");

  auto* vl = ve->add_subcommand("lemmas", "randomized edge-surgery monotonicity trials");
  int vl_trials = 200;
  uint64_t vl_seed = 1;
  bool vl_json = false;
  vl->add_option("--trials", vl_trials, "trials per lemma");
  vl->add_option("--seed", vl_seed, "RNG seed");
  vl->add_flag("--json", vl_json, "machine-readable report");

  auto* vi = ve->add_subcommand("inequalities", "benchmark comparison table over a grid");
  int vi_kmax = 50;
  std::string vi_grid = "0.5:0.95:0.05";
  bool vi_json = false;
  vi->add_option("--k-max", vi_kmax, "check k = 1..k-max");
  vi->add_option("--alpha-grid", vi_grid, "start:stop:step");
  vi->add_flag("--json", vi_json, "machine-readable report");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "stream labeled tricyclic graphs as JSON lines");
  int en_n = 0;
  std::optional<int> en_k, en_class;
  std::vector<std::string> en_alphas;
  std::string en_out;
  bool en_json = false;
  en->add_option("--n", en_n, "order (capped; see ALPHA_EXTREMAL_MAX_N)")->required();
  en->add_option("--k", en_k, "pendant count filter");
  en->add_option("--class", en_class, "cycle-class filter (3, 4, 6, or 7)");
  en->add_option("--alpha", en_alphas, "radius per alpha (repeatable)");
  en->add_option("--out", en_out, "write JSON lines to this file");
  en->add_flag("--json", en_json, "summary report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kSpecError;
  }

  try {
    if (app.got_subcommand(sp))
      return cmd_spectral(sp_input, sp_alpha, sp_perron, sp_json);
    if (app.got_subcommand(co))
      return cmd_construct(co_family, co_n, co_k, co_out, co_json);
    if (app.got_subcommand(bo)) return cmd_bounds(bo_input, bo_alpha, bo_json);
    if (app.got_subcommand(ve)) {
      if (ve->got_subcommand(vt))
        return cmd_verify_theorem(vt_n, vt_k, vt_alpha, vt_jobs, vt_json);
      if (ve->got_subcommand(vc))
        return cmd_verify_corollary(vc_n, vc_k, vc_alpha, vc_jobs, vc_json);
      if (ve->got_subcommand(vl))
        return cmd_verify_lemmas(vl_trials, vl_seed, vl_json);
      if (ve->got_subcommand(vi))
        return cmd_verify_inequalities(vi_kmax, vi_grid, vi_json);
    }
    if (app.got_subcommand(en))
      return cmd_enumerate(en_n, en_k, en_class, en_alphas, en_out, en_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSpecError;
  } catch (const DisconnectedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDisconnected;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSpecError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSpecError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSpecError;
  }
  return kSpecError;
}
