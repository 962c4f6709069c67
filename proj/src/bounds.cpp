#include "alphax/bounds.hpp"

#include <algorithm>

namespace alphax {

double lower_bound_maxdeg(int max_degree, AlphaParam alpha) {
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  const double a = alpha.value();
  if (a < 0.5) return a * (max_degree + 1);
  return a * max_degree + (1.0 - a) * (1.0 - a) / a;
}

double upper_bound_degree_mean(const Graph& g, AlphaParam alpha) {
  const double a = alpha.value();
  double best = 0.0;
  bool any = false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) throw std::invalid_argument("isolated vertex");
    long sum = 0;
    for (int w : g.neighbors(v)) sum += g.degree(w);
    const double val = a * g.degree(v) +
                       (1.0 - a) * static_cast<double>(sum) / g.degree(v);
    if (!any || val > best) best = val;
    any = true;
  }
  if (!any) throw std::invalid_argument("empty graph");
  return best;
}

double upper_bound_sq(const Graph& g, AlphaParam alpha) {
  const double a = alpha.value();
  if (a < 0.5) throw std::domain_error("bound requires alpha >= 1/2");
  return (2.0 * a - 1.0) * g.max_degree() +
         (1.0 - a) * signless_laplacian_radius(g);
}

BoundsReport bounds_report(const Graph& g, AlphaParam alpha) {
  BoundsReport r;
  r.alpha = alpha.value();
  r.order = g.order();
  r.size = g.size();
  r.lower_maxdeg = lower_bound_maxdeg(g.max_degree(), alpha);
  r.upper_degree_mean = upper_bound_degree_mean(g, alpha);
  if (alpha.value() >= 0.5) r.upper_sq = upper_bound_sq(g, alpha);
  return r;
}

std::vector<InequalityRecord> inequality_chain(int k, AlphaParam alpha) {
  if (k < 1) throw std::invalid_argument("pendant count must be >= 1");
  const double a = alpha.value();
  if (a < 0.5 || a >= 1.0)
    throw std::domain_error("inequality chain requires alpha in [1/2, 1)");
  const double b = 1.0 - a;
  const double kd = k;
  const double benchmark = a * (kd + 6) + b * b / a;

  std::vector<InequalityRecord> rows;
  auto add = [&](const std::string& name, double lhs, bool strict = true) {
    InequalityRecord r;
    r.name = name;
    r.lhs = lhs;
    r.rhs = benchmark;
    r.strict = strict;
    r.holds = strict ? lhs < r.rhs : lhs <= r.rhs;
    rows.push_back(r);
  };

  add("eq4", a * (kd + 3) + b * (2 * kd + 9) / (kd + 3));
  add("eq5", 3 * a + b * (kd + 9) / 3);
  add("eq7", 2 * a + b * (kd + 5) / 2);
  add("eq100", a + b * (kd + 3));
  add("eq9", a * (kd + 4) + b * (2 * kd + 10) / (kd + 4));
  add("eq10", 2 * a + b * (kd + 8) / 2);
  add("eq11", 4 * a + b * (kd + 10) / 4);
  add("eq101", a + b * (kd + 4));
  add("claim3", b * (kd + 7) + (2 * a - 1) * (kd + 5), /*strict=*/false);
  return rows;
}

}  // namespace alphax
