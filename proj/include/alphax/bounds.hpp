#pragma once

// Closed-form eigenvalue bounds and the pendant-count inequality table used
// by the extremal verification.

#include <optional>
#include <string>
#include <vector>

#include "alphax/graph.hpp"
#include "alphax/spectra.hpp"

namespace alphax {

// Lower bound on the A_alpha radius from the maximum degree alone:
//   alpha*(max_degree+1)            for alpha <= 1/2,
//   alpha*max_degree + (1-alpha)^2/alpha  for alpha >= 1/2.
// The branches agree at alpha = 1/2 (both give (max_degree+1)/2); that point
// is evaluated through the second branch.
double lower_bound_maxdeg(int max_degree, AlphaParam alpha);

// max_v { alpha*d(v) + (1-alpha)*avg degree of v's neighbors }. Requires a
// graph with no isolated vertex. Equality holds exactly for regular graphs.
double upper_bound_degree_mean(const Graph& g, AlphaParam alpha);

// (2*alpha-1)*max_degree + (1-alpha)*lambda_max(D+A), valid for
// alpha in [1/2, 1]; throws std::domain_error below 1/2. Requires connected.
double upper_bound_sq(const Graph& g, AlphaParam alpha);

struct BoundsReport {
  double alpha = 0.0;
  int order = 0;
  int size = 0;
  double lower_maxdeg = 0.0;
  double upper_degree_mean = 0.0;
  std::optional<double> upper_sq;  // present only for alpha >= 1/2
};

BoundsReport bounds_report(const Graph& g, AlphaParam alpha);

// One row of the benchmark comparison: every candidate upper estimate for a
// non-maximal configuration must stay below the benchmark value
//   alpha*(k+6) + (1-alpha)^2/alpha.
// Strict rows require lhs < rhs; the one non-strict row (claim3) attains
// equality exactly at alpha = 1/2 and is evaluated as lhs <= rhs.
struct InequalityRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool strict = true;
  bool holds = false;
};

// The nine records for pendant count k >= 1 and alpha in [1/2, 1).
std::vector<InequalityRecord> inequality_chain(int k, AlphaParam alpha);

}  // namespace alphax
