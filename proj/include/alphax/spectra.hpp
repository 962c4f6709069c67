#pragma once

// Dense symmetric matrices and eigenvalue machinery for the convex
// combination M(alpha) = alpha*D + (1-alpha)*A of a graph's degree and
// adjacency matrices. The production solver is a shifted power iteration;
// a cyclic Jacobi sweep over the full spectrum serves as an independent
// cross-check and is never substituted for the solver.

#include <stdexcept>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

// Convergence configuration for dominant_eigpair.
inline constexpr double kRayleighTol = 1e-13;   // relative eigenvalue delta
inline constexpr double kResidualTol = 1e-10;   // ||Mx - rho*x||_2
inline constexpr long kMaxPowerIterations = 1'000'000;
// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
inline constexpr double kJacobiOffTol = 1e-12;
inline constexpr int kOracleMaxOrder = 16;

class AlphaParam {
 public:
  AlphaParam(double value) : value_(value) {  // NOLINT: implicit by design
    if (!(value >= 0.0 && value <= 1.0))
      throw std::domain_error("alpha must lie in [0,1]");
  }
  double value() const { return value_; }

 private:
  double value_;
};

class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
    if (n < 0) throw std::invalid_argument("negative dimension");
  }
  int dim() const { return n_; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  // Sets both (i,j) and (j,i) so symmetry holds exactly.
  void set(int i, int j, double v) {
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
  }
  const double* data() const { return a_.data(); }
  bool is_symmetric() const;

 private:
  int n_;
  std::vector<double> a_;
};

struct SpectralResult {
  double radius = 0.0;
  std::vector<double> perron;
  long iterations = 0;
  double residual = 0.0;
};

struct ConvergenceError : std::runtime_error {
  double last_residual;
  long iterations;
  ConvergenceError(double r, long it)
      : std::runtime_error("power iteration failed to converge (residual " +
                           std::to_string(r) + " after " + std::to_string(it) +
                           " iterations)"),
        last_residual(r),
        iterations(it) {}
};

// alpha*D + (1-alpha)*A. alpha in [0,1].
SymMatrix build_a_alpha(const Graph& g, AlphaParam alpha);
// D + A.
SymMatrix build_signless_laplacian(const Graph& g);

// Largest eigenvalue and unit eigenvector of a symmetric, entrywise
// nonnegative matrix, by power iteration on M + sigma*I with
// sigma = 1 + max diagonal entry. Start vector is the normalized all-ones
// vector; convergence requires both successive Rayleigh quotients within
// kRayleighTol*(1+|rho|) and residual within kResidualTol. When connected
// is true the returned vector is entrywise positive. Throws
// ConvergenceError past kMaxPowerIterations and std::invalid_argument for
// non-symmetric input.
SpectralResult dominant_eigpair(const SymMatrix& m, bool connected);

// Convenience: dominant pair of A_alpha(g). Requires g connected (so the
// Perron vector is positive) and alpha < 1.
SpectralResult alpha_spectral_radius(const Graph& g, AlphaParam alpha);
// Largest eigenvalue of D + A for a connected graph.
double signless_laplacian_radius(const Graph& g);

// Full spectrum, ascending, via cyclic Jacobi rotations. Test oracle for
// matrices of dimension <= kOracleMaxOrder.
std::vector<double> full_spectrum_oracle(const SymMatrix& m);

}  // namespace alphax
