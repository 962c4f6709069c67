#include "alphax/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace alphax {

bool SymMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

SymMatrix build_a_alpha(const Graph& g, AlphaParam alpha) {
  const double a = alpha.value();
  SymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, a * g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0 - a);
  return m;
}

SymMatrix build_signless_laplacian(const Graph& g) {
  SymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

SpectralResult dominant_eigpair(const SymMatrix& m, bool connected) {
  if (!m.is_symmetric()) throw std::invalid_argument("matrix not symmetric");
  const int n = m.dim();
  if (n == 0) throw std::invalid_argument("empty matrix");

  double max_diag = m.at(0, 0);
  for (int i = 1; i < n; ++i) max_diag = std::max(max_diag, m.at(i, i));
  const double sigma = 1.0 + max_diag;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> z(n);
  const double* a = m.data();

  double rho = 0.0, rho_prev = 0.0, residual = 0.0;
  long it = 0;
  for (it = 1; it <= kMaxPowerIterations; ++it) {
    for (int i = 0; i < n; ++i) {
      const double* row = a + static_cast<size_t>(i) * n;
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += row[j] * x[j];
      z[i] = s;
    }
    rho = 0.0;
    for (int i = 0; i < n; ++i) rho += x[i] * z[i];
    double res2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = z[i] - rho * x[i];
      res2 += d * d;
    }
    residual = std::sqrt(res2);
    if (it > 1 && std::abs(rho - rho_prev) <= kRayleighTol * (1.0 + std::abs(rho)) &&
        residual <= kResidualTol) {
      SpectralResult r;
      r.radius = rho;
      r.iterations = it;
      r.residual = residual;
      if (connected) {
        for (double& xi : x)
          if (xi <= 0.0) throw std::logic_error("Perron vector not positive");
      }
      r.perron = std::move(x);
      return r;
    }
    rho_prev = rho;
    // Next iterate: normalized (M + sigma I) x. The shift keeps the dominant
    // eigenvalue simple-signed for nonnegative M so the iteration cannot
    // oscillate between +/- rho.
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      z[i] += sigma * x[i];
      norm2 += z[i] * z[i];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) x[i] = z[i] * inv;
  }
  throw ConvergenceError(residual, kMaxPowerIterations);
}

SpectralResult alpha_spectral_radius(const Graph& g, AlphaParam alpha) {
  if (alpha.value() >= 1.0)
    throw std::domain_error("alpha must be < 1 for the dominant pair");
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  return dominant_eigpair(build_a_alpha(g, alpha), /*connected=*/true);
}

double signless_laplacian_radius(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  return dominant_eigpair(build_signless_laplacian(g), /*connected=*/true).radius;
}

std::vector<double> full_spectrum_oracle(const SymMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("matrix not symmetric");
  const int n = m.dim();
  if (n > kOracleMaxOrder) throw std::invalid_argument("oracle limited to order 16");
  if (n == 0) return {};

  std::vector<double> a(m.data(), m.data() + static_cast<size_t>(n) * n);
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps && off_norm() > kJacobiOffTol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  if (off_norm() > kJacobiOffTol)
    throw std::runtime_error("jacobi sweep failed to converge");

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace alphax
