#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace uniqlab {

/// Nodes and weights of an n-point Gauss rule.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for the weight exp(-scale x^2): Jacobi-matrix nodes,
/// Newton-polished, with Christoffel weights.
/// Exact for polynomials of degree <= 2n-1 against that weight.
GaussRule gauss_hermite(std::size_t n, double scale = 1.0);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

struct AdaptiveOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  std::size_t max_intervals = 4000;
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod on [a, b].
QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b, const AdaptiveOptions& opts = {});

/// Integral over [a, inf) via the map x = a + t/(1-t).
QuadratureResult integrate_to_infinity(const RealFunction& f, double a, const AdaptiveOptions& opts = {});

/// Integral over the whole real line (two half-line pieces).
QuadratureResult integrate_real_line(const RealFunction& f, const AdaptiveOptions& opts = {});

}  // namespace uniqlab
