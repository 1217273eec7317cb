#include "uniqlab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <utility>

namespace uniqlab {

namespace {

// Orthonormal Hermite polynomials q_k for exp(-t^2): returns the Newton step
// q_n / q_n' at t and log of the Christoffel weight 1 / sum_{k<n} q_k^2.
std::pair<double, double> hermite_christoffel(double t, std::size_t n) {
  constexpr double kBig = 0x1p400;
  double log_scale = 0.0;
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  double sum = cur * cur;
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double next = std::sqrt(2.0 / (kd + 1.0)) * t * cur - std::sqrt(kd / (kd + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (k + 1 < n) sum += cur * cur;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      prev /= kBig;
      sum /= kBig * kBig;
      log_scale += 400.0 * std::numbers::ln2;
    }
  }
  // q_n' = sqrt(2n) q_{n-1}
  const double step = cur / (std::sqrt(2.0 * static_cast<double>(n)) * prev);
  return {step, -std::log(sum) - 2.0 * log_scale};
}

}  // namespace

GaussRule gauss_hermite(std::size_t n, double scale) {
  if (n == 0) throw std::invalid_argument("gauss_hermite: need at least one node");
  if (!(scale > 0.0)) throw std::invalid_argument("gauss_hermite: scale must be positive");

  // Jacobi matrix of the monic Hermite recurrence for exp(-x^2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 1 ? n - 1 : 0));
  for (Eigen::Index i = 0; i < sub.size(); ++i) sub[i] = std::sqrt(0.5 * static_cast<double>(i + 1));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw std::runtime_error("gauss_hermite: eigensolver failed");

  // Eigenvector weights lose relative accuracy at the outer nodes, so each node
  // is polished by Newton on q_n and its weight recomputed as the Christoffel
  // number 1 / sum_k q_k(t)^2 of the orthonormal polynomials.
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double x_scale = 1.0 / std::sqrt(scale);
  for (std::size_t i = 0; i < n; ++i) {
    double t = eig.eigenvalues()[static_cast<Eigen::Index>(i)];
    for (int iter = 0; iter < 2; ++iter) t -= hermite_christoffel(t, n).first;
    const double log_weight = hermite_christoffel(t, n).second;
    rule.nodes[i] = t * x_scale;
    rule.weights[i] = std::exp(log_weight) * x_scale;
  }
  return rule;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const RealFunction& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b, const AdaptiveOptions& opts) {
  std::priority_queue<Segment> heap;
  heap.push(kronrod15(f, a, b));
  double total = heap.top().value;
  double error = heap.top().error;

  while (heap.size() < opts.max_intervals) {
    if (error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) break;
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // interval exhausted at machine precision
      heap.push(worst);
      break;
    }
    const Segment left = kronrod15(f, worst.a, mid);
    const Segment right = kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  QuadratureResult r;
  r.intervals = heap.size();
  r.value = 0.0;
  r.error_estimate = 0.0;
  while (!heap.empty()) {
    r.value += heap.top().value;
    r.error_estimate += heap.top().error;
    heap.pop();
  }
  r.converged = r.error_estimate <= std::max(opts.abs_tol, opts.rel_tol * std::abs(r.value));
  return r;
}

QuadratureResult integrate_to_infinity(const RealFunction& f, double a, const AdaptiveOptions& opts) {
  auto mapped = [&](double t) {
    if (t >= 1.0) return 0.0;
    const double one_minus = 1.0 - t;
    const double x = a + t / one_minus;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (one_minus * one_minus);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, opts);
}

QuadratureResult integrate_real_line(const RealFunction& f, const AdaptiveOptions& opts) {
  const QuadratureResult right = integrate_to_infinity(f, 0.0, opts);
  const QuadratureResult left = integrate_to_infinity([&](double x) { return f(-x); }, 0.0, opts);
  QuadratureResult r;
  r.value = right.value + left.value;
  r.error_estimate = right.error_estimate + left.error_estimate;
  r.intervals = right.intervals + left.intervals;
  r.converged = right.converged && left.converged;
  return r;
}

}  // namespace uniqlab
