#include "uniqlab/exponent_engine.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace uniqlab {

namespace {

bool in_open_unit(double x) { return x > 0.0 && x < 1.0; }

double ratio(double x) { return x / (1.0 - x); }

}  // namespace

ExponentPair::ExponentPair(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!in_open_unit(alpha) || !in_open_unit(beta)) {
    throw std::invalid_argument(
        fmt::format("exponent pair must satisfy 0 < alpha, beta < 1 (got alpha={}, beta={})", alpha, beta));
  }
}

ExponentPair ExponentPair::ordered() const noexcept {
  return alpha_ <= beta_ ? *this : swapped();
}

DerivedConstants derive_constants(const ExponentPair& pair) {
  const double a = pair.alpha();
  const double b = pair.beta();
  const double ra = ratio(a);
  const double rb = ratio(b);
  const double denom = (1.0 - a) * (1.0 - b);

  DerivedConstants c;
  c.gamma = ra * rb;
  c.lambda = (1.0 + b) * ra;
  c.delta = a / denom;
  c.theta1 = a / denom;
  c.theta2 = b / denom;

  if (!pair.sum_below_one()) return c;

  const double s = 1.0 - a - b;
  c.L1 = ExtendedReal::finite(a / s);
  c.L2 = ExtendedReal::finite(b / s);
  c.tau = ExtendedReal::finite((c.lambda + c.delta) / (1.0 - c.gamma));
  c.epsilon_fhat = ExtendedReal::finite((1.0 + a - b * (1.0 + a * b)) / s * rb);
  c.epsilon_f = ExtendedReal::finite((1.0 + b - a * (1.0 + a * b)) / s * ra);
  c.epsilon_fhat_expanded = ExtendedReal::finite((s + (2.0 - b * b) * a) / s * rb);
  return c;
}

RegionReport region_A_membership(const ExponentPair& pair) {
  RegionReport r{pair};
  const double a = pair.alpha();
  const double b = pair.beta();
  r.sum_ok = pair.sum_below_one();
  if (!r.sum_ok) return r;

  const double s = 1.0 - a - b;
  r.branch_alpha = a < 1.0 - b / s;
  r.branch_beta = b < 1.0 - a / s;
  r.in_region_A = r.branch_alpha || r.branch_beta;

  const double l_min = std::min(a, b) / s;
  if (l_min < 1.0) r.order_bound = ExtendedReal::finite(1.0 / (1.0 - l_min));

  // Relabel so the smaller exponent drives the analytic order; the larger
  // one then has to make the zero-counting series diverge.
  const ExponentPair o = pair.ordered();
  r.hadamard_contradiction = o.beta() < 1.0 - o.alpha() / s;
  return r;
}

double diagonal_threshold() noexcept { return 1.0 - std::sqrt(2.0) / 2.0; }

std::vector<RecursionStep> recursion_trace(const ExponentPair& pair, double a0, double b0,
                                           std::size_t n_steps, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument(fmt::format("omega must be positive (got {})", omega));
  const double ra = ratio(pair.alpha());
  const double rb = ratio(pair.beta());

  std::vector<RecursionStep> trace;
  trace.reserve(n_steps + 1);
  trace.push_back({a0, b0});
  double a = a0;
  double b = b0;
  for (std::size_t n = 0; n < n_steps; ++n) {
    const double b_from_a = (omega + a) * rb;
    const double a_from_b = (omega + b) * ra;
    a = (omega + b_from_a) * ra;
    b = (omega + a_from_b) * rb;
    trace.push_back({a, b});
  }
  return trace;
}

RecursionStep recursion_fixed_point(const ExponentPair& pair, double omega) {
  if (!pair.sum_below_one()) throw std::domain_error("recursion has no finite fixed point when alpha + beta >= 1");
  const double s = 1.0 - pair.alpha() - pair.beta();
  return {omega * pair.alpha() / s, omega * pair.beta() / s};
}

RecursionStep omega_limit_closed_form(const ExponentPair& pair, double omega) {
  if (!pair.sum_below_one()) throw std::domain_error("omega limits are infinite when alpha + beta >= 1");
  const double a = pair.alpha();
  const double b = pair.beta();
  const double s = 1.0 - a - b;
  return {omega * a * (1.0 + (omega - 1.0) * b) / s, omega * b * (1.0 + (omega - 1.0) * a) / s};
}

double solve_omega(double alpha, double beta) {
  const double c = 1.0 - alpha - beta;
  const double p = 1.0 - beta;
  const double disc = p * p + 4.0 * beta * c;
  if (!(c > 0.0) || disc < 0.0) {
    throw std::domain_error(
        fmt::format("omega equation has no positive root (alpha={}, beta={}, discriminant={})", alpha, beta, disc));
  }
  // Cancellation-free form of (-p + sqrt(disc)) / (2 beta); also valid at beta = 0.
  return 2.0 * c / (p + std::sqrt(disc));
}

double omega_for_full_range(const ExponentPair& pair) {
  const ExponentPair o = pair.ordered();
  return solve_omega(o.alpha(), o.beta());
}

double analytic_order_from_decay(double A) {
  if (!(A > 1.0)) throw std::invalid_argument(fmt::format("decay exponent A must exceed 1 (got {})", A));
  return A / (A - 1.0);
}

bool hadamard_divergence_check(double order, double node_exponent) {
  if (!(order > 0.0)) throw std::invalid_argument(fmt::format("order must be positive (got {})", order));
  if (!in_open_unit(node_exponent)) {
    throw std::invalid_argument(fmt::format("node exponent must lie in (0,1) (got {})", node_exponent));
  }
  return node_exponent * order < 1.0;
}

GeneralizedCheck generalized_sequence_check(double eta, double omega) {
  if (!(eta > 0.0) || !(omega > 0.0)) {
    throw std::invalid_argument(fmt::format("eta and omega must be positive (got {}, {})", eta, omega));
  }
  GeneralizedCheck g{.equivalent_pair = ExponentPair(1.0 / (1.0 + eta), 1.0 / (1.0 + omega))};
  g.product = eta * omega;
  g.product_ok = g.product > 1.0;
  g.admissible = g.product_ok && region_A_membership(g.equivalent_pair).in_region_A;
  return g;
}

}  // namespace uniqlab
