#include "uniqlab/decay_bounds.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <type_traits>

#include "uniqlab/quadrature.hpp"

namespace uniqlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

double log_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

std::size_t ceil_index(double x) {
  // Guard against (k+2)*r landing a hair above an integer through rounding.
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x))) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::ceil(x));
}

}  // namespace

MomentValue MomentValue::from_value(std::size_t k, double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(fmt::format("moment I_{} must be finite and nonnegative (got {})", k, v));
  }
  return {k, v == 0.0 ? kNegInf : std::log(v)};
}

double MomentValue::value() const { return std::exp(log_value); }

ZeroInterval derivative_zero_intervals(const NodeFamily& nodes, std::size_t k, std::size_t m) {
  const double lo = nodes(m);
  const double hi = nodes(m + k + 1);
  return {lo, hi, hi - lo};
}

double inversion_gap_bound(const MomentValue& next_moment, double gap, std::size_t k) {
  if (!(gap >= 0.0)) throw std::invalid_argument(fmt::format("gap must be nonnegative (got {})", gap));
  if (gap == 0.0 || next_moment.log_value == kNegInf) return 0.0;
  return std::exp(static_cast<double>(k + 1) * std::log(kTwoPi) + next_moment.log_value + std::log(gap));
}

double DecayCertificate::log_bound(double x) const {
  const double ax = std::abs(x);
  return log_constant + std::visit(
                            [ax](const auto& env) -> double {
                              using T = std::decay_t<decltype(env)>;
                              if constexpr (std::is_same_v<T, PolynomialEnvelope>) {
                                return env.exponent == 0.0 ? 0.0 : env.exponent * std::log(ax);
                              } else if constexpr (std::is_same_v<T, ExpLinearEnvelope>) {
                                return -env.rate * ax;
                              } else {
                                return -env.margin * std::pow(ax, env.power);
                              }
                            },
                            envelope);
}

double DecayCertificate::bound(double x) const { return std::exp(log_bound(x)); }

double log_power_constant(double alpha, std::size_t k) {
  const double kd = static_cast<double>(k);
  return log_factorial(k + 1) + (kd + 1.0) * ((2.0 - alpha) * std::numbers::ln2 + std::log(std::numbers::pi)) +
         kd * std::log(alpha);
}

DecayCertificate power_decay_certificate(double alpha, std::size_t k, const MomentValue& moment) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("power_decay_certificate: alpha must lie in (0,1)");
  const double kd = static_cast<double>(k);
  DecayCertificate c;
  c.order = k;
  c.log_constant = log_power_constant(alpha, k) + moment.log_value;
  c.envelope = PolynomialEnvelope{k == 0 ? 0.0 : kd * (alpha - 1.0) / alpha};
  c.valid_from = std::pow(kd + 1.0, alpha);
  return c;
}

DecayCertificate log_decay_certificate(std::size_t k, const MomentValue& moment) {
  if (k < 1) throw std::invalid_argument("log_decay_certificate: k must be at least 1");
  const double kd = static_cast<double>(k);
  DecayCertificate c;
  c.order = k;
  c.log_constant = std::log(kd) + kd * std::log(kTwoPi) + 3.0 * log_factorial(k + 1) + moment.log_value;
  c.envelope = ExpLinearEnvelope{kd};
  c.valid_from = std::log1p(kd);
  return c;
}

OptimizedLogBound optimize_log_certificate(double x, const std::function<MomentValue(std::size_t)>& moments) {
  const double ax = std::abs(x);
  const double k_cap = std::min(std::expm1(ax), 1e6);
  if (k_cap < 1.0) throw std::invalid_argument(fmt::format("optimize_log_certificate: |x|={} admits no k >= 1", ax));

  OptimizedLogBound best{0, std::numeric_limits<double>::infinity()};
  const auto k_max = static_cast<std::size_t>(k_cap);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double lb = log_decay_certificate(k, moments(k)).log_bound(ax);
    if (lb < best.log_bound) best = {k, lb};
    // The log bound is convex in k; stop once it has clearly turned upward.
    if (lb > best.log_bound + 50.0) break;
  }
  return best;
}

std::size_t cascade_j_hat(const ExponentPair& pair, std::size_t k) {
  const double a = pair.alpha();
  return ceil_index((static_cast<double>(k) + 2.0) * a / (1.0 - a));
}

std::size_t cascade_j(const ExponentPair& pair, std::size_t i) {
  const double b = pair.beta();
  return ceil_index((static_cast<double>(i) + 2.0) * b / (1.0 - b));
}

std::size_t cascade_rho(const ExponentPair& pair, std::size_t k) { return cascade_j(pair, cascade_j_hat(pair, k)); }

std::size_t cascade_base_index(const ExponentPair& pair) {
  if (!pair.sum_below_one()) throw std::domain_error("cascade diverges: alpha + beta >= 1");
  const DerivedConstants c = derive_constants(pair);
  const double rb = pair.beta() / (1.0 - pair.beta());
  // rho(k) <= gamma k + 2 gamma + 3 rb + 1, so rho(k) < k beyond this index.
  const auto horizon = static_cast<std::size_t>(std::ceil((2.0 * c.gamma + 3.0 * rb + 1.0) / (1.0 - c.gamma))) + 1;
  std::size_t base = 4;
  for (std::size_t k = 0; k <= horizon; ++k) {
    if (cascade_rho(pair, k) >= k) base = std::max(base, k);
  }
  return base;
}

namespace {

double log_normalization(const CascadeConfig& config) {
  return config.normalized ? 0.0 : std::log(std::max(1.0, 2.0 * config.sup_bound));
}

void check_config(const CascadeConfig& config) {
  if (!(config.sup_bound > 0.0)) throw std::invalid_argument("cascade: sup bound D must be positive");
  if (!(config.first_moment > 0.0)) throw std::invalid_argument("cascade: I_1 must be positive");
  if (!config.pair.sum_below_one()) throw std::domain_error("cascade diverges: alpha + beta >= 1");
}

}  // namespace

double cascade_log_g(const CascadeConfig& config, std::size_t k) {
  const double a = config.pair.alpha();
  const double b = config.pair.beta();
  const std::size_t jh = cascade_j_hat(config.pair, k);
  const double log_k = std::log(static_cast<double>(k));
  const double log_jh = std::log(static_cast<double>(jh));
  const double first = (a * (static_cast<double>(k) + 1.0) - 1.0) * log_k;
  const double second =
      log_power_constant(a, jh) - 2.0 * log_k + (b * (static_cast<double>(jh) + 1.0) - 1.0) * log_jh;
  return log_normalization(config) + log_sum_exp(first, second);
}

double cascade_log_h(const CascadeConfig& config, std::size_t k) {
  const std::size_t jh = cascade_j_hat(config.pair, k);
  const std::size_t j = cascade_j(config.pair, jh);
  const double log_k = std::log(static_cast<double>(k));
  const double log_jh = std::log(static_cast<double>(jh));
  return log_normalization(config) + log_power_constant(config.pair.alpha(), jh) +
         log_power_constant(config.pair.beta(), j) - 2.0 * log_k - 2.0 * log_jh;
}

CascadeResult moment_cascade(const CascadeConfig& config, std::size_t k) {
  check_config(config);
  const std::size_t base = cascade_base_index(config.pair);
  auto seed = [&](std::size_t i) {
    if (config.seed_log_moments.empty()) return std::log(config.first_moment);
    if (i >= config.seed_log_moments.size()) {
      throw std::invalid_argument(
          fmt::format("cascade needs seed moments I_0..I_{} (got {})", base, config.seed_log_moments.size()));
    }
    return config.seed_log_moments[i];
  };

  const DerivedConstants c = derive_constants(config.pair);
  CascadeResult result;
  result.tau = c.tau.value();

  std::vector<std::size_t> chain{k};
  while (chain.back() > base) chain.push_back(cascade_rho(config.pair, chain.back()));

  double log_moment = seed(chain.back());
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    const std::size_t ki = chain[i];
    log_moment = log_sum_exp(cascade_log_g(config, ki), cascade_log_h(config, ki) + log_moment);
  }

  result.moment = {k, log_moment};
  result.depth = chain.size() - 1;
  if (k >= 2) {
    const double kd = static_cast<double>(k);
    result.linear_coefficient = (log_moment - result.tau * kd * std::log(kd)) / kd;
  }
  return result;
}

SlopeFit fit_cascade_slope(const CascadeConfig& config, std::size_t k_min, std::size_t k_max) {
  if (k_max < k_min + 2) throw std::invalid_argument("fit_cascade_slope: need at least three orders");
  const auto rows = static_cast<Eigen::Index>(k_max - k_min + 1);
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd target(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto k = k_min + static_cast<std::size_t>(r);
    const double kd = static_cast<double>(k);
    design(r, 0) = kd * std::log(kd);
    design(r, 1) = kd;
    design(r, 2) = 1.0;
    target[r] = moment_cascade(config, k).moment.log_value;
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(target);
  return {coef[0], coef[1], coef[2]};
}

std::vector<double> witness_seed_moments(const std::function<double(double)>& witness, std::size_t base) {
  std::vector<double> logs(base + 1);
  for (std::size_t k = 0; k <= base; ++k) {
    const double kd = static_cast<double>(k);
    const QuadratureResult q = integrate_real_line(
        [&](double y) { return std::abs(witness(y)) * (k == 0 ? 1.0 : std::pow(std::abs(y), kd)); });
    if (!q.converged) {
      throw std::runtime_error(
          fmt::format("witness moment I_{} did not converge (error estimate {})", k, q.error_estimate));
    }
    logs[k] = MomentValue::from_value(k, q.value).log_value;
  }
  return logs;
}

namespace {

double side_exponent(const ExponentPair& pair, DecaySide which) {
  return which == DecaySide::fhat ? pair.beta() : pair.alpha();
}

DecayCertificate stretched_certificate(double epsilon, double theta) {
  if (!(theta >= 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in [0,1)");
  DecayCertificate c;
  c.log_constant = 0.0;
  c.envelope = StretchedExpEnvelope{1.0 / epsilon, 1.0 - theta};
  c.valid_from = 0.0;
  return c;
}

}  // namespace

DecayCertificate stretched_envelope(const ExponentPair& pair, double moment_growth_tau, DecaySide which,
                                    double margin, double theta) {
  if (!pair.sum_below_one()) throw std::domain_error("stretched envelope requires alpha + beta < 1");
  if (!(moment_growth_tau >= 0.0)) throw std::invalid_argument("moment growth tau must be nonnegative");
  if (!(margin > 0.0)) throw std::invalid_argument("margin must be positive");
  const double r = side_exponent(pair, which);
  const double threshold = (1.0 + moment_growth_tau) * r / (1.0 - r);
  return stretched_certificate(threshold * (1.0 + margin), theta);
}

DecayCertificate converged_envelope(const ExponentPair& pair, DecaySide which, double margin, double theta) {
  if (!pair.sum_below_one()) throw std::domain_error("converged envelope requires alpha + beta < 1");
  if (!(margin > 0.0)) throw std::invalid_argument("margin must be positive");
  const DerivedConstants c = derive_constants(pair);
  const double limit = which == DecaySide::fhat ? c.L2.value() : c.L1.value();
  return stretched_certificate(limit + margin, theta);
}

GammaMoment gamma_moment_bound(double delta, double theta, std::size_t k) {
  if (!(delta > 0.0)) throw std::invalid_argument(fmt::format("delta must be positive (got {})", delta));
  if (!(theta >= 0.0 && theta < 1.0)) throw std::invalid_argument(fmt::format("theta must lie in [0,1) (got {})", theta));
  const double s = delta * (static_cast<double>(k) + 1.0);
  GammaMoment g;
  g.log_value = std::log(2.0 * delta) - s * std::log1p(-theta) + std::lgamma(s);
  g.overflow = g.log_value > std::log(std::numeric_limits<double>::max());
  if (g.overflow) {
    g.value = std::numeric_limits<double>::infinity();
  } else if (s < 171.0) {
    // Direct evaluation keeps integer cases such as 2 Gamma(4) = 12 exact.
    g.value = 2.0 * delta * std::pow(1.0 - theta, -s) * std::tgamma(s);
  } else {
    g.value = std::exp(g.log_value);
  }
  return g;
}

}  // namespace uniqlab
