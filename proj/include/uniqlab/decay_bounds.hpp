#pragma once

// Explicit decay and moment bounds driven by the spacing of zeros:
// intermediate-zero intervals, the Fourier-inversion gap bound, the
// polynomial / exponential certificates, the G/H moment cascade and the
// Gamma-moment identity. Everything that can overflow is carried in the log
// domain.

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "uniqlab/exponent_engine.hpp"
#include "uniqlab/node_family.hpp"

namespace uniqlab {

/// Bound on I_k(g) = \int |g(y)| |y|^k dy, stored as its logarithm.
struct MomentValue {
  std::size_t order = 0;
  double log_value = 0.0;  // -inf encodes an exact zero

  static MomentValue from_value(std::size_t k, double v);
  double value() const;
};

struct ZeroInterval {
  double lower;
  double upper;
  double gap;
};

/// [a_m, a_{m+k+1}]: the interval holding the m-th zero of the k-th derivative.
ZeroInterval derivative_zero_intervals(const NodeFamily& nodes, std::size_t k, std::size_t m);

/// (2 pi)^{k+1} I_{k+1} * gap: pointwise bound on |f^(k)| inside a bracket.
double inversion_gap_bound(const MomentValue& next_moment, double gap, std::size_t k);

struct PolynomialEnvelope {
  double exponent;  // |x|^exponent, exponent <= 0
};
struct ExpLinearEnvelope {
  double rate;  // exp(-rate |x|)
};
struct StretchedExpEnvelope {
  double power;   // 1/epsilon
  double margin;  // 1 - theta
};
using Envelope = std::variant<PolynomialEnvelope, ExpLinearEnvelope, StretchedExpEnvelope>;

/// |g(x)| <= exp(log_constant) * envelope(|x|) for |x| >= valid_from.
struct DecayCertificate {
  std::size_t order = 0;
  double log_constant = 0.0;
  Envelope envelope = PolynomialEnvelope{0.0};
  double valid_from = 0.0;

  double log_bound(double x) const;
  double bound(double x) const;
};

/// log B_k with B_k = (k+1)! (2^{2-alpha} pi)^{k+1} alpha^k.
double log_power_constant(double alpha, std::size_t k);

/// Certificate C_k |x|^{k(alpha-1)/alpha}, C_k = B_k I_k, valid for |x| >= (k+1)^alpha.
DecayCertificate power_decay_certificate(double alpha, std::size_t k, const MomentValue& moment);

/// Certificate tau_k exp(-k|x|), tau_k = k (2pi)^k ((k+1)!)^3 I_k, valid for |x| >= log(k+1); k >= 1.
DecayCertificate log_decay_certificate(std::size_t k, const MomentValue& moment);

struct OptimizedLogBound {
  std::size_t k = 0;
  double log_bound = 0.0;
};

/// Minimises the log certificate over 1 <= k <= e^{|x|} - 1.
OptimizedLogBound optimize_log_certificate(double x, const std::function<MomentValue(std::size_t)>& moments);

struct CascadeConfig {
  ExponentPair pair;
  double sup_bound = 1.0;           // D with |f^| <= D
  double first_moment = 1.0;        // I_1 seed in abstract mode
  bool normalized = true;           // A_{alpha,beta} = 1
  std::vector<double> seed_log_moments;  // log I_0..I_base; empty = abstract mode
};

/// Index maps of the cascade, realised with ceilings.
std::size_t cascade_j_hat(const ExponentPair& pair, std::size_t k);  // ceil((k+2) a/(1-a))
std::size_t cascade_j(const ExponentPair& pair, std::size_t i);      // ceil((i+2) b/(1-b))
std::size_t cascade_rho(const ExponentPair& pair, std::size_t k);    // j(j_hat(k))

/// Largest index the chain cannot descend below: max(4, max{k : rho(k) >= k}).
std::size_t cascade_base_index(const ExponentPair& pair);

/// log G(k) and log H(k) of the recursion I_k <= G(k) + H(k) I_{rho(k)}.
double cascade_log_g(const CascadeConfig& config, std::size_t k);
double cascade_log_h(const CascadeConfig& config, std::size_t k);

struct CascadeResult {
  MomentValue moment;
  std::size_t depth = 0;            // number of G/H steps taken
  double tau = 0.0;                 // (lambda + delta)/(1 - gamma)
  double linear_coefficient = 0.0;  // (log I_k - tau k log k)/k
};

/// Bound on I_k(f) from the G/H cascade. Throws std::domain_error when
/// alpha + beta >= 1 ("cascade diverges").
CascadeResult moment_cascade(const CascadeConfig& config, std::size_t k);

/// Least-squares fit log I_k ~ c1 k log k + c2 k + c3 over [k_min, k_max].
struct SlopeFit {
  double k_log_k = 0.0;
  double linear = 0.0;
  double intercept = 0.0;
};
SlopeFit fit_cascade_slope(const CascadeConfig& config, std::size_t k_min, std::size_t k_max);

/// Base moments log I_0..I_base of a witness by adaptive quadrature.
std::vector<double> witness_seed_moments(const std::function<double(double)>& witness, std::size_t base);

enum class DecaySide { f, fhat };

/// Stretched-exponential certificate exp(-(1-theta)|x|^{1/eps}) with eps
/// above the size-condition threshold (1 + tau) r/(1-r) by a relative margin,
/// r = beta for fhat and alpha for f. The multiplicative constant depends on
/// f and is not tracked (log_constant = 0).
DecayCertificate stretched_envelope(const ExponentPair& pair, double moment_growth_tau, DecaySide which,
                                    double margin = 0.01, double theta = 0.1);

/// Same envelope after the exponent recursion has converged: eps = L + margin.
DecayCertificate converged_envelope(const ExponentPair& pair, DecaySide which, double margin = 0.01,
                                    double theta = 0.1);

struct GammaMoment {
  double log_value = 0.0;
  double value = 0.0;
  bool overflow = false;  // value not representable; use log_value
};

/// Exact 2 delta (1-theta)^{-delta(k+1)} Gamma(delta(k+1)) =
/// \int_R exp(-(1-theta)|x|^{1/delta}) |x|^k dx.
GammaMoment gamma_moment_bound(double delta, double theta, std::size_t k);

}  // namespace uniqlab
