#pragma once

// Closed-form exponents, recursions and admissibility criteria for node
// sequences f(±n^alpha) = 0, f^(±n^beta) = 0.

#include <cstddef>
#include <vector>

#include "uniqlab/extended_real.hpp"

namespace uniqlab {

/// Node-growth exponents (alpha, beta), both strictly inside (0, 1).
class ExponentPair {
 public:
  /// Throws std::invalid_argument unless 0 < alpha < 1 and 0 < beta < 1.
  ExponentPair(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  ExponentPair swapped() const noexcept { return ExponentPair(beta_, alpha_, Unchecked{}); }
  /// Relabelled so that alpha <= beta.
  ExponentPair ordered() const noexcept;

  bool sum_below_one() const noexcept { return alpha_ + beta_ < 1.0; }

 private:
  struct Unchecked {};
  ExponentPair(double a, double b, Unchecked) noexcept : alpha_(a), beta_(b) {}

  double alpha_;
  double beta_;
};

struct DerivedConstants {
  double gamma = 0.0;   // (a/(1-a)) (b/(1-b))
  double lambda = 0.0;  // (1+b) a/(1-a)
  double delta = 0.0;   // a/((1-a)(1-b))
  double theta1 = 0.0;  // a/((1-a)(1-b))
  double theta2 = 0.0;  // b/((1-a)(1-b))
  ExtendedReal L1 = ExtendedReal::infinite();
  ExtendedReal L2 = ExtendedReal::infinite();
  ExtendedReal tau = ExtendedReal::infinite();  // (lambda + delta)/(1 - gamma)
  ExtendedReal epsilon_f = ExtendedReal::infinite();
  ExtendedReal epsilon_fhat = ExtendedReal::infinite();
  // The expanded middle form (1-a-b+(2-b^2)a)/(1-a-b) * b/(1-b) of the
  // epsilon_fhat threshold, kept for side-by-side reporting.
  ExtendedReal epsilon_fhat_expanded = ExtendedReal::infinite();
};

DerivedConstants derive_constants(const ExponentPair& pair);

struct RegionReport {
  ExponentPair pair;
  bool in_region_A = false;
  bool sum_ok = false;
  bool branch_alpha = false;  // alpha < 1 - beta/(1-alpha-beta)
  bool branch_beta = false;   // beta < 1 - alpha/(1-alpha-beta)
  ExtendedReal order_bound = ExtendedReal::infinite();  // 1/(1 - min(L1, L2))
  bool hadamard_contradiction = false;
};

RegionReport region_A_membership(const ExponentPair& pair);

/// Diagonal boundary of region A: 1 - sqrt(2)/2.
double diagonal_threshold() noexcept;

struct RecursionStep {
  double a;
  double b;
};

/// Exponent recursion b = (omega + a) beta/(1-beta), a' = (omega + b) alpha/(1-alpha).
///
/// Both seeds are kept: the a-chain advances through an intermediate b built
/// from a_n, and the b-chain through an intermediate a built from b_n, so
/// with omega = 1 the trace satisfies a_{n+1} = theta1 + gamma a_n and
/// b_{n+1} = theta2 + gamma b_n exactly. Returns n_steps + 1 entries.
std::vector<RecursionStep> recursion_trace(const ExponentPair& pair, double a0, double b0,
                                           std::size_t n_steps, double omega = 1.0);

/// Fixed point of recursion_trace: (omega alpha, omega beta)/(1-alpha-beta).
RecursionStep recursion_fixed_point(const ExponentPair& pair, double omega = 1.0);

/// The closed-form omega-limits omega*alpha*(1+(omega-1)beta)/(1-alpha-beta) and
/// its mirror. They coincide with recursion_fixed_point only at omega = 1.
RecursionStep omega_limit_closed_form(const ExponentPair& pair, double omega);

/// Positive root of beta w^2 + (1-beta) w - (1-alpha-beta) = 0, no relabelling.
/// Throws std::domain_error (message carries the discriminant) when no
/// positive root exists.
double solve_omega(double alpha, double beta);

/// solve_omega on the pair relabelled so that alpha <= beta.
double omega_for_full_range(const ExponentPair& pair);

/// Order A/(A-1) of the entire extension given decay exp(-C|x|^A); A > 1.
double analytic_order_from_decay(double A);

/// True iff sum_n n^{-(exponent+eps) * order} diverges for small eps, i.e.
/// node_exponent * order < 1.
bool hadamard_divergence_check(double order, double node_exponent);

struct GeneralizedCheck {
  bool admissible = false;
  bool product_ok = false;  // eta * omega > 1
  double product = 0.0;
  ExponentPair equivalent_pair;
};

/// Gap exponents (eta, omega) of generic node sequences mapped to the
/// equivalent exponent pair (1/(1+eta), 1/(1+omega)).
GeneralizedCheck generalized_sequence_check(double eta, double omega);

}  // namespace uniqlab
