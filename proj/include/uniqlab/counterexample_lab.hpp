#pragma once

// Adversarial derivative-zero sequences showing that the gap bound
// |a^(k)_{n+1} - a^(k)_n| <= C (k+1) |a|^{-(1-alpha)/alpha} cannot be
// improved, plus the sum-of-squares extremal behind the averaged bound.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uniqlab {

/// Levels a^(k)_n, k = 0..k_max, on a window of the dyadic block
/// [n_j, n_{j+1}) = {n : n^alpha in [2^j, 2^{j+1})}. The perturbations
/// 2^{-10 k (1-alpha) j/alpha} lie far below double resolution, so values are
/// held in binary arbitrary precision and rounded only on the way out.
class GapSequence {
 public:
  struct Impl;

  /// Wraps explicit double levels (level k holds window - k values); used to
  /// audit hand-made sequences with check_sharpness_constraints.
  static GapSequence from_levels(double alpha, unsigned j, bool blocked, std::size_t block_begin,
                                 const std::vector<std::vector<double>>& levels);

  double alpha() const;
  unsigned j() const;
  std::size_t k_max() const;
  bool blocked() const;
  std::size_t block_begin() const;  // n_j
  std::size_t block_end() const;    // n_{j+1}
  std::size_t window_end() const;   // level k covers [n_j, window_end - k)
  long precision_bits() const;

  std::size_t level_size(std::size_t k) const;
  /// a^(k)_{n_j + offset} rounded to double.
  double value(std::size_t k, std::size_t offset) const;
  /// a^(k)_{n+1} - a^(k)_n evaluated exactly, then rounded.
  double gap(std::size_t k, std::size_t offset) const;
  double first_gap(std::size_t k) const { return gap(k, 0); }

  /// log2 of the level-k perturbation budget, -10 k (1-alpha) j / alpha.
  double log2_budget(std::size_t k) const;
  /// 2^{-(1-alpha) j/alpha}: the level-0 gap scale on the block.
  double gap_scale() const;
  /// Sub-block starts where the first-zero rule applies.
  bool is_start(std::size_t offset) const;

  const Impl& impl() const { return *impl_; }

 private:
  explicit GapSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend GapSequence build_sharpness_sequence(double, unsigned, std::size_t, bool, std::optional<std::size_t>);

  std::shared_ptr<const Impl> impl_;
};

/// First n with n^alpha >= 2^j.
std::size_t dyadic_block_start(double alpha, unsigned j);

/// Builds the sharpness sequence with every zero at the midpoint of its
/// admissible interval. blocked = true restarts the first-zero rule on every
/// sub-block [n_j + l(k_max+1), n_j + (l+1)(k_max+1)). window limits the
/// number of block indices built (default: whole block, capped in size).
/// Throws std::invalid_argument on bad parameters and std::runtime_error
/// naming (k, n) when an admissible interval is empty.
GapSequence build_sharpness_sequence(double alpha, unsigned j, std::size_t k_max, bool blocked,
                                     std::optional<std::size_t> window = std::nullopt);

/// Verifies strict increase per level, interlacing
/// a^(k-1)_n < a^(k)_n < a^(k-1)_{n+1} and the perturbation-budget
/// constraints. Returns a description of the first violation.
std::optional<std::string> check_sharpness_constraints(const GapSequence& seq);

/// Sharpness ratio first_gap / (k 2^{-(1-alpha) j/alpha}).
double sharpness_ratio(const GapSequence& seq, std::size_t k);

struct AverageGapReport {
  double mean_gap = 0.0;
  double sum_squares = 0.0;
  double max_gap = 0.0;
  double bound = 0.0;     // C (k+1) 2^{-(1-alpha) j/alpha}
  double constant = 0.0;  // C = alpha
  std::size_t gaps = 0;
};

AverageGapReport average_gap_report(const GapSequence& seq, std::size_t k);

struct SquaresProblem {
  std::size_t N = 1;
  double A = 1.0;  // sum constraint
  double B = 1.0;  // per-term cap
};

struct SquaresMaximum {
  double max_value = 0.0;
  std::vector<double> argmax;
  /// False when the maximiser needs zero entries, which the open constraint
  /// c_j > 0 excludes: the value is then a supremum, not a maximum.
  bool attained = true;
};

/// sup sum c_j^2 subject to sum c_j = A, 0 < c_j <= B:
/// B^2 floor(A/B) + (A - B floor(A/B))^2. Throws std::invalid_argument when
/// infeasible (A > N B) or when A, B are not positive.
SquaresMaximum max_sum_squares(const SquaresProblem& problem);

}  // namespace uniqlab
