#pragma once

// Finite sampling operators: basis coefficients -> samples of f at direct
// nodes and of f^ at transform nodes. Their smallest singular value is an
// empirical injectivity proxy at a given truncation.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "uniqlab/exponent_engine.hpp"
#include "uniqlab/hermite_basis.hpp"
#include "uniqlab/node_family.hpp"

namespace uniqlab {

struct BasisReport {
  BasisSpec spec;
  std::vector<std::complex<double>> eigenvalues;  // measured, per basis element
  double max_deviation = 0.0;  // max |h^_n - i^n h_n| and |lambda_n - i^n|
  double gram_error = 0.0;     // max |<h_m, h_n> - delta_mn|
  double quadrature_change = 0.0;  // last step-halving change of the transform
  std::size_t quad_points = 0;
  bool passed = false;
};

inline constexpr double kEigenvalueTolerance = 1e-8;
inline constexpr double kGramTolerance = 1e-10;

/// Transforms every basis element by trapezoid quadrature (positive exponent
/// convention), halving the step until it settles, and checks the Gram matrix
/// with a Gauss-Hermite rule. quad_points = 0 picks a size from the basis.
/// Throws std::runtime_error with the achieved change when the quadrature
/// does not settle.
BasisReport verify_basis(const BasisSpec& spec, std::size_t quad_points = 0);

/// Memoised verify_basis; throws std::runtime_error if the basis fails.
const BasisReport& ensure_basis_verified(const BasisSpec& spec);

struct OperatorOptions {
  bool normalize_rows = false;
};

struct SamplingOperator {
  Eigen::MatrixXcd matrix;  // direct rows first, then transform rows
  std::vector<double> direct_nodes;
  std::vector<double> transform_nodes;
  BasisSpec basis;
  std::size_t flagged_rows = 0;  // nodes beyond the numerical support
  double cutoff = 0.0;
  bool normalized_rows = false;
  std::vector<double> row_scales;  // 1 unless rows were normalised

  std::size_t rows() const { return static_cast<std::size_t>(matrix.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(matrix.cols()); }
};

/// Nodes +-a_n (n < m_direct) for f and +-b_n (n < m_transform) for f^. Even
/// parity keeps one row per |node|; exact duplicates within each side are
/// dropped.
SamplingOperator build_operator(const NodeFamily& direct, const NodeFamily& transform, std::size_t m_direct,
                                std::size_t m_transform, const BasisSpec& basis, const OperatorOptions& opts = {});

/// Power nodes n^alpha and n^beta.
SamplingOperator build_operator(const ExponentPair& pair, std::size_t m_direct, std::size_t m_transform,
                                const BasisSpec& basis, const OperatorOptions& opts = {});

struct SingularValues {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

/// Extreme singular values (two-sided Jacobi SVD). sigma_min = 0 when there
/// are fewer rows than columns. Throws std::invalid_argument on non-finite
/// entries.
SingularValues sigma_min(const Eigen::MatrixXcd& m);
SingularValues sigma_min(const Eigen::MatrixXd& m);
SingularValues sigma_min(const SamplingOperator& op);

/// All singular values, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m);

class RankDeficientError : public std::runtime_error {
 public:
  RankDeficientError(double sigma_min, double sigma_max);
  double sigma_min() const noexcept { return sigma_min_; }
  double sigma_max() const noexcept { return sigma_max_; }

 private:
  double sigma_min_;
  double sigma_max_;
};

inline constexpr double kRankTolerance = 1e-12;

struct Reconstruction {
  Eigen::VectorXcd coefficients;
  double residual = 0.0;  // ||M c - s|| / ||s|| (absolute when s = 0)
  SingularValues sigma;
};

/// Least-squares coefficients for samples ordered like the operator rows.
/// Throws RankDeficientError when sigma_min / sigma_max <= kRankTolerance.
Reconstruction reconstruct(const SamplingOperator& op, const Eigen::VectorXcd& samples);

using ComplexFunction = std::function<std::complex<double>(double)>;

/// Samples f at the direct nodes and g at the transform nodes (row order),
/// applying the operator's row scales.
Eigen::VectorXcd sample_witness(const SamplingOperator& op, const ComplexFunction& f, const ComplexFunction& g);

/// Samples of sum_k c_k basis_k and of its transform sum_k c_k i^{n_k} basis_k.
Eigen::VectorXcd sample_combination(const SamplingOperator& op, const Eigen::VectorXcd& coefficients);

struct SweepCell {
  double alpha = 0.0;
  double beta = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double normalized = 0.0;  // sigma_min / sigma_max
  bool predicted = false;   // region A membership
};

struct SweepResult {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<SweepCell> cells;  // alpha-major: cells[i * betas.size() + j]

  const SweepCell& at(std::size_t i, std::size_t j) const { return cells[i * betas.size() + j]; }
};

/// Operator sigma values over the alpha x beta grid with m nodes per side.
SweepResult sweep(const std::vector<double>& alphas, const std::vector<double>& betas, std::size_t basis_size,
                  std::size_t m, Parity parity = Parity::even, const OperatorOptions& opts = {});

/// n cell centres (i + 1/2)/n of (0, 1).
std::vector<double> cell_centres(std::size_t n);

}  // namespace uniqlab
