#include "uniqlab/uniqueness_tester.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <utility>

#include "uniqlab/quadrature.hpp"

namespace uniqlab {

namespace {

constexpr std::size_t kSamplePoints = 25;
constexpr std::size_t kMaxHalvings = 8;
constexpr double kSettledChange = 1e-12;

struct TransformTable {
  // values[s][k]: trapezoid transform of element k at sample s
  std::vector<std::vector<std::complex<double>>> values;
};

TransformTable trapezoid_transforms(const BasisSpec& spec, const std::vector<double>& xis, double half_width,
                                    std::size_t points) {
  const double h = 2.0 * half_width / static_cast<double>(points - 1);
  TransformTable t;
  t.values.assign(xis.size(), std::vector<std::complex<double>>(spec.size));
  for (std::size_t q = 0; q < points; ++q) {
    const double x = -half_width + h * static_cast<double>(q);
    const auto psi = basis_values(spec, x);
    for (std::size_t s = 0; s < xis.size(); ++s) {
      const std::complex<double> phase = std::polar(h, 2.0 * std::numbers::pi * x * xis[s]);
      for (std::size_t k = 0; k < spec.size; ++k) t.values[s][k] += psi[k] * phase;
    }
  }
  return t;
}

double table_change(const TransformTable& a, const TransformTable& b) {
  double change = 0.0;
  for (std::size_t s = 0; s < a.values.size(); ++s) {
    for (std::size_t k = 0; k < a.values[s].size(); ++k) change = std::max(change, std::abs(a.values[s][k] - b.values[s][k]));
  }
  return change;
}

double gram_error(const BasisSpec& spec) {
  // sqrt(w) p_n(x) keeps the products inside double range for high orders.
  const std::size_t nodes = spec.max_order() + 2;
  const GaussRule rule = gauss_hermite(nodes, 2.0 * std::numbers::pi);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(nodes), static_cast<Eigen::Index>(spec.size));
  for (std::size_t i = 0; i < nodes; ++i) {
    const auto poly = hermite_functions(rule.nodes[i], spec.max_order() + 1, 0.0);
    const double sw = std::sqrt(rule.weights[i]);
    for (std::size_t k = 0; k < spec.size; ++k) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = sw * poly[spec.order(k)];
    }
  }
  const Eigen::MatrixXd gram = values.transpose() * values;
  const auto n = static_cast<Eigen::Index>(spec.size);
  return (gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

std::vector<double> side_nodes(const NodeFamily& family, std::size_t count, Parity parity) {
  std::vector<double> out;
  std::set<double> seen;
  auto push = [&](double v) {
    if (v == 0.0) v = 0.0;  // fold -0
    if (seen.insert(v).second) out.push_back(v);
  };
  for (double a : family.take(count)) {
    push(a);
    if (parity == Parity::all) push(-a);
  }
  return out;
}

void check_finite(const Eigen::MatrixXcd& m) {
  if (!m.allFinite()) throw std::invalid_argument("sigma_min: matrix has non-finite entries");
}

}  // namespace

BasisReport verify_basis(const BasisSpec& spec, std::size_t quad_points) {
  spec.validate();
  const double half_width = support_cutoff(spec.max_order(), 1e-18);
  const double turning = std::sqrt((2.0 * static_cast<double>(spec.max_order()) + 1.0) / (2.0 * std::numbers::pi));
  const double xi_max = turning + 0.5;

  std::vector<double> xis(kSamplePoints);
  for (std::size_t s = 0; s < kSamplePoints; ++s) {
    xis[s] = -xi_max + 2.0 * xi_max * static_cast<double>(s) / static_cast<double>(kSamplePoints - 1);
  }

  // Trapezoid aliasing vanishes once 1/h exceeds the spectral width plus |xi|.
  std::size_t points = quad_points;
  if (points == 0) points = static_cast<std::size_t>(std::ceil(2.0 * half_width * (half_width + xi_max + 1.0))) + 1;
  points = std::max<std::size_t>(points, 3);

  TransformTable table = trapezoid_transforms(spec, xis, half_width, points);
  double change = std::numeric_limits<double>::infinity();
  for (std::size_t halving = 0; halving < kMaxHalvings; ++halving) {
    const std::size_t finer = 2 * points - 1;
    TransformTable next = trapezoid_transforms(spec, xis, half_width, finer);
    change = table_change(table, next);
    table = std::move(next);
    points = finer;
    if (change < kSettledChange) break;
  }
  if (!(change < kSettledChange)) {
    throw std::runtime_error(fmt::format("verify_basis: transform quadrature did not settle ({}: change {:.3g} after {} points)",
                                         spec.describe(), change, points));
  }

  BasisReport r;
  r.spec = spec;
  r.quad_points = points;
  r.quadrature_change = change;
  r.eigenvalues.resize(spec.size);

  std::vector<std::vector<double>> direct(kSamplePoints);
  for (std::size_t s = 0; s < kSamplePoints; ++s) direct[s] = basis_values(spec, xis[s]);

  for (std::size_t k = 0; k < spec.size; ++k) {
    std::complex<double> num = 0.0;
    double den = 0.0;
    for (std::size_t s = 0; s < kSamplePoints; ++s) {
      num += table.values[s][k] * direct[s][k];
      den += direct[s][k] * direct[s][k];
    }
    const std::complex<double> measured = num / den;
    const std::complex<double> expected = hermite_eigenvalue(spec.order(k));
    r.eigenvalues[k] = measured;
    r.max_deviation = std::max(r.max_deviation, std::abs(measured - expected));
    for (std::size_t s = 0; s < kSamplePoints; ++s) {
      r.max_deviation = std::max(r.max_deviation, std::abs(table.values[s][k] - expected * direct[s][k]));
    }
  }

  r.gram_error = gram_error(spec);
  r.passed = r.max_deviation < kEigenvalueTolerance && r.gram_error < kGramTolerance;
  return r;
}

const BasisReport& ensure_basis_verified(const BasisSpec& spec) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, Parity>, BasisReport> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_pair(spec.size, spec.parity);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, verify_basis(spec)).first;
  const BasisReport& r = it->second;
  if (!r.passed) {
    throw std::runtime_error(fmt::format("basis {} failed verification: eigenvalue deviation {:.3g}, gram error {:.3g}",
                                         spec.describe(), r.max_deviation, r.gram_error));
  }
  return r;
}

SamplingOperator build_operator(const NodeFamily& direct, const NodeFamily& transform, std::size_t m_direct,
                                std::size_t m_transform, const BasisSpec& basis, const OperatorOptions& opts) {
  basis.validate();
  ensure_basis_verified(basis);

  SamplingOperator op;
  op.basis = basis;
  op.cutoff = support_cutoff(basis.max_order());
  op.normalized_rows = opts.normalize_rows;

  std::vector<std::vector<std::complex<double>>> rows;
  auto add_rows = [&](const std::vector<double>& nodes, bool transform_side, std::vector<double>& kept) {
    for (double x : nodes) {
      if (std::abs(x) > op.cutoff) {
        ++op.flagged_rows;
        continue;
      }
      const auto values = basis_values(basis, x);
      std::vector<std::complex<double>> row(basis.size);
      for (std::size_t k = 0; k < basis.size; ++k) {
        row[k] = transform_side ? hermite_eigenvalue(basis.order(k)) * values[k] : std::complex<double>(values[k]);
      }
      kept.push_back(x);
      rows.push_back(std::move(row));
    }
  };
  add_rows(side_nodes(direct, m_direct, basis.parity), false, op.direct_nodes);
  add_rows(side_nodes(transform, m_transform, basis.parity), true, op.transform_nodes);

  op.matrix.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(basis.size));
  op.row_scales.assign(rows.size(), 1.0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    double scale = 1.0;
    if (opts.normalize_rows) {
      double norm = 0.0;
      for (const auto& v : rows[r]) norm += std::norm(v);
      norm = std::sqrt(norm);
      if (norm > 0.0) scale = 1.0 / norm;
    }
    op.row_scales[r] = scale;
    for (std::size_t k = 0; k < basis.size; ++k) {
      op.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = scale * rows[r][k];
    }
  }
  if (!op.matrix.allFinite()) throw std::runtime_error("build_operator: non-finite operator entry");
  return op;
}

SamplingOperator build_operator(const ExponentPair& pair, std::size_t m_direct, std::size_t m_transform,
                                const BasisSpec& basis, const OperatorOptions& opts) {
  return build_operator(NodeFamily::power(pair.alpha()), NodeFamily::power(pair.beta()), m_direct, m_transform, basis,
                        opts);
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  check_finite(m);
  if (m.size() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues();
}

SingularValues sigma_min(const Eigen::MatrixXcd& m) {
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0) return {};
  SingularValues r;
  r.sigma_max = s[0];
  r.sigma_min = m.rows() < m.cols() ? 0.0 : s[s.size() - 1];
  return r;
}

SingularValues sigma_min(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) throw std::invalid_argument("sigma_min: matrix has non-finite entries");
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  SingularValues r;
  r.sigma_max = s[0];
  r.sigma_min = m.rows() < m.cols() ? 0.0 : s[s.size() - 1];
  return r;
}

SingularValues sigma_min(const SamplingOperator& op) { return sigma_min(op.matrix); }

RankDeficientError::RankDeficientError(double sigma_min, double sigma_max)
    : std::runtime_error(fmt::format("operator is rank deficient (sigma_min={:.6g}, sigma_max={:.6g}); "
                                     "reconstruction not certified",
                                     sigma_min, sigma_max)),
      sigma_min_(sigma_min),
      sigma_max_(sigma_max) {}

Reconstruction reconstruct(const SamplingOperator& op, const Eigen::VectorXcd& samples) {
  if (samples.size() != op.matrix.rows()) {
    throw std::invalid_argument(
        fmt::format("reconstruct: {} samples for an operator with {} rows", samples.size(), op.matrix.rows()));
  }
  check_finite(op.matrix);
  if (!samples.allFinite()) throw std::invalid_argument("reconstruct: non-finite sample");

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(op.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  Reconstruction r;
  r.sigma.sigma_max = s.size() > 0 ? s[0] : 0.0;
  r.sigma.sigma_min = op.matrix.rows() < op.matrix.cols() || s.size() == 0 ? 0.0 : s[s.size() - 1];
  if (!(r.sigma.sigma_max > 0.0) || r.sigma.sigma_min <= kRankTolerance * r.sigma.sigma_max) {
    throw RankDeficientError(r.sigma.sigma_min, r.sigma.sigma_max);
  }
  r.coefficients = svd.solve(samples);
  const double misfit = (op.matrix * r.coefficients - samples).norm();
  const double norm = samples.norm();
  r.residual = norm > 0.0 ? misfit / norm : misfit;
  return r;
}

Eigen::VectorXcd sample_witness(const SamplingOperator& op, const ComplexFunction& f, const ComplexFunction& g) {
  Eigen::VectorXcd s(op.matrix.rows());
  Eigen::Index r = 0;
  for (double x : op.direct_nodes) {
    s[r] = op.row_scales[static_cast<std::size_t>(r)] * f(x);
    ++r;
  }
  for (double xi : op.transform_nodes) {
    s[r] = op.row_scales[static_cast<std::size_t>(r)] * g(xi);
    ++r;
  }
  return s;
}

Eigen::VectorXcd sample_combination(const SamplingOperator& op, const Eigen::VectorXcd& coefficients) {
  if (static_cast<std::size_t>(coefficients.size()) != op.basis.size) {
    throw std::invalid_argument("sample_combination: coefficient count differs from basis size");
  }
  const BasisSpec spec = op.basis;
  auto f = [&](double x) {
    const auto v = basis_values(spec, x);
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < spec.size; ++k) sum += coefficients[static_cast<Eigen::Index>(k)] * v[k];
    return sum;
  };
  auto g = [&](double xi) {
    const auto v = basis_values(spec, xi);
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < spec.size; ++k) {
      sum += coefficients[static_cast<Eigen::Index>(k)] * hermite_eigenvalue(spec.order(k)) * v[k];
    }
    return sum;
  };
  return sample_witness(op, f, g);
}

SweepResult sweep(const std::vector<double>& alphas, const std::vector<double>& betas, std::size_t basis_size,
                  std::size_t m, Parity parity, const OperatorOptions& opts) {
  const BasisSpec spec{basis_size, parity};
  SweepResult result;
  result.alphas = alphas;
  result.betas = betas;
  result.cells.reserve(alphas.size() * betas.size());
  for (double a : alphas) {
    for (double b : betas) {
      const ExponentPair pair(a, b);
      const SamplingOperator op = build_operator(pair, m, m, spec, opts);
      const SingularValues sv = sigma_min(op);
      SweepCell cell;
      cell.alpha = a;
      cell.beta = b;
      cell.sigma_min = sv.sigma_min;
      cell.sigma_max = sv.sigma_max;
      cell.normalized = sv.sigma_max > 0.0 ? sv.sigma_min / sv.sigma_max : 0.0;
      cell.predicted = region_A_membership(pair).in_region_A;
      result.cells.push_back(cell);
    }
  }
  return result;
}

std::vector<double> cell_centres(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cell_centres: need at least one cell");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return out;
}

}  // namespace uniqlab
