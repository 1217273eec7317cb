#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <random>
#include <stdexcept>

#include "output.hpp"
#include "uniqlab/cli.hpp"
#include "uniqlab/counterexample_lab.hpp"
#include "uniqlab/decay_bounds.hpp"
#include "uniqlab/exponent_engine.hpp"
#include "uniqlab/node_family.hpp"
#include "uniqlab/quadrature.hpp"
#include "uniqlab/uniqueness_tester.hpp"

namespace uniqlab::cli {

namespace {

Json config_json(const RunConfig& c) {
  Json j;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["grid"] = c.grid ? Json(*c.grid) : Json(nullptr);
  j["basis"] = c.basis;
  j["nodes"] = c.nodes;
  j["k_max"] = c.k_max ? Json(*c.k_max) : Json(nullptr);
  j["omega"] = c.omega;
  j["nodes_kind"] = c.nodes_kind;
  j["parity"] = c.parity;
  j["normalize_rows"] = c.normalize_rows;
  j["out"] = c.out.generic_string();
  j["seed"] = c.seed;
  j["a0"] = c.a0;
  j["b0"] = c.b0;
  j["steps"] = c.steps;
  j["delta"] = c.delta;
  j["theta"] = c.theta;
  j["j"] = c.j;
  j["blocked"] = c.blocked;
  j["window"] = c.window;
  return j;
}

Json extended(const ExtendedReal& v) { return v.is_finite() ? json_real(v.value()) : Json("inf"); }

double extended_value(const ExtendedReal& v) { return v.value_or(std::numeric_limits<double>::infinity()); }

Json constants_json(const ExponentPair& pair) {
  const DerivedConstants c = derive_constants(pair);
  Json j;
  j["gamma"] = json_real(c.gamma);
  j["lambda"] = json_real(c.lambda);
  j["delta"] = json_real(c.delta);
  j["theta1"] = json_real(c.theta1);
  j["theta2"] = json_real(c.theta2);
  j["L1"] = extended(c.L1);
  j["L2"] = extended(c.L2);
  j["tau"] = extended(c.tau);
  j["epsilon_f"] = extended(c.epsilon_f);
  j["epsilon_fhat"] = extended(c.epsilon_fhat);
  j["epsilon_fhat_expanded"] = extended(c.epsilon_fhat_expanded);
  return j;
}

struct Files {
  std::filesystem::path dir;
  std::string stem;
  std::filesystem::path csv() const { return dir / (stem + ".csv"); }
  std::filesystem::path json() const { return dir / (stem + ".json"); }
  std::filesystem::path svg() const { return dir / (stem + ".svg"); }
};

Files files_for(const RunConfig& c, const std::string& stem) { return {prepare_output_dir(c.out), stem}; }

RunOutcome finish(const Files& f, const std::string& command, const RunConfig& c, const Json& body,
                  const Assertions& checks, std::vector<std::filesystem::path> written) {
  write_summary(f.json(), command, config_json(c), body, checks);
  written.push_back(f.json());
  return {std::move(written), checks.all_passed()};
}

/// Cell-edge segments separating cells where inside differs.
std::vector<Segment> boundary_segments(std::size_t nx, std::size_t ny,
                                       const std::function<bool(std::size_t, std::size_t)>& inside) {
  std::vector<Segment> out;
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const bool here = inside(ix, iy);
      if (ix + 1 < nx && inside(ix + 1, iy) != here) {
        out.push_back({double(ix + 1), double(iy), double(ix + 1), double(iy + 1)});
      }
      if (iy + 1 < ny && inside(ix, iy + 1) != here) {
        out.push_back({double(ix), double(iy + 1), double(ix + 1), double(iy + 1)});
      }
    }
  }
  return out;
}

double gaussian_log_moment(std::size_t k) {
  // \int |y|^k e^{-pi y^2} dy = Gamma((k+1)/2) / pi^{(k+1)/2}
  const double s = 0.5 * (static_cast<double>(k) + 1.0);
  return std::lgamma(s) - s * std::log(std::numbers::pi);
}

}  // namespace

RunOutcome run_region(const RunConfig& c) {
  const std::size_t n = c.grid.value_or(256);
  if (n < 2) throw std::invalid_argument("region: grid resolution must be at least 2");
  const Files f = files_for(c, "region");
  const std::vector<double> centres = cell_centres(n);

  std::vector<char> in_a(n * n);
  std::vector<char> hadamard(n * n);
  bool sum_condition = true;
  {
    CsvWriter csv(f.csv(), {"alpha", "beta", "in_A", "L1", "L2", "order_bound", "hadamard"});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t jb = 0; jb < n; ++jb) {
        const ExponentPair pair(centres[i], centres[jb]);
        const RegionReport r = region_A_membership(pair);
        const DerivedConstants k = derive_constants(pair);
        in_a[i * n + jb] = r.in_region_A;
        hadamard[i * n + jb] = r.hadamard_contradiction;
        if (r.in_region_A && !pair.sum_below_one()) sum_condition = false;
        csv.row({pair.alpha(), pair.beta(), r.in_region_A, extended_value(k.L1), extended_value(k.L2),
                 extended_value(r.order_bound), r.hadamard_contradiction});
      }
    }
  }

  Assertions checks;
  const double threshold = diagonal_threshold();
  checks.check("diagonal_threshold_closed_form", std::abs(threshold - (1.0 - std::sqrt(2.0) / 2.0)) < 1e-12,
               Json{{"value", threshold}});

  std::size_t flips = 0;
  std::size_t last_inside = 0;
  bool any_inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_a[i * n + i]) {
      last_inside = i;
      any_inside = true;
    }
    if (i + 1 < n && in_a[i * n + i] != in_a[(i + 1) * n + i + 1]) ++flips;
  }
  const double step = 1.0 / static_cast<double>(n);
  const double crossing = any_inside ? static_cast<double>(last_inside + 1) * step : 0.0;
  checks.check("diagonal_crossing_within_one_step",
               flips == 1 && in_a[0] && std::abs(crossing - threshold) <= step,
               Json{{"crossing", crossing}, {"threshold", threshold}, {"grid_step", step}, {"flips", flips}});

  bool symmetric = true;
  bool consistent = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jb = 0; jb < n; ++jb) {
      if (in_a[i * n + jb] != in_a[jb * n + i]) symmetric = false;
      if (in_a[i * n + jb] != hadamard[i * n + jb]) consistent = false;
    }
  }
  checks.check("swap_symmetry", symmetric);
  checks.check("membership_requires_sum_below_one", sum_condition);
  checks.check("membership_matches_hadamard_contradiction", consistent);

  Heatmap map;
  map.nx = n;
  map.ny = n;
  map.colour = [&](std::size_t ix, std::size_t iy) { return in_a[ix * n + iy] ? std::string("#1f4e9c") : std::string("#eeeeee"); };
  map.title = fmt::format("Region A ({}x{} cells)", n, n);
  map.x_label = "alpha";
  map.y_label = "beta";
  map.overlay.push_back({0.0, 0.0, double(n), double(n)});
  map.legend = {{"#1f4e9c", "in A"}, {"#eeeeee", "outside A"}};
  write_heatmap(f.svg(), map);

  std::size_t count = 0;
  for (char v : in_a) count += v ? 1 : 0;
  Json body;
  body["grid"] = n;
  body["cells_in_A"] = count;
  body["diagonal_threshold"] = threshold;
  body["diagonal_crossing"] = crossing;
  return finish(f, "region", c, body, checks, {f.csv(), f.svg()});
}

RunOutcome run_recursion(const RunConfig& c) {
  const ExponentPair pair(c.alpha, c.beta);
  const Files f = files_for(c, "recursion");
  const DerivedConstants k = derive_constants(pair);
  const bool converges = pair.sum_below_one();

  std::size_t steps = c.steps;
  if (steps == 0) {
    if (converges) {
      const double start = std::max({1.0, std::abs(c.a0), std::abs(c.b0)});
      steps = static_cast<std::size_t>(std::ceil(std::log(1e-12 / start) / std::log(k.gamma)));
    } else {
      steps = 50;
    }
  }

  const auto trace = recursion_trace(pair, c.a0, c.b0, steps, c.omega);
  const double inf = std::numeric_limits<double>::infinity();
  const RecursionStep limit = converges ? recursion_fixed_point(pair, c.omega) : RecursionStep{inf, inf};
  {
    CsvWriter csv(f.csv(), {"step", "a", "b", "limit_a", "limit_b", "error_a", "error_b"});
    for (std::size_t n = 0; n < trace.size(); ++n) {
      csv.row({static_cast<long long>(n), trace[n].a, trace[n].b, limit.a, limit.b, std::abs(trace[n].a - limit.a),
               std::abs(trace[n].b - limit.b)});
    }
  }

  Assertions checks;
  Json body;
  body["constants"] = constants_json(pair);
  body["steps"] = steps;
  if (converges) {
    const double err_a = std::abs(trace.back().a - limit.a);
    const double err_b = std::abs(trace.back().b - limit.b);
    checks.check("converged_to_fixed_point", err_a < 1e-10 && err_b < 1e-10,
                 Json{{"error_a", err_a}, {"error_b", err_b}, {"tolerance", 1e-10}});
    if (c.omega == 1.0) {
      double worst = 0.0;
      for (std::size_t n = 0; n + 1 < trace.size(); ++n) {
        const double pa = k.theta1 + k.gamma * trace[n].a;
        const double pb = k.theta2 + k.gamma * trace[n].b;
        worst = std::max({worst, std::abs(trace[n + 1].a - pa) / std::max(1.0, std::abs(pa)),
                          std::abs(trace[n + 1].b - pb) / std::max(1.0, std::abs(pb))});
      }
      checks.check("affine_law", worst < 1e-9, Json{{"max_relative_deviation", worst}});
    }
    body["fixed_point"] = Json{{"a", limit.a}, {"b", limit.b}};
    const RecursionStep closed = omega_limit_closed_form(pair, c.omega);
    body["closed_form_omega_limit"] = Json{{"a", json_real(closed.a)}, {"b", json_real(closed.b)},
                                       {"matches_trace", std::abs(closed.a - limit.a) < 1e-10 &&
                                                             std::abs(closed.b - limit.b) < 1e-10}};
  } else {
    body["fixed_point"] = "inf";
  }
  try {
    body["omega_full_range"] = omega_for_full_range(pair);
  } catch (const std::domain_error& e) {
    body["omega_full_range"] = e.what();
  }
  return finish(f, "recursion", c, body, checks, {f.csv()});
}

RunOutcome run_bounds(const RunConfig& c) {
  const NodeFamily nodes = NodeFamily::parse(c.nodes_kind, c.alpha);
  const Files f = files_for(c, "bounds");
  const std::size_t k_max = c.k_max.value_or(30);
  const std::size_t m = c.nodes;
  const double alpha = c.alpha;
  const double c_alpha = alpha * std::pow(2.0, 1.0 - alpha);

  Assertions checks;
  bool gaps_ok = true;
  std::size_t checked = 0;
  {
    CsvWriter csv(f.csv(), {"k", "m", "lower", "upper", "gap", "gap_bound", "gap_ok", "inversion_bound",
                            "cert_log_constant", "cert_exponent", "cert_valid_from"});
    for (std::size_t k = 0; k <= k_max; ++k) {
      const ZeroInterval z = derivative_zero_intervals(nodes, k, m);
      double bound = std::numeric_limits<double>::quiet_NaN();
      if (nodes.kind() == NodeKind::power && m > k) {
        bound = c_alpha * static_cast<double>(k + 1) * std::pow(z.upper, -(1.0 - alpha) / alpha);
      } else if (nodes.kind() == NodeKind::log) {
        bound = static_cast<double>((k + 1) * (k + 1)) / static_cast<double>(m + k + 1);
      }
      const bool ok = std::isnan(bound) || z.gap <= bound;
      if (!std::isnan(bound)) ++checked;
      gaps_ok = gaps_ok && ok;

      const MomentValue next{k + 1, gaussian_log_moment(k + 1)};
      const double inversion = inversion_gap_bound(next, z.gap, k);

      double cert_log = std::numeric_limits<double>::quiet_NaN();
      double cert_exp = std::numeric_limits<double>::quiet_NaN();
      double cert_from = std::numeric_limits<double>::quiet_NaN();
      std::optional<DecayCertificate> cert;
      const MomentValue moment{k, gaussian_log_moment(k)};
      if (nodes.kind() == NodeKind::power) {
        cert = power_decay_certificate(alpha, k, moment);
        cert_exp = std::get<PolynomialEnvelope>(cert->envelope).exponent;
      } else if (nodes.kind() == NodeKind::log && k >= 1) {
        cert = log_decay_certificate(k, moment);
        cert_exp = -std::get<ExpLinearEnvelope>(cert->envelope).rate;
      }
      if (cert) {
        cert_log = cert->log_constant;
        cert_from = cert->valid_from;
      }
      csv.row({static_cast<long long>(k), static_cast<long long>(m), z.lower, z.upper, z.gap, bound, ok, inversion,
               cert_log, cert_exp, cert_from});
    }
  }
  checks.check("gap_bound_holds", gaps_ok, Json{{"rows_checked", checked}, {"constant", c_alpha}});

  Json body;
  body["nodes"] = nodes.describe();
  body["gap_constant"] = c_alpha;
  return finish(f, "bounds", c, body, checks, {f.csv()});
}

RunOutcome run_moments(const RunConfig& c) {
  const Files f = files_for(c, "moments");
  const std::size_t k_max = c.k_max.value_or(200);
  const std::size_t k_gamma = std::min<std::size_t>(k_max, 20);

  Assertions checks;
  double worst = 0.0;
  {
    CsvWriter csv(f.csv(), {"k", "delta", "theta", "value", "log_value", "overflow", "quadrature", "relative_error"});
    for (std::size_t k = 0; k <= k_gamma; ++k) {
      const GammaMoment g = gamma_moment_bound(c.delta, c.theta, k);
      const double kd = static_cast<double>(k);
      const double p = 1.0 / c.delta;
      const double s = 1.0 - c.theta;
      const QuadratureResult q = integrate_real_line(
          [&](double x) {
            const double ax = std::abs(x);
            return ax == 0.0 ? (k == 0 ? 1.0 : 0.0) : std::exp(kd * std::log(ax) - s * std::pow(ax, p));
          },
          AdaptiveOptions{1e-12, 0.0, 20000});
      const double rel = std::abs(q.value - g.value) / g.value;
      worst = std::max(worst, rel);
      csv.row({static_cast<long long>(k), c.delta, c.theta, g.value, g.log_value, g.overflow, q.value, rel});
    }
  }
  checks.check("gamma_identity_matches_quadrature", worst < 1e-6, Json{{"max_relative_error", worst}});

  std::vector<std::filesystem::path> written{f.csv()};
  Json body;
  const ExponentPair pair(c.alpha, c.beta);
  if (pair.sum_below_one()) {
    const CascadeConfig cfg{pair, 1.0, 1.0, true, {}};
    const auto cascade_path = f.dir / "cascade.csv";
    {
      CsvWriter csv(cascade_path, {"k", "log_moment", "depth", "tau_k_log_k", "linear_coefficient"});
      for (std::size_t k = 2; k <= k_max; ++k) {
        const CascadeResult r = moment_cascade(cfg, k);
        const double kd = static_cast<double>(k);
        csv.row({static_cast<long long>(k), r.moment.log_value, static_cast<long long>(r.depth),
                 r.tau * kd * std::log(kd), r.linear_coefficient});
      }
    }
    written.push_back(cascade_path);
    const double tau = derive_constants(pair).tau.value();
    body["base_index"] = cascade_base_index(pair);
    body["tau"] = tau;
    if (k_max >= 4) {
      const SlopeFit fit = fit_cascade_slope(cfg, 2, k_max);
      body["fit"] = Json{{"k_log_k", fit.k_log_k}, {"linear", fit.linear}, {"intercept", fit.intercept}};
      checks.check("cascade_slope_within_tau", fit.k_log_k <= tau + 0.1,
                   Json{{"fitted", fit.k_log_k}, {"tau", tau}, {"allowance", 0.1}});
    }
  } else {
    body["cascade"] = "cascade diverges: alpha + beta >= 1";
  }
  return finish(f, "moments", c, body, checks, std::move(written));
}

RunOutcome run_sharpness(const RunConfig& c) {
  const Files f = files_for(c, "sharpness");
  const std::size_t k_max = c.k_max.value_or(30);
  const GapSequence seq = build_sharpness_sequence(c.alpha, c.j, k_max, c.blocked, c.window);
  const double alpha = c.alpha;
  const double budget1 = std::exp2(seq.log2_budget(1));

  Assertions checks;
  const auto violation = check_sharpness_constraints(seq);
  checks.check("construction_constraints", !violation, violation ? Json{{"violation", *violation}} : Json::object());

  double min_ratio = std::numeric_limits<double>::infinity();
  bool lower_ok = true;
  bool max_ok = true;
  bool squares_ok = true;
  {
    CsvWriter csv(f.csv(), {"k", "first_gap", "gap_scale", "ratio", "first_gap_lower", "mean_gap", "max_gap",
                            "bound", "sum_squares", "squares_cap"});
    for (std::size_t k = 1; k <= k_max; ++k) {
      const double first = seq.first_gap(k);
      const double ratio = sharpness_ratio(seq, k);
      const double kd = static_cast<double>(k);
      const double lower =
          alpha * kd * std::pow(static_cast<double>(seq.block_begin() + k + 1), alpha - 1.0) - budget1;
      const AverageGapReport avg = average_gap_report(seq, k);
      const double span = seq.value(k, seq.level_size(k) - 1) - seq.value(k, 0);
      const SquaresMaximum cap = max_sum_squares({avg.gaps, std::max(span, avg.mean_gap * double(avg.gaps)),
                                                  std::max(avg.bound, avg.max_gap)});
      min_ratio = std::min(min_ratio, ratio);
      lower_ok = lower_ok && first >= lower;
      max_ok = max_ok && avg.max_gap <= avg.bound;
      squares_ok = squares_ok && avg.sum_squares <= cap.max_value * (1.0 + 1e-9);
      csv.row({static_cast<long long>(k), first, seq.gap_scale(), ratio, lower, avg.mean_gap, avg.max_gap, avg.bound,
               avg.sum_squares, cap.max_value});
    }
  }
  checks.check("ratio_bounded_below", min_ratio >= 0.1, Json{{"min_ratio", min_ratio}, {"floor", 0.1}});
  checks.check("first_gap_lower_bound", lower_ok);
  checks.check("gaps_within_bound", max_ok, Json{{"constant", alpha}});
  checks.check("sum_squares_within_extremal", squares_ok);

  Json body;
  body["block_begin"] = seq.block_begin();
  body["block_end"] = seq.block_end();
  body["window_end"] = seq.window_end();
  body["precision_bits"] = seq.precision_bits();
  body["min_ratio"] = min_ratio;
  return finish(f, "sharpness", c, body, checks, {f.csv()});
}

RunOutcome run_sweep(const RunConfig& c) {
  const std::size_t n = c.grid.value_or(12);
  const Files f = files_for(c, "sweep");
  const std::vector<double> centres = cell_centres(n);
  const SweepResult r =
      sweep(centres, centres, c.basis, c.nodes, parse_parity(c.parity), OperatorOptions{c.normalize_rows});

  Assertions checks;
  bool ordered = true;
  bool predicted_ok = true;
  double asymmetry = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  {
    CsvWriter csv(f.csv(), {"alpha", "beta", "sigma_min", "sigma_max", "normalized", "predicted"});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t jb = 0; jb < n; ++jb) {
        const SweepCell& cell = r.at(i, jb);
        ordered = ordered && cell.sigma_min >= 0.0 && cell.sigma_min <= cell.sigma_max;
        predicted_ok = predicted_ok && cell.predicted == region_A_membership(ExponentPair(cell.alpha, cell.beta)).in_region_A;
        asymmetry = std::max(asymmetry, std::abs(cell.normalized - r.at(jb, i).normalized));
        if (cell.normalized > 0.0) {
          lo = std::min(lo, std::log10(cell.normalized));
          hi = std::max(hi, std::log10(cell.normalized));
        }
        csv.row({cell.alpha, cell.beta, cell.sigma_min, cell.sigma_max, cell.normalized, cell.predicted});
      }
    }
  }
  checks.check("sigma_ordering", ordered);
  checks.check("prediction_matches_region", predicted_ok);
  checks.check("swap_symmetry", asymmetry <= 1e-9, Json{{"max_difference", asymmetry}});

  Heatmap map;
  map.nx = n;
  map.ny = n;
  map.colour = [&](std::size_t ix, std::size_t iy) {
    const double v = r.at(ix, iy).normalized;
    if (!(v > 0.0)) return std::string("#000000");
    return ramp_colour(hi > lo ? (std::log10(v) - lo) / (hi - lo) : 1.0);
  };
  map.title = fmt::format("Empirical normalized sigma_min, N={}, M={} (log scale)", c.basis, c.nodes);
  map.x_label = "alpha";
  map.y_label = "beta";
  map.overlay = boundary_segments(n, n, [&](std::size_t ix, std::size_t iy) { return r.at(ix, iy).predicted; });
  map.legend = {{ramp_colour(0.0), fmt::format("1e{:.1f}", std::isfinite(lo) ? lo : 0.0)},
                {ramp_colour(1.0), fmt::format("1e{:.1f}", std::isfinite(hi) ? hi : 0.0)},
                {"#d62728", "region A boundary"}};
  write_heatmap(f.svg(), map);

  Json body;
  body["label"] = "empirical";
  body["grid"] = n;
  body["log10_normalized_range"] = Json{json_real(lo), json_real(hi)};
  return finish(f, "sweep", c, body, checks, {f.csv(), f.svg()});
}

RunOutcome run_reconstruct(const RunConfig& c) {
  const Files f = files_for(c, "reconstruct");
  const NodeFamily direct = NodeFamily::parse(c.nodes_kind, c.alpha);
  const NodeFamily transform = NodeFamily::power(ExponentPair(c.alpha, c.beta).beta());
  const BasisSpec spec{c.basis, parse_parity(c.parity)};
  const SamplingOperator op =
      build_operator(direct, transform, c.nodes, c.nodes, spec, OperatorOptions{c.normalize_rows});

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Eigen::VectorXcd truth = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(spec.size));
  for (std::size_t k = 0; k < std::min<std::size_t>(3, spec.size); ++k) truth[static_cast<Eigen::Index>(k)] = coeff(rng);
  const Eigen::VectorXcd samples = sample_combination(op, truth);

  Assertions checks;
  Json body;
  body["rows"] = op.rows();
  body["flagged_rows"] = op.flagged_rows;
  body["direct_nodes"] = direct.describe();
  body["transform_nodes"] = transform.describe();
  CsvWriter csv(f.csv(), {"k", "order", "true_re", "true_im", "recovered_re", "recovered_im", "abs_error"});
  try {
    const Reconstruction rec = reconstruct(op, samples);
    double worst = 0.0;
    for (std::size_t k = 0; k < spec.size; ++k) {
      const auto i = static_cast<Eigen::Index>(k);
      const double err = std::abs(rec.coefficients[i] - truth[i]);
      worst = std::max(worst, err);
      csv.row({static_cast<long long>(k), static_cast<long long>(spec.order(k)), truth[i].real(), truth[i].imag(),
               rec.coefficients[i].real(), rec.coefficients[i].imag(), err});
    }
    body["sigma_min"] = rec.sigma.sigma_min;
    body["sigma_max"] = rec.sigma.sigma_max;
    body["residual"] = rec.residual;
    body["max_coefficient_error"] = worst;
    checks.check("certified", true, Json{{"sigma_ratio", rec.sigma.sigma_min / rec.sigma.sigma_max}});
    checks.check("residual_below_1e-7", rec.residual < 1e-7, Json{{"residual", rec.residual}});
    checks.check("coefficients_recovered", worst < 1e-7, Json{{"max_error", worst}});
  } catch (const RankDeficientError& e) {
    body["sigma_min"] = e.sigma_min();
    body["sigma_max"] = e.sigma_max();
    checks.check("certified", false, Json{{"reason", e.what()}});
  }
  return finish(f, "reconstruct", c, body, checks, {f.csv()});
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"region", "recursion", "bounds", "moments",
                                                 "sharpness", "sweep", "reconstruct"};
  return names;
}

RunOutcome run_command(const RunConfig& c) {
  if (c.command == "region") return run_region(c);
  if (c.command == "recursion") return run_recursion(c);
  if (c.command == "bounds") return run_bounds(c);
  if (c.command == "moments") return run_moments(c);
  if (c.command == "sharpness") return run_sharpness(c);
  if (c.command == "sweep") return run_sweep(c);
  if (c.command == "reconstruct") return run_reconstruct(c);
  throw std::invalid_argument(fmt::format("unknown command '{}'", c.command));
}

}  // namespace uniqlab::cli
