// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// tolerance and runtime budget.
//
//   uniqlab_acceptance [OUT_DIR] [--only N]

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "uniqlab/cli.hpp"
#include "uniqlab/counterexample_lab.hpp"
#include "uniqlab/decay_bounds.hpp"
#include "uniqlab/exponent_engine.hpp"
#include "uniqlab/uniqueness_tester.hpp"

using namespace uniqlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

fs::path g_out = "acceptance_out";

Outcome diagonal_threshold_criterion() {
  const double t = diagonal_threshold();
  const double closed = 1.0 - std::sqrt(2.0) / 2.0;
  const std::size_t n = 512;
  const auto centres = cell_centres(n);
  double last_in = -1.0;
  double first_out = 2.0;
  bool consistent = true;
  for (double a : centres) {
    const bool in = region_A_membership(ExponentPair(a, a)).in_region_A;
    consistent = consistent && (in == (a < t));
    if (in) last_in = std::max(last_in, a);
    if (!in) first_out = std::min(first_out, a);
  }
  const double crossing = 0.5 * (last_in + first_out);
  const double step = 1.0 / static_cast<double>(n);
  Outcome o;
  o.passed = std::abs(t - closed) <= 1e-12 && consistent && first_out - last_in <= step * (1 + 1e-12) &&
             std::abs(crossing - t) <= step;
  o.detail = fmt::format("threshold {:.13f} (|diff| {:.1e}), 512-grid flip between {:.6f} and {:.6f}", t,
                         std::abs(t - closed), last_in, first_out);
  return o;
}

Outcome recursion_criterion() {
  oracle::Gen gen(20240601);
  double worst_l = 0.0;
  double worst_omega_closed = 0.0;
  double worst_omega_fixed = 0.0;
  std::size_t closed_ok = 0;
  const std::size_t trials = 1000;
  for (std::size_t t = 0; t < trials; ++t) {
    double a = 0.0;
    double b = 0.0;
    do {
      a = gen.uniform(1e-3, 0.95);
      b = gen.uniform(1e-3, 0.95);
    } while (!(a + b < 0.95));
    const ExponentPair pair(a, b);
    const auto c = derive_constants(pair);
    const auto steps = static_cast<std::size_t>(std::ceil(std::log(1e-12) / std::log(c.gamma)));
    const double a0 = gen.uniform(0.0, 10.0);
    const double b0 = gen.uniform(0.0, 10.0);
    const auto trace = recursion_trace(pair, a0, b0, steps);
    worst_l = std::max({worst_l, std::abs(trace.back().a - a / (1 - a - b)), std::abs(trace.back().b - b / (1 - a - b))});

    const double omega = omega_for_full_range(pair);
    const auto wt = recursion_trace(pair, a0, b0, steps, omega);
    const auto closed = omega_limit_closed_form(pair, omega);
    const double dev = std::max(std::abs(wt.back().a - closed.a), std::abs(wt.back().b - closed.b));
    worst_omega_closed = std::max(worst_omega_closed, dev);
    if (dev <= 1e-10) ++closed_ok;
    const double fa = omega * a / (1 - a - b);
    const double fb = omega * b / (1 - a - b);
    worst_omega_fixed =
        std::max({worst_omega_fixed, std::abs(wt.back().a - fa), std::abs(wt.back().b - fb)});
  }
  Outcome o;
  const bool l_ok = worst_l <= 1e-10;
  const bool omega_ok = worst_omega_closed <= 1e-10;
  o.passed = l_ok && omega_ok;
  o.detail = fmt::format(
      "(L1,L2) max error {:.1e} [{}]; omega-trace vs closed-form limits: {}/{} within 1e-10, max error {:.3g} [{}]. "
      "The omega recursion's fixed point is (omega alpha, omega beta)/(1-alpha-beta), reached to {:.1e}; the "
      "closed-form limits carry an extra factor (1+(omega-1)beta) and coincide with it only at omega = 1",
      worst_l, l_ok ? "ok" : "FAIL", closed_ok, trials, worst_omega_closed, omega_ok ? "ok" : "FAIL",
      worst_omega_fixed);
  return o;
}

Outcome gamma_criterion() {
  double worst = 0.0;
  std::size_t cases = 0;
  for (double delta : {0.5, 1.0, 2.0, 3.0}) {
    for (double theta : {0.0, 0.1, 0.5}) {
      for (std::size_t k : {0u, 10u, 20u}) {
        const auto g = gamma_moment_bound(delta, theta, k);
        const double q = oracle::stretched_moment(delta, theta, k);
        worst = std::max(worst, std::abs(std::expm1(g.log_value - std::log(q))));
        ++cases;
      }
    }
  }
  return {worst <= 1e-6, fmt::format("{} cases, max relative error {:.2e} (tol 1e-6)", cases, worst)};
}

Outcome gap_criterion() {
  std::size_t checked = 0;
  std::size_t violations = 0;
  for (double a : {0.3, 0.5, 0.7}) {
    const auto nodes = NodeFamily::power(a);
    const double c_alpha = a * std::pow(2.0, 1.0 - a);
    for (std::size_t k = 1; k <= 50; ++k) {
      for (std::size_t m = k + 1; m <= 100000; ++m) {
        const auto z = derivative_zero_intervals(nodes, k, m);
        const double mvt = a * double(k + 1) * std::pow(double(m), a - 1);
        const double bound = c_alpha * double(k + 1) * std::pow(z.upper, -(1 - a) / a);
        const double slack = 1e-12 * bound;
        if (!(z.gap <= mvt + slack && mvt <= bound + slack)) ++violations;
        ++checked;
      }
    }
  }

  std::string ratios;
  bool sharp_ok = true;
  for (double a : {0.3, 0.5, 0.7}) {
    double worst = INFINITY;
    for (unsigned j = 6; j <= 14; ++j) {
      const auto s = build_sharpness_sequence(a, j, 30, false, 64);
      if (auto err = check_sharpness_constraints(s)) {
        sharp_ok = false;
        ratios += fmt::format(" [alpha={} j={}: {}]", a, j, *err);
      }
      for (std::size_t k = 1; k <= 30; ++k) worst = std::min(worst, sharpness_ratio(s, k));
    }
    sharp_ok = sharp_ok && worst >= 0.1;
    ratios += fmt::format(" alpha={}: c={:.4f}", a, worst);
  }
  return {violations == 0 && sharp_ok,
          fmt::format("gap bound: {} (k,m) pairs with m > k, {} violations; first-gap constants over j=6..14, "
                      "k<=30:{}",
                      checked, violations, ratios)};
}

Outcome squares_criterion() {
  oracle::Gen gen(5150);
  double worst_brute = 0.0;
  double worst_formula = 0.0;
  std::size_t problems = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      const double b = gen.uniform(0.05, 3.0);
      const double a = gen.uniform(1e-3, double(n) * b);
      const auto m = max_sum_squares({n, a, b});
      const double q = std::floor(a / b);
      const double r = a - b * q;
      worst_formula = std::max(worst_formula, std::abs(m.max_value - (b * b * q + r * r)) / std::max(1.0, m.max_value));
      worst_brute = std::max(worst_brute, std::abs(m.max_value - oracle::brute_force_squares(n, a, b)));
      ++problems;
    }
  }
  return {worst_brute <= 1e-3 && worst_formula <= 1e-12,
          fmt::format("{} problems, max |exact - brute force| {:.2e} (tol 1e-3), formula mismatch {:.1e}", problems,
                      worst_brute, worst_formula)};
}

Outcome cascade_criterion() {
  Outcome o;
  for (auto [a, b] : {std::pair{0.2, 0.2}, std::pair{0.1, 0.3}, std::pair{0.3, 0.1}}) {
    const CascadeConfig cfg{ExponentPair(a, b), 1.0, 1.0, true, {}};
    const auto fit = fit_cascade_slope(cfg, 2, 200);
    const double tau = derive_constants(cfg.pair).tau.value();
    const bool ok = fit.k_log_k <= tau + 0.1;
    o.passed = o.passed && ok;
    o.detail += fmt::format("{}({},{}): fit {:.4f} vs tau+0.1 = {:.4f}", o.detail.empty() ? "" : "; ", a, b,
                            fit.k_log_k, tau + 0.1);
  }
  return o;
}

Outcome basis_criterion() {
  const auto report = verify_basis({20, Parity::even});
  const bool basis_ok = report.max_deviation < 1e-8 && report.gram_error < 1e-10;

  oracle::Gen gen(777);
  double worst_svd = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto rows = static_cast<Eigen::Index>(gen.index(10, 200));
    const auto cols = static_cast<Eigen::Index>(gen.index(1, std::min<std::size_t>(50, rows)));
    const Eigen::MatrixXcd m = t % 2 == 0 ? gen.complex_matrix(rows, cols) : gen.matrix(rows, cols).cast<std::complex<double>>();
    const auto ref = oracle::gram_singular_values(m);
    const auto sv = singular_values(m);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      worst_svd = std::max(worst_svd, std::abs(sv[Eigen::Index(i)] - ref[i]) / ref.front());
    }
  }

  const auto op = build_operator(ExponentPair(0.3, 0.35), 80, 80, {12, Parity::all});
  std::size_t monotone_failures = 0;
  for (int t = 0; t < 100; ++t) {
    const Eigen::MatrixXcd m = t % 2 == 0 ? op.matrix : gen.complex_matrix(60, 12);
    std::vector<Eigen::Index> keep;
    const double p = gen.uniform(0.2, 0.9);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (gen.uniform(0, 1) < p) keep.push_back(i);
    Eigen::MatrixXcd sub(static_cast<Eigen::Index>(keep.size()), m.cols());
    for (std::size_t i = 0; i < keep.size(); ++i) sub.row(Eigen::Index(i)) = m.row(keep[i]);
    const double full = sigma_min(m).sigma_min;
    if (sigma_min(sub).sigma_min > full * (1 + 1e-12) + 1e-15) ++monotone_failures;
  }
  return {basis_ok && worst_svd <= 1e-8 && monotone_failures == 0,
          fmt::format("N=20 eigen deviation {:.1e}, Gram error {:.1e}; SVD vs Gram oracle max rel {:.1e} on 20 "
                      "instances; row deletion: {} of 100 trials increased sigma_min",
                      report.max_deviation, report.gram_error, worst_svd, monotone_failures)};
}

Outcome reconstruction_criterion() {
  Outcome o;
  double worst_res = 0.0;
  double worst_coef = 0.0;
  const auto even = build_operator(ExponentPair(0.25, 0.25), 100, 100, {10, Parity::even});
  oracle::Gen gen(4242);
  for (int t = 0; t < 10; ++t) {
    // Random combination of h_0, h_2, h_4, h_6 from the closed forms.
    std::vector<double> c(4);
    for (auto& v : c) v = gen.uniform(-1, 1);
    auto f = [&](double x) {
      double s = 0;
      for (std::size_t k = 0; k < 4; ++k) s += c[k] * oracle::hermite_function(2 * k, x);
      return std::complex<double>(s);
    };
    auto fh = [&](double x) {
      double s = 0;
      for (std::size_t k = 0; k < 4; ++k) s += (k % 2 == 0 ? 1.0 : -1.0) * c[k] * oracle::hermite_function(2 * k, x);
      return std::complex<double>(s);
    };
    const auto r = reconstruct(even, sample_witness(even, f, fh));
    worst_res = std::max(worst_res, r.residual);
    for (Eigen::Index k = 0; k < 10; ++k) {
      worst_coef = std::max(worst_coef, std::abs(r.coefficients[k] - (k < 4 ? c[std::size_t(k)] : 0.0)));
    }
  }

  // Log-node layout: f vanishes at +-log(n+1), f^ at +-n^alpha.
  const auto mixed = build_operator(NodeFamily::logarithmic(), NodeFamily::power(0.25), 100, 100, {7, Parity::all});
  double worst_mixed = 0.0;
  double worst_mixed_coef = 0.0;
  for (int t = 0; t < 10; ++t) {
    std::vector<double> c(7);
    for (auto& v : c) v = gen.uniform(-1, 1);
    auto f = [&](double x) {
      double s = 0;
      for (std::size_t n = 0; n < 7; ++n) s += c[n] * oracle::hermite_function(n, x);
      return std::complex<double>(s);
    };
    auto fh = [&](double x) {
      std::complex<double> s = 0;
      const std::complex<double> i(0, 1);
      for (std::size_t n = 0; n < 7; ++n) s += std::pow(i, static_cast<int>(n)) * c[n] * oracle::hermite_function(n, x);
      return s;
    };
    const auto r = reconstruct(mixed, sample_witness(mixed, f, fh));
    worst_mixed = std::max(worst_mixed, r.residual);
    for (Eigen::Index n = 0; n < 7; ++n) worst_mixed_coef = std::max(worst_mixed_coef, std::abs(r.coefficients[n] - c[std::size_t(n)]));
  }
  o.passed = worst_res < 1e-7 && worst_coef < 1e-7 && worst_mixed < 1e-7 && worst_mixed_coef < 1e-7;
  o.detail = fmt::format("power (0.25,0.25) N=10 M=100: residual {:.1e}, coefficient error {:.1e}; log/power mixed "
                         "N=7 M=100: residual {:.1e}, coefficient error {:.1e}",
                         worst_res, worst_coef, worst_mixed, worst_mixed_coef);
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism_criterion() {
  std::size_t compared = 0;
  std::vector<std::string> differing;
  for (const auto& name : cli::command_names()) {
    cli::RunConfig c;
    c.command = name;
    c.out = g_out / "determinism";
    const auto first = cli::run_command(c);
    std::vector<std::string> before;
    for (const auto& f : first.files) before.push_back(slurp(f));
    const auto second = cli::run_command(c);
    for (std::size_t i = 0; i < first.files.size(); ++i) {
      const auto ext = first.files[i].extension();
      if (ext != ".csv" && ext != ".json") continue;
      ++compared;
      if (i >= second.files.size() || before[i] != slurp(second.files[i])) {
        differing.push_back(first.files[i].filename().string());
      }
    }
  }
  std::string list;
  for (const auto& d : differing) list += " " + d;
  return {differing.empty(),
          fmt::format("{} CSV/JSON files over {} subcommands at default settings, {} differ{}", compared,
                      cli::command_names().size(), differing.size(), list)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else {
      g_out = arg;
    }
  }
  fs::create_directories(g_out);

  const std::vector<Criterion> criteria = {
      {1, "diagonal threshold", 1, diagonal_threshold_criterion},
      {2, "recursion limits", 5, recursion_criterion},
      {3, "Gamma-moment identity", 10, gamma_criterion},
      {4, "gap-bound soundness and sharpness", 30, gap_criterion},
      {5, "sum-of-squares extremal", 20, squares_criterion},
      {6, "moment cascade slope", 10, cascade_criterion},
      {7, "basis and operator correctness", 30, basis_criterion},
      {8, "reconstruction", 10, reconstruction_criterion},
      {9, "determinism", 5, determinism_criterion},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, fmt::format("error: {}", e.what())};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool passed = o.passed && in_time;
    if (!passed) ++failures;
    fmt::print("[{}] {}. {} ({:.2f} s, budget {:g} s{}): {}\n", passed ? "PASS" : "FAIL", c.id, c.title, seconds,
               c.budget_seconds, in_time ? "" : ", over budget", o.detail);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
