#include "uniqlab/hermite_basis.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <stdexcept>

namespace uniqlab {

namespace {

constexpr double kRescaleAbove = 0x1p500;
constexpr double kRescaleLog = 500.0 * std::numbers::ln2;

}  // namespace

void BasisSpec::validate() const {
  if (size == 0) throw std::invalid_argument("basis size must be positive");
  if (max_order() > 2000) throw std::invalid_argument(fmt::format("basis order {} above supported 2000", max_order()));
}

std::string BasisSpec::describe() const {
  return fmt::format("hermite N={} parity={}", size, parity == Parity::even ? "even" : "all");
}

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::even;
  if (text == "all") return Parity::all;
  throw std::invalid_argument(fmt::format("unknown parity '{}' (expected even|all)", text));
}

std::vector<double> hermite_functions(double x, std::size_t count, double gauss) {
  std::vector<double> out(count);
  if (count == 0) return out;
  const double y = std::sqrt(2.0 * std::numbers::pi) * x;
  const double log_weight = -gauss * x * x;

  double log_scale = 0.0;
  double prev = 0.0;
  double cur = std::pow(2.0, 0.25);
  out[0] = cur * std::exp(log_weight);
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const double nd = static_cast<double>(n);
    const double next = std::sqrt(2.0 / (nd + 1.0)) * y * cur - std::sqrt(nd / (nd + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAbove) {
      cur /= kRescaleAbove;
      prev /= kRescaleAbove;
      log_scale += kRescaleLog;
    }
    out[n + 1] = cur * std::exp(log_scale + log_weight);
  }
  return out;
}

std::complex<double> hermite_eigenvalue(std::size_t n) noexcept {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double support_cutoff(std::size_t max_order, double threshold) {
  // Past the largest turning point every h_n decays monotonically.
  const double turning = std::sqrt((2.0 * static_cast<double>(max_order) + 1.0) / (2.0 * std::numbers::pi));
  const double step = 1.0 / 64.0;
  for (double x = turning;; x += step) {
    const auto v = hermite_functions(x, max_order + 1);
    const bool below = std::all_of(v.begin(), v.end(), [threshold](double h) { return std::abs(h) < threshold; });
    if (below) return x;
  }
}

std::vector<double> basis_values(const BasisSpec& spec, double x) {
  const auto all = hermite_functions(x, spec.max_order() + 1);
  if (spec.parity == Parity::all) return all;
  std::vector<double> out(spec.size);
  for (std::size_t k = 0; k < spec.size; ++k) out[k] = all[2 * k];
  return out;
}

}  // namespace uniqlab
