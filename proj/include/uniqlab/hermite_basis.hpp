#pragma once

// Hermite functions h_n(x) = 2^{1/4} (2^n n!)^{-1/2} H_n(sqrt(2 pi) x) e^{-pi x^2},
// orthonormal on L^2(R) and eigenfunctions of f^(xi) = \int f(x) e^{2 pi i x xi} dx
// with eigenvalue i^n.

#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace uniqlab {

enum class Parity { even, all };

struct BasisSpec {
  std::size_t size = 20;
  Parity parity = Parity::even;

  /// Hermite order of basis element k: 2k in even mode, k otherwise.
  std::size_t order(std::size_t k) const noexcept { return parity == Parity::even ? 2 * k : k; }
  std::size_t max_order() const noexcept { return size == 0 ? 0 : order(size - 1); }
  void validate() const;
  std::string describe() const;
};

Parity parse_parity(const std::string& text);

/// h_0(x), ..., h_{count-1}(x) times e^{(pi - gauss) x^2}: gauss = pi gives the
/// Hermite functions, gauss = 0 their polynomial factor alone. The recurrence
/// runs on the polynomial factor with a separate exponent so nothing overflows
/// before the Gaussian is applied.
std::vector<double> hermite_functions(double x, std::size_t count, double gauss = std::numbers::pi);

/// Transform eigenvalue i^n of h_n.
std::complex<double> hermite_eigenvalue(std::size_t n) noexcept;

/// Smallest x >= 0 beyond which |h_n(x)| < threshold for every n <= max_order.
double support_cutoff(std::size_t max_order, double threshold = 1e-300);

/// Values of basis element k of spec at x.
std::vector<double> basis_values(const BasisSpec& spec, double x);

}  // namespace uniqlab
