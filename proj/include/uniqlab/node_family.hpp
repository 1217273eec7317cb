#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace uniqlab {

enum class NodeKind { power, log, custom };

/// A base zero sequence a_0 < a_1 < ... (power n^alpha, log(n+1), or a
/// user-supplied list).
class NodeFamily {
 public:
  static NodeFamily power(double alpha);
  static NodeFamily logarithmic();
  /// Throws std::invalid_argument unless the values are finite, nonnegative
  /// and strictly increasing.
  static NodeFamily custom(std::vector<double> values);

  /// Reads the custom node format: one strictly increasing positive real per
  /// line, '#' starts a comment, blank lines ignored.
  static NodeFamily from_file(const std::filesystem::path& path);

  /// Parses "power", "log" or "custom:FILE"; power uses the given exponent.
  static NodeFamily parse(const std::string& spec, double alpha);

  NodeKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }

  /// a_n; throws std::out_of_range past the end of a custom list.
  double operator()(std::size_t n) const;

  /// Number of available nodes; nullopt for the unbounded generators.
  std::optional<std::size_t> size() const noexcept;

  /// First min(count, size()) values.
  std::vector<double> take(std::size_t count) const;

  /// Consecutive-gap exponent eta: (1-alpha)/alpha for power nodes, +inf for
  /// log nodes, unknown for custom lists.
  std::optional<double> gap_exponent() const noexcept;

  std::string describe() const;

 private:
  NodeFamily(NodeKind kind, double alpha, std::vector<double> values)
      : kind_(kind), alpha_(alpha), values_(std::move(values)) {}

  NodeKind kind_;
  double alpha_;
  std::vector<double> values_;
};

}  // namespace uniqlab
