#include "uniqlab/node_family.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uniqlab {

NodeFamily NodeFamily::power(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument(fmt::format("power node exponent must lie in (0,1) (got {})", alpha));
  }
  return NodeFamily(NodeKind::power, alpha, {});
}

NodeFamily NodeFamily::logarithmic() { return NodeFamily(NodeKind::log, 0.0, {}); }

NodeFamily NodeFamily::custom(std::vector<double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw std::invalid_argument(fmt::format("custom node {} is not a finite nonnegative real ({})", i, values[i]));
    }
    if (i > 0 && !(values[i] > values[i - 1])) {
      throw std::invalid_argument(
          fmt::format("custom nodes must be strictly increasing (index {}: {} after {})", i, values[i], values[i - 1]));
    }
  }
  if (values.empty()) throw std::invalid_argument("custom node list is empty");
  return NodeFamily(NodeKind::custom, 0.0, std::move(values));
}

NodeFamily NodeFamily::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open node file '{}'", path.string()));

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::string extra;
    if (fields >> extra) {
      throw std::runtime_error(fmt::format("{}:{}: expected one value per line", path.string(), line_no));
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw std::runtime_error(fmt::format("{}:{}: not a real number: '{}'", path.string(), line_no, token));
    }
    if (!(v > 0.0)) throw std::runtime_error(fmt::format("{}:{}: node must be positive", path.string(), line_no));
    values.push_back(v);
  }
  return custom(std::move(values));
}

NodeFamily NodeFamily::parse(const std::string& spec, double alpha) {
  if (spec == "power") return power(alpha);
  if (spec == "log") return logarithmic();
  constexpr std::string_view prefix = "custom:";
  if (spec.rfind(prefix, 0) == 0) return from_file(spec.substr(prefix.size()));
  throw std::invalid_argument(fmt::format("unknown node kind '{}' (expected power|log|custom:FILE)", spec));
}

double NodeFamily::operator()(std::size_t n) const {
  switch (kind_) {
    case NodeKind::power:
      return std::pow(static_cast<double>(n), alpha_);
    case NodeKind::log:
      return std::log1p(static_cast<double>(n));
    case NodeKind::custom:
      if (n >= values_.size()) {
        throw std::out_of_range(fmt::format("custom node index {} beyond {} supplied values", n, values_.size()));
      }
      return values_[n];
  }
  return 0.0;
}

std::optional<std::size_t> NodeFamily::size() const noexcept {
  if (kind_ == NodeKind::custom) return values_.size();
  return std::nullopt;
}

std::vector<double> NodeFamily::take(std::size_t count) const {
  if (auto n = size()) count = std::min(count, *n);
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = (*this)(i);
  return out;
}

std::optional<double> NodeFamily::gap_exponent() const noexcept {
  switch (kind_) {
    case NodeKind::power:
      return (1.0 - alpha_) / alpha_;
    case NodeKind::log:
      return std::numeric_limits<double>::infinity();
    case NodeKind::custom:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string NodeFamily::describe() const {
  switch (kind_) {
    case NodeKind::power:
      return fmt::format("power({})", alpha_);
    case NodeKind::log:
      return "log";
    case NodeKind::custom:
      return fmt::format("custom[{}]", values_.size());
  }
  return "?";
}

}  // namespace uniqlab
