#pragma once

#include <stdexcept>

namespace uniqlab {

/// A real number that may be +infinity, kept as an explicit variant so that
/// an unbounded limit never leaks into arithmetic as inf/NaN.
class ExtendedReal {
 public:
  static constexpr ExtendedReal finite(double v) noexcept { return ExtendedReal(v, false); }
  static constexpr ExtendedReal infinite() noexcept { return ExtendedReal(0.0, true); }

  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_infinite() const noexcept { return infinite_; }

  double value() const {
    if (infinite_) throw std::logic_error("ExtendedReal::value() called on +infinity");
    return value_;
  }
  constexpr double value_or(double fallback) const noexcept { return infinite_ ? fallback : value_; }

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  constexpr ExtendedReal(double v, bool inf) noexcept : value_(v), infinite_(inf) {}

  double value_;
  bool infinite_;
};

}  // namespace uniqlab
