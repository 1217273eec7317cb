#include "uniqlab/counterexample_lab.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <mpfr.h>
#include <stdexcept>

namespace uniqlab {

namespace {

constexpr std::size_t kMaxPoints = std::size_t{1} << 22;

/// Owning mpfr_t with a fixed precision.
class Big {
 public:
  explicit Big(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Big(const Big& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Big& operator=(const Big& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Big(Big&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Big& operator=(Big&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Big() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

bool less(const Big& x, const Big& y) { return mpfr_less_p(x.get(), y.get()) != 0; }

}  // namespace

struct GapSequence::Impl {
  double alpha = 0.5;
  unsigned j = 1;
  std::size_t k_max = 1;
  bool blocked = false;
  std::size_t block_begin = 0;
  std::size_t block_end = 0;
  std::size_t window_end = 0;
  mpfr_prec_t prec = 53;
  std::vector<std::vector<Big>> levels;

  double log2_budget(std::size_t k) const {
    return -10.0 * static_cast<double>(k) * (1.0 - alpha) * static_cast<double>(j) / alpha;
  }
  bool is_start(std::size_t offset) const { return blocked ? offset % (k_max + 1) == 0 : offset == 0; }

  /// 2^log2_budget(k) at working precision.
  Big budget(std::size_t k) const {
    Big e(prec);
    mpfr_set_d(e.get(), -10.0 * static_cast<double>(k) * (1.0 - alpha), MPFR_RNDN);
    mpfr_mul_ui(e.get(), e.get(), j, MPFR_RNDN);
    mpfr_div_d(e.get(), e.get(), alpha, MPFR_RNDN);
    mpfr_exp2(e.get(), e.get(), MPFR_RNDN);
    return e;
  }
};

double GapSequence::alpha() const { return impl_->alpha; }
unsigned GapSequence::j() const { return impl_->j; }
std::size_t GapSequence::k_max() const { return impl_->k_max; }
bool GapSequence::blocked() const { return impl_->blocked; }
std::size_t GapSequence::block_begin() const { return impl_->block_begin; }
std::size_t GapSequence::block_end() const { return impl_->block_end; }
std::size_t GapSequence::window_end() const { return impl_->window_end; }
long GapSequence::precision_bits() const { return static_cast<long>(impl_->prec); }

std::size_t GapSequence::level_size(std::size_t k) const {
  if (k >= impl_->levels.size()) throw std::out_of_range(fmt::format("level {} not built", k));
  return impl_->levels[k].size();
}

double GapSequence::value(std::size_t k, std::size_t offset) const {
  if (offset >= level_size(k)) throw std::out_of_range(fmt::format("offset {} outside level {}", offset, k));
  return impl_->levels[k][offset].to_double();
}

double GapSequence::gap(std::size_t k, std::size_t offset) const {
  if (offset + 1 >= level_size(k)) throw std::out_of_range(fmt::format("gap: offset {} outside level {}", offset, k));
  const auto& level = impl_->levels[k];
  Big d(impl_->prec);
  mpfr_sub(d.get(), level[offset + 1].get(), level[offset].get(), MPFR_RNDN);
  return d.to_double();
}

double GapSequence::log2_budget(std::size_t k) const { return impl_->log2_budget(k); }

double GapSequence::gap_scale() const {
  return std::exp2(-(1.0 - impl_->alpha) * static_cast<double>(impl_->j) / impl_->alpha);
}

bool GapSequence::is_start(std::size_t offset) const { return impl_->is_start(offset); }

std::size_t dyadic_block_start(double alpha, unsigned j) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("dyadic_block_start: alpha must lie in (0,1)");
  const double target = std::exp2(static_cast<double>(j));
  double guess = std::ceil(std::exp2(static_cast<double>(j) / alpha));
  if (!(guess < 9.0e15)) throw std::overflow_error(fmt::format("dyadic block {} too large for alpha={}", j, alpha));
  auto n = static_cast<std::size_t>(guess);
  while (n > 0 && std::pow(static_cast<double>(n - 1), alpha) >= target) --n;
  while (std::pow(static_cast<double>(n), alpha) < target) ++n;
  return n;
}

GapSequence GapSequence::from_levels(double alpha, unsigned j, bool blocked, std::size_t block_begin,
                                     const std::vector<std::vector<double>>& levels) {
  if (levels.empty()) throw std::invalid_argument("from_levels: need level 0");
  auto impl = std::make_shared<Impl>();
  impl->alpha = alpha;
  impl->j = j;
  impl->k_max = levels.size() - 1;
  impl->blocked = blocked;
  impl->block_begin = block_begin;
  impl->block_end = dyadic_block_start(alpha, j + 1);
  impl->window_end = block_begin + levels[0].size();
  impl->prec = 64 + static_cast<mpfr_prec_t>(std::ceil(-impl->log2_budget(impl->k_max)));
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].size() + k != levels[0].size()) {
      throw std::invalid_argument(fmt::format("from_levels: level {} must hold {} values", k, levels[0].size() - k));
    }
    auto& out = impl->levels.emplace_back();
    for (double v : levels[k]) {
      Big b(impl->prec);
      mpfr_set_d(b.get(), v, MPFR_RNDN);
      out.push_back(std::move(b));
    }
  }
  return GapSequence(std::move(impl));
}

GapSequence build_sharpness_sequence(double alpha, unsigned j, std::size_t k_max, bool blocked,
                                     std::optional<std::size_t> window) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("sharpness: alpha must lie in (0,1)");
  if (j < 1) throw std::invalid_argument("sharpness: j must be at least 1");
  if (k_max < 1) throw std::invalid_argument("sharpness: k_max must be at least 1");
  if (!(static_cast<double>(k_max) < std::exp2(static_cast<double>(j) / alpha))) {
    throw std::invalid_argument(fmt::format("sharpness: need k_max < 2^(j/alpha) (k_max={}, j={})", k_max, j));
  }

  auto impl = std::make_shared<GapSequence::Impl>();
  impl->alpha = alpha;
  impl->j = j;
  impl->k_max = k_max;
  impl->blocked = blocked;
  impl->block_begin = dyadic_block_start(alpha, j);
  impl->block_end = dyadic_block_start(alpha, j + 1);

  const std::size_t width = impl->block_end - impl->block_begin;
  const std::size_t w = std::min(window.value_or(width), width);
  if (w < k_max + 2) {
    throw std::invalid_argument(
        fmt::format("sharpness: window of {} indices cannot hold level {} (need {})", w, k_max, k_max + 2));
  }
  if ((k_max + 1) * w > kMaxPoints) {
    throw std::invalid_argument(fmt::format(
        "sharpness: {} levels x {} indices exceeds the point budget; pass a smaller window", k_max + 1, w));
  }
  impl->window_end = impl->block_begin + w;

  // Room for the integer part, the smallest budget and one halving per level.
  impl->prec = static_cast<mpfr_prec_t>(std::ceil(-impl->log2_budget(k_max))) + static_cast<mpfr_prec_t>(j) +
               static_cast<mpfr_prec_t>(k_max) + 96;
  const mpfr_prec_t prec = impl->prec;

  Big exponent(prec);
  mpfr_set_d(exponent.get(), alpha, MPFR_RNDN);
  impl->levels.reserve(k_max + 1);
  auto& base = impl->levels.emplace_back();
  base.reserve(w);
  for (std::size_t i = 0; i < w; ++i) {
    Big v(prec);
    mpfr_set_ui(v.get(), static_cast<unsigned long>(impl->block_begin + i), MPFR_RNDN);
    mpfr_pow(v.get(), v.get(), exponent.get(), MPFR_RNDN);
    base.push_back(std::move(v));
  }

  Big lower(prec);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto& prev = impl->levels[k - 1];
    std::vector<Big> cur;
    cur.reserve(w - k);
    const Big eps = impl->budget(k);
    for (std::size_t i = 0; i < w - k; ++i) {
      const Big* upper = nullptr;
      if (impl->is_start(i)) {
        lower = prev[i];
        upper = &impl->levels[0][i + 1];
      } else {
        mpfr_sub(lower.get(), prev[i + 1].get(), eps.get(), MPFR_RNDU);
        if (less(lower, prev[i])) lower = prev[i];
        upper = &prev[i + 1];
      }
      if (!less(lower, *upper)) {
        throw std::runtime_error(
            fmt::format("sharpness: empty admissible interval at k={}, n={}", k, impl->block_begin + i));
      }
      Big mid(prec);
      mpfr_add(mid.get(), lower.get(), upper->get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
      cur.push_back(std::move(mid));
    }
    impl->levels.push_back(std::move(cur));
  }
  return GapSequence(std::move(impl));
}

std::optional<std::string> check_sharpness_constraints(const GapSequence& seq) {
  const GapSequence::Impl& s = seq.impl();
  const std::size_t n0 = s.block_begin;
  Big floor_value(s.prec);
  for (std::size_t k = 0; k < s.levels.size(); ++k) {
    const auto& cur = s.levels[k];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!less(cur[i], cur[i + 1])) return fmt::format("level {} not increasing at n={}", k, n0 + i);
    }
    if (k == 0) continue;
    const auto& prev = s.levels[k - 1];
    const Big eps = s.budget(k);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!less(prev[i], cur[i]) || !less(cur[i], prev[i + 1])) {
        return fmt::format("interlacing fails at k={}, n={}", k, n0 + i);
      }
      if (s.is_start(i)) {
        if (!less(cur[i], s.levels[0][i + 1])) {
          return fmt::format("first zero above (n+1)^alpha at k={}, n={}", k, n0 + i);
        }
        continue;
      }
      mpfr_sub(floor_value.get(), prev[i + 1].get(), eps.get(), MPFR_RNDU);
      if (!less(floor_value, cur[i])) return fmt::format("perturbation budget exceeded at k={}, n={}", k, n0 + i);
    }
  }
  return std::nullopt;
}

double sharpness_ratio(const GapSequence& seq, std::size_t k) {
  if (k < 1) throw std::invalid_argument("sharpness_ratio: k must be at least 1");
  return seq.first_gap(k) / (static_cast<double>(k) * seq.gap_scale());
}

AverageGapReport average_gap_report(const GapSequence& seq, std::size_t k) {
  const std::size_t size = seq.level_size(k);
  AverageGapReport r;
  r.constant = seq.alpha();
  r.bound = seq.alpha() * static_cast<double>(k + 1) * seq.gap_scale();
  r.gaps = size - 1;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < size; ++i) {
    const double g = seq.gap(k, i);
    sum += g;
    r.sum_squares += g * g;
    r.max_gap = std::max(r.max_gap, g);
  }
  r.mean_gap = r.gaps > 0 ? sum / static_cast<double>(r.gaps) : 0.0;
  return r;
}

SquaresMaximum max_sum_squares(const SquaresProblem& p) {
  if (p.N < 1) throw std::invalid_argument("max_sum_squares: N must be at least 1");
  if (!(p.A > 0.0) || !(p.B > 0.0) || !std::isfinite(p.A) || !std::isfinite(p.B)) {
    throw std::invalid_argument("max_sum_squares: A and B must be positive and finite");
  }
  const double nb = static_cast<double>(p.N) * p.B;
  if (p.A > nb * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
    throw std::invalid_argument(fmt::format("max_sum_squares: infeasible, A={} > N B={}", p.A, nb));
  }

  auto q = static_cast<std::size_t>(std::floor(p.A / p.B));
  double r = std::max(0.0, p.A - static_cast<double>(q) * p.B);
  if (q >= p.N) {
    q = p.N;
    r = 0.0;
  }

  SquaresMaximum m;
  m.argmax.assign(p.N, 0.0);
  std::fill_n(m.argmax.begin(), q, p.B);
  if (r > 0.0) m.argmax[q] = r;
  m.max_value = p.B * p.B * static_cast<double>(q) + r * r;
  m.attained = q + (r > 0.0 ? 1 : 0) == p.N;
  return m;
}

}  // namespace uniqlab
