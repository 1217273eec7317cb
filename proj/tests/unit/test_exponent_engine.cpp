#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "uniqlab/exponent_engine.hpp"

using namespace uniqlab;
using doctest::Approx;

TEST_SUITE("exponent_engine") {
  TEST_CASE("pair construction rejects exponents outside (0,1)") {
    CHECK_THROWS_AS(ExponentPair(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ExponentPair(0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ExponentPair(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ExponentPair(std::nan(""), 0.5), std::invalid_argument);
    const ExponentPair p(0.7, 0.1);
    CHECK(p.swapped().alpha() == 0.1);
    CHECK(p.ordered().alpha() == 0.1);
    CHECK(p.ordered().beta() == 0.7);
  }

  TEST_CASE("constants at (0.2, 0.2) against a hand computation") {
    const auto c = derive_constants(ExponentPair(0.2, 0.2));
    // a/(1-a) = 1/4 for a = 0.2.
    CHECK(c.gamma == Approx(1.0 / 16).epsilon(1e-15));
    CHECK(c.lambda == Approx(1.2 * 0.25).epsilon(1e-15));
    CHECK(c.delta == Approx(0.2 / 0.64).epsilon(1e-15));
    CHECK(c.theta1 == Approx(0.3125).epsilon(1e-15));
    CHECK(c.theta2 == Approx(0.3125).epsilon(1e-15));
    CHECK(c.L1.value() == Approx(1.0 / 3).epsilon(1e-15));
    CHECK(c.L2.value() == Approx(1.0 / 3).epsilon(1e-15));
    // (0.3 + 0.3125) / (15/16) = 0.65333...
    CHECK(c.tau.value() == Approx(0.6125 * 16 / 15).epsilon(1e-14));
    // (1 + 0.2 - 0.2 * 1.04) / 0.6 * 0.25
    CHECK(c.epsilon_fhat.value() == Approx(0.992 / 0.6 * 0.25).epsilon(1e-14));
    CHECK(c.epsilon_f.value() == Approx(c.epsilon_fhat.value()).epsilon(1e-14));
  }

  TEST_CASE("size condition: expanded and final forms agree") {
    // The expanded and final forms expand to the same numerator.
    oracle::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
      const double a = gen.uniform(0.01, 0.6);
      const double b = gen.uniform(0.01, 0.98 - a);
      const auto c = derive_constants(ExponentPair(a, b));
      CHECK(c.epsilon_fhat_expanded.value() == Approx(c.epsilon_fhat.value()).epsilon(1e-12));
    }
  }

  TEST_CASE("boundary alpha + beta = 1 flags the limits infinite") {
    const auto c = derive_constants(ExponentPair(0.5, 0.5));
    CHECK(c.gamma == Approx(1.0));
    CHECK(c.L1.is_infinite());
    CHECK(c.L2.is_infinite());
    CHECK(c.tau.is_infinite());
    CHECK(c.epsilon_fhat.is_infinite());
    CHECK_THROWS_AS((void)c.L1.value(), std::logic_error);
    CHECK(derive_constants(ExponentPair(0.7, 0.6)).L1.is_infinite());
  }

  TEST_CASE("small alpha limit") {
    const auto c = derive_constants(ExponentPair(1e-9, 0.4));
    CHECK(c.gamma < 1e-8);
    CHECK(c.L1.value() < 1e-8);
    CHECK(c.L2.value() == Approx(0.4 / 0.6).epsilon(1e-8));
  }

  TEST_CASE("gamma < 1 iff alpha + beta < 1 on a 100x100 grid") {
    for (int i = 1; i <= 100; ++i) {
      for (int j = 1; j <= 100; ++j) {
        const double a = i / 101.0;
        const double b = j / 101.0;
        if (std::abs(a + b - 1.0) < 1e-12) continue;
        const auto c = derive_constants(ExponentPair(a, b));
        CHECK((c.gamma < 1.0) == (a + b < 1.0));
      }
    }
  }

  TEST_CASE("fixed-point identity and epsilon condition") {
    oracle::Gen gen(7);
    for (int i = 0; i < 500; ++i) {
      const double a = gen.uniform(0.001, 0.98);
      const double b = gen.uniform(0.001, 0.999 - a);
      const auto c = derive_constants(ExponentPair(a, b));
      const double L1 = c.L1.value();
      const double L2 = c.L2.value();
      CHECK(std::abs(L1 - (c.theta1 + c.gamma * L1)) <= 1e-12 * std::max(1.0, L1));
      CHECK(std::abs(L2 - (c.theta2 + c.gamma * L2)) <= 1e-12 * std::max(1.0, L2));
      CHECK(c.epsilon_fhat.value() > L2);
      CHECK(c.epsilon_f.value() > L1);
    }
  }

  TEST_CASE("region examples") {
    const auto r = region_A_membership(ExponentPair(0.2, 0.2));
    CHECK(r.in_region_A);
    CHECK(r.sum_ok);
    CHECK(r.branch_alpha);
    CHECK(r.branch_beta);
    CHECK(r.order_bound.value() == Approx(1.5));
    CHECK(r.hadamard_contradiction);
    CHECK_FALSE(region_A_membership(ExponentPair(0.5, 0.5)).in_region_A);
    CHECK(region_A_membership(ExponentPair(0.5, 0.5)).order_bound.is_infinite());
    CHECK(region_A_membership(ExponentPair(0.29, 0.29)).in_region_A);
    CHECK_FALSE(region_A_membership(ExponentPair(0.30, 0.30)).in_region_A);
    // Off-diagonal: one branch suffices.
    const auto skew = region_A_membership(ExponentPair(0.05, 0.6));
    CHECK(skew.branch_beta == (0.6 < 1.0 - 0.05 / 0.35));
    CHECK(skew.branch_alpha == (0.05 < 1.0 - 0.6 / 0.35));
    CHECK(skew.in_region_A == (skew.branch_alpha || skew.branch_beta));
  }

  TEST_CASE("diagonal threshold") {
    const double t = diagonal_threshold();
    CHECK(std::abs(t - (1.0 - std::sqrt(2.0) / 2.0)) < 1e-15);
    CHECK(std::abs(2 * t * t - 4 * t + 1) < 1e-15);
    CHECK(t == Approx(0.2928932188).epsilon(1e-10));
    CHECK(region_A_membership(ExponentPair(t - 1e-9, t - 1e-9)).in_region_A);
    CHECK_FALSE(region_A_membership(ExponentPair(t + 1e-9, t + 1e-9)).in_region_A);
  }

  TEST_CASE("region symmetry and diagonal consistency on a grid") {
    for (int i = 1; i < 64; ++i) {
      for (int j = 1; j < 64; ++j) {
        const ExponentPair p(i / 64.0, j / 64.0);
        CHECK(region_A_membership(p).in_region_A == region_A_membership(p.swapped()).in_region_A);
      }
      const double a = i / 64.0;
      CHECK(region_A_membership(ExponentPair(a, a)).in_region_A == (a < diagonal_threshold()));
    }
  }

  TEST_CASE("hadamard contradiction uses the smaller exponent") {
    oracle::Gen gen(3);
    for (int i = 0; i < 300; ++i) {
      const double a = gen.uniform(0.01, 0.9);
      const double b = gen.uniform(0.01, 0.99 - a);
      const auto r = region_A_membership(ExponentPair(a, b));
      const double lo = std::min(a, b);
      const double hi = std::max(a, b);
      CHECK(r.hadamard_contradiction == (hi < 1.0 - lo / (1.0 - a - b)));
    }
  }

  TEST_CASE("recursion fixed point and affine law") {
    const ExponentPair p(0.2, 0.2);
    const auto c = derive_constants(p);
    const auto fixed = recursion_trace(p, c.L1.value(), c.L2.value(), 20);
    REQUIRE(fixed.size() == 21);
    for (const auto& s : fixed) {
      CHECK(s.a == Approx(1.0 / 3).epsilon(1e-14));
      CHECK(s.b == Approx(1.0 / 3).epsilon(1e-14));
    }
    const auto trace = recursion_trace(p, 10.0, 10.0, 50);
    for (std::size_t n = 0; n < trace.size(); ++n) {
      const double expected = std::pow(c.gamma, static_cast<double>(n)) * (10.0 - 1.0 / 3);
      const double err = std::abs(trace[n].a - 1.0 / 3);
      CHECK(std::abs(err - expected) <= 1e-9 * expected + 1e-15);
      if (n > 0 && trace[n - 1].a - 1.0 / 3 > 1e-9) CHECK(trace[n].a < trace[n - 1].a);
    }
    CHECK(std::abs(trace.back().a - 1.0 / 3) < 1e-10);
  }

  TEST_CASE("affine law on random pairs") {
    oracle::Gen gen(19);
    for (int i = 0; i < 100; ++i) {
      const double a = gen.uniform(0.01, 0.8);
      const double b = gen.uniform(0.01, 0.95 - a);
      const ExponentPair p(a, b);
      const auto c = derive_constants(p);
      const double a0 = gen.uniform(0.0, 20.0);
      const double b0 = gen.uniform(0.0, 20.0);
      const auto trace = recursion_trace(p, a0, b0, 50);
      for (std::size_t n = 1; n < trace.size(); ++n) {
        CHECK(trace[n].a == Approx(c.theta1 + c.gamma * trace[n - 1].a).epsilon(1e-12));
        CHECK(trace[n].b == Approx(c.theta2 + c.gamma * trace[n - 1].b).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("recursion decreases from above the fixed point") {
    oracle::Gen gen(23);
    for (int i = 0; i < 100; ++i) {
      const double a = gen.uniform(0.01, 0.8);
      const double b = gen.uniform(0.01, 0.95 - a);
      const ExponentPair p(a, b);
      const auto c = derive_constants(p);
      const auto trace = recursion_trace(p, c.L1.value() + gen.uniform(0.5, 5), c.L2.value() + gen.uniform(0.5, 5), 30);
      for (std::size_t n = 1; n < trace.size(); ++n) {
        if (trace[n - 1].a - c.L1.value() < 1e-9) break;
        CHECK(trace[n].a < trace[n - 1].a);
        CHECK(trace[n].b < trace[n - 1].b);
      }
    }
  }

  TEST_CASE("omega recursion: trace limit versus closed-form limit") {
    const ExponentPair p(0.2, 0.2);
    for (double omega : {0.5, 1.0, 2.0, 3.0}) {
      const auto trace = recursion_trace(p, 10, 10, 200, omega);
      const auto fp = recursion_fixed_point(p, omega);
      CHECK(trace.back().a == Approx(omega * 0.2 / 0.6).epsilon(1e-12));
      CHECK(std::abs(trace.back().a - fp.a) < 1e-10);
      CHECK(std::abs(trace.back().b - fp.b) < 1e-10);
      const auto closed = omega_limit_closed_form(p, omega);
      CHECK(closed.a == Approx(omega * 0.2 * (1 + (omega - 1) * 0.2) / 0.6).epsilon(1e-14));
      if (omega == 1.0) {
        CHECK(std::abs(closed.a - trace.back().a) < 1e-10);
      } else {
        CHECK(std::abs(closed.a - trace.back().a) > 1e-3);
      }
    }
  }

  TEST_CASE("omega root") {
    const double w = solve_omega(0.2, 0.2);
    CHECK(w == Approx((-0.8 + std::sqrt(0.64 + 0.48)) / 0.4).epsilon(1e-14));
    CHECK(std::abs(0.2 * w * w + 0.8 * w - 0.6) < 1e-12);
    CHECK(solve_omega(0.3, 0.0) == Approx(0.7).epsilon(1e-15));
    CHECK_THROWS_AS(solve_omega(0.6, 0.5), std::domain_error);
    oracle::Gen gen(5);
    for (int i = 0; i < 500; ++i) {
      const double a = gen.uniform(0.001, 0.99);
      const double b = gen.uniform(0.001, 0.999 - a);
      const ExponentPair p(a, b);
      const double om = omega_for_full_range(p);
      const auto o = p.ordered();
      CHECK(om > 0.0);
      CHECK(std::abs(om * (1 + (om - 1) * o.beta()) - (1 - o.alpha() - o.beta())) < 1e-12);
    }
  }

  TEST_CASE("analytic order") {
    CHECK(analytic_order_from_decay(2.0) == 2.0);
    CHECK(analytic_order_from_decay(3.0) == Approx(1.5).epsilon(1e-15));
    CHECK(analytic_order_from_decay(3.0) == Approx(1.0 / (1.0 - 1.0 / 3)).epsilon(1e-15));
    CHECK(std::abs(analytic_order_from_decay(1e10) - 1.0) < 1e-9);
    CHECK_THROWS_AS(analytic_order_from_decay(1.0), std::invalid_argument);
    double prev = analytic_order_from_decay(1.01);
    for (double A = 1.1; A < 100; A *= 1.3) {
      const double v = analytic_order_from_decay(A);
      CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("hadamard divergence") {
    CHECK(hadamard_divergence_check(1.0, 0.5));
    CHECK_FALSE(hadamard_divergence_check(3.0, 0.5));
    CHECK_FALSE(hadamard_divergence_check(2.0, 0.5));
    const auto c = derive_constants(ExponentPair(0.2, 0.2));
    const double order = 1.0 / (1.0 - c.L1.value());
    CHECK(order == Approx(1.5));
    CHECK(hadamard_divergence_check(order, 0.2) == region_A_membership(ExponentPair(0.2, 0.2)).in_region_A);
    CHECK_THROWS_AS(hadamard_divergence_check(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(hadamard_divergence_check(0.0, 0.5), std::invalid_argument);
  }

  TEST_CASE("generalized sequences") {
    const auto g = generalized_sequence_check(4, 4);
    CHECK(g.admissible);
    CHECK(g.product == 16);
    CHECK(g.equivalent_pair.alpha() == Approx(0.2));
    CHECK(g.equivalent_pair.beta() == Approx(0.2));
    CHECK_FALSE(generalized_sequence_check(1, 1).admissible);
    const auto h = generalized_sequence_check(9, 0.1);
    CHECK_FALSE(h.product_ok);
    CHECK_FALSE(h.admissible);
    CHECK_THROWS_AS(generalized_sequence_check(0, 1), std::invalid_argument);
  }
}
