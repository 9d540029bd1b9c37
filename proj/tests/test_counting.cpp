#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tcore/counting.hpp"

using namespace tcore;

namespace {

BigInt brute_force_cores(Box b, int t, bool frame_only = false) {
  BigInt n = 0;
  for (const auto& p : BoxPartitions(b)) {
    if (frame_only && (p.length() != b.rows || p.largest() != b.cols)) continue;
    if (is_t_core(p, t)) n += 1;
  }
  return n;
}

}  // namespace

TEST_CASE("count_t_cores examples") {
  CHECK(count_t_cores({2, 2}, 3) == 4);
  CHECK(count_t_cores({4, 0}, 3) == 1);
  CHECK(count_t_cores({0, 7}, 2) == 1);
  CHECK(count_t_cores({4, 5}, 3) == 12);
  CHECK_THROWS_AS(count_t_cores({2, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_t_cores({-1, 2}, 3), std::invalid_argument);
}

TEST_CASE("count_t_cores matches brute force") {
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; s <= 6; ++s)
      for (int t = 2; t <= 6; ++t) {
        CHECK(count_t_cores({r, s}, t) == brute_force_cores({r, s}, t));
        CHECK(count_t_cores_inclusion_exclusion({r, s}, t) == count_t_cores({r, s}, t));
      }
}

TEST_CASE("exact frame counts") {
  CHECK(count_t_cores_exact_frame({4, 5}, 3) == 1);
  CHECK(count_t_cores_exact_frame({1, 1}, 2) == 1);
  CHECK(count_t_cores_exact_frame({0, 0}, 3) == 1);
  CHECK(count_t_cores_exact_frame({3, 0}, 3) == 0);
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; s <= 6; ++s)
      for (int t = 2; t <= 5; ++t) {
        CHECK(count_t_cores_exact_frame({r, s}, t) == brute_force_cores({r, s}, t, true));
        if (r + s > 0 && (r + s) % t == 1 % t) CHECK(count_t_cores_exact_frame({r, s}, t) == 0);
      }
}

TEST_CASE("large-s counts and saturation") {
  CHECK(count_t_cores_large_s(2, 3) == 6);
  CHECK(count_t_cores_large_s(0, 5) == 1);
  for (int r = 0; r <= 5; ++r) {
    CHECK(count_t_cores_large_s(r, 2) == r + 1);
    CHECK(brute_force_cores({r, 2 * r}, 2) == r + 1);
  }
  for (int r = 0; r <= 6; ++r)
    for (int t = 2; t <= 5; ++t) {
      for (int s = r * t; s <= r * t + 3; ++s) CHECK(count_t_cores({r, s}, t) == count_t_cores_large_s(r, t));
      if (r >= 1) CHECK(count_t_cores({r, r * t - t}, t) <= count_t_cores_large_s(r, t));
    }
}

TEST_CASE("r <-> s symmetry") {
  for (int r = 0; r <= 12; ++r)
    for (int s = 0; s <= 12; ++s)
      for (int t = 2; t <= 6; ++t) CHECK(count_t_cores({r, s}, t) == count_t_cores({s, r}, t));
}

TEST_CASE("asymptotic constant") {
  CHECK(asymptotic_constant({2, 1.0}) == doctest::Approx(2.0));
  CHECK(asymptotic_constant({3, 1.0}) == doctest::Approx(3.0));
  CHECK(asymptotic_constant({4, 1.0}) == doctest::Approx(16.0 / 3.0));
  for (int t = 2; t <= 7; ++t) {
    double fact = 1.0;
    for (int k = 2; k < t; ++k) fact *= k;
    CHECK(asymptotic_constant({t, static_cast<double>(t - 1)}) == doctest::Approx(std::pow(t, t - 1) / fact));
    CHECK(asymptotic_constant({t, 0.5}) == doctest::Approx(std::pow(0.5, t - 1) * asymptotic_constant({t, 2.0})));
  }
  CHECK_THROWS_AS(asymptotic_constant({3, 0.0}), std::invalid_argument);
}

TEST_CASE("alternating-sum scaling approaches A(t, kappa)") {
  for (const auto& [t, kappa] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{3, 2}}) {
    double previous = 1e300;
    for (int r : {500, 1000, 2000}) {
      const BigInt count = count_t_cores_inclusion_exclusion({r, kappa * r}, t);
      const double scaled = count.get_d() * std::pow(static_cast<double>(t) / r, t - 1);
      const double a = asymptotic_constant({t, static_cast<double>(kappa)});
      const double err = std::fabs(scaled - a);
      CHECK(err < previous);
      previous = err;
      if (r == 2000) CHECK(err / a < 0.02);
    }
  }
}

TEST_CASE("goddard integral") {
  for (int t = 3; t <= 8; ++t) {
    const auto q = goddard_integral(t, 1e-8);
    CHECK(std::fabs(q.value - asymptotic_constant({t, 1.0})) < 1e-6);
    CHECK(q.tail_bound <= 0.5e-8);
  }
  const auto serial = goddard_integral(5, 1e-8, Execution::serial);
  const auto parallel = goddard_integral(5, 1e-8, Execution::parallel);
  CHECK(serial.value == parallel.value);
  CHECK(std::fabs(goddard_integral(2, 1e-5).value - 2.0) < 1e-4);
  CHECK_THROWS_AS(goddard_integral(3, 0.0), std::invalid_argument);
}

TEST_CASE("swanepoel identity") {
  const auto zero = swanepoel_check(2, std::numbers::pi, 1000);
  CHECK(std::fabs(zero.lhs) < 1e-12);
  CHECK(std::fabs(zero.rhs) < 1e-12);
  const auto a = swanepoel_check(3, std::numbers::pi / 6, 1'000'000);
  CHECK(std::fabs(a.lhs - a.rhs) < 1e-6);
  const auto b = swanepoel_check(4, std::numbers::pi / 4, 1'000'000);
  CHECK(std::fabs(b.lhs - b.rhs) < 1e-6);
  CHECK_THROWS_AS(swanepoel_check(3, 3.0, 10), std::invalid_argument);
}
