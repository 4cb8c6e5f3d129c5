#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "torusjet/error.hpp"
#include "torusjet/extend.hpp"
#include "torusjet/random.hpp"

using namespace torusjet;
using namespace torusjet::testing;

namespace {

LatticeFunction sine(int m) {
  return sample_function(LatticeSpec({m}),
                         [](std::span<const double> x) { return std::sin(2 * std::numbers::pi * x[0]); });
}

double weight_sum(const std::vector<PartitionWeight>& w) {
  double s = 0.0;
  for (const auto& p : w) s += p.weight;
  return s;
}

}  // namespace

TEST_SUITE("extend") {
  TEST_CASE("bump") {
    CHECK(bump_eval(0.0, 3) == 1.0);
    CHECK(bump_eval(1.0, 2) == 0.0);
    CHECK(bump_eval(-1.5, 2) == 0.0);
    CHECK(bump_eval(0.5, 1) == 0.5625);
  }

  TEST_CASE("partition weights") {
    const LatticeSpec spec({4});
    const double on_site[] = {0.5};
    const auto w0 = partition_weights(spec, on_site, 2);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].site == pt({2}));
    CHECK(w0[0].weight == 1.0);

    const double mid[] = {0.125};
    const auto w1 = partition_weights(spec, mid, 2);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0].weight == 0.5);
    CHECK(w1[1].weight == 0.5);
    CHECK(((w1[0].site == pt({0}) && w1[1].site == pt({1})) || (w1[0].site == pt({1}) && w1[1].site == pt({0}))));
  }

  TEST_CASE("partition weights are a partition of unity") {
    Rng rng(61);
    const LatticeSpec spec({3, 5});
    for (int t = 0; t < 100; ++t) {
      const double y[] = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
      const auto w = partition_weights(spec, y, 2);
      for (const auto& p : w) CHECK(p.weight >= 0.0);
      CHECK(std::abs(weight_sum(w) - 1.0) <= 1e-12);
    }
  }

  TEST_CASE("extension of a constant is constant") {
    const LatticeFunction c(LatticeSpec({3, 2}), std::vector<double>(6, 0.75));
    const Extension F(c, 1);
    Rng rng(62);
    for (int t = 0; t < 50; ++t) {
      const double y[] = {rng.uniform(-1, 2), rng.uniform(-1, 2)};
      CHECK(std::abs(F(y) - 0.75) <= 1e-14);
    }
  }

  TEST_CASE("extension interpolates and is periodic") {
    Rng rng(63);
    const LatticeSpec spec({4, 3});
    const auto f = random_function(spec, 5);
    const Extension F(f, 1);
    for (const auto& x : site_list(spec)) {
      const auto y = spec.real_coords(x);
      CHECK(std::abs(F(y) - f(x)) <= 1e-12);
    }
    for (int t = 0; t < 100; ++t) {
      const double y[] = {rng.uniform(0, 1), rng.uniform(0, 1)};
      const double z[] = {y[0] + static_cast<double>(rng.integer(-2, 2)), y[1] + static_cast<double>(rng.integer(-2, 2))};
      CHECK(std::abs(F(y) - F(z)) <= 1e-12);
    }
  }

  TEST_CASE("midpoint value of a sampled sine is close to the generator") {
    const Extension F(sine(8), 1);
    const double y[] = {1.0 / 16};
    CHECK(std::abs(F(y) - std::sin(2 * std::numbers::pi / 16)) < 0.05);
  }

  TEST_CASE("extension needs enough bump smoothness") {
    CHECK_THROWS_AS(Extension(alternating(), 2, ExtensionConfig{1, 4}), InvalidInput);
    CHECK(Extension(alternating(), 2).smoothness() == 3);
  }

  TEST_CASE("fine-grid Lipschitz estimates") {
    const LatticeSpec spec({4});
    const FieldOracle c = [](std::span<const double>) { return 2.0; };
    CHECK(fine_grid_lipschitz(c, 2, spec, 4) == 0.0);
    const FieldOracle half_sq = [](std::span<const double> x) { return x[0] * x[0] / 2; };
    for (int N : {2, 3, 4, 8})
      CHECK(fine_grid_lipschitz(half_sq, 2, spec, N, false) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(fine_grid_lipschitz(c, 1, spec, 1), InvalidInput);
  }

  TEST_CASE("nested fine grids never lower the estimate") {
    const Extension F(random_function(LatticeSpec({3}), 4), 1);
    const FieldOracle oracle = [&](std::span<const double> y) { return F(y); };
    for (int N : {2, 3}) {
      const double coarse = fine_grid_lipschitz(oracle, 2, F.function().spec(), N);
      const double fine = fine_grid_lipschitz(oracle, 2, F.function().spec(), 2 * N);
      CHECK(coarse <= fine * (1 + 1e-12));
    }
  }

  TEST_CASE("report") {
    const auto a = alternating();
    const auto r = theorem_a_report(a, 2);
    CHECK(r.seminorm == 32.0);
    CHECK(r.ratio >= 1.0 - 1e-9);
    CHECK(r.N == 4);
    CHECK(r.s == 2);
    CHECK(r.ratio == theorem_a_report(a, 2).ratio);
    const auto s10 = theorem_a_report(scaled(a, 10.0), 2);
    CHECK(std::abs(s10.ratio - r.ratio) <= 1e-12 * r.ratio);
    const double r4 = theorem_a_report(sine(4), 2).ratio, r8 = theorem_a_report(sine(8), 2).ratio;
    CHECK(std::max(r4, r8) / std::min(r4, r8) <= 2.0);
    const LatticeFunction c(LatticeSpec({4}), {1, 1, 1, 1});
    CHECK_THROWS_AS(theorem_a_report(c, 2), DegenerateInput);
  }
}
