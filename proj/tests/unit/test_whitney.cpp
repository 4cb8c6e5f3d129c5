#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "torusjet/error.hpp"
#include "torusjet/random.hpp"
#include "torusjet/whitney.hpp"

using namespace torusjet;
using namespace torusjet::testing;

namespace {

LatticeFunction sine(int m) {
  return sample_function(LatticeSpec({m}),
                         [](std::span<const double> x) { return std::sin(2 * std::numbers::pi * x[0]); });
}

}  // namespace

TEST_SUITE("whitney") {
  TEST_CASE("jet steps") {
    const LatticeFunction c(LatticeSpec({3}), {5, 5, 5});
    const ResidualField g0(c, Jet::zero({0.0}, 0));
    const auto step0 = subtract_jet_step(g0, pt({0}), 0);
    for (long x = 0; x < 3; ++x) CHECK(step0.residual(pt({x})) == 0.0);

    const auto a = alternating();
    const auto step2 = subtract_jet_step(ResidualField(a, Jet::zero({0.0}, 2)), pt({0}), 2);
    CHECK(tensor_norm(step2.part) == 0.0);
    for (long x = 0; x < 4; ++x) CHECK(step2.residual(pt({x})) == a(pt({x})));

    const auto t = tent();
    const auto step1 = subtract_jet_step(ResidualField(t, Jet::zero({0.25}, 1)), pt({1}), 1);
    CHECK(step1.part.coeff(MultiIndex{0}) == 4.0);
  }

  TEST_CASE("jet step rejects a jet based elsewhere") {
    const auto t = tent();
    CHECK_THROWS_AS(subtract_jet_step(ResidualField(t, Jet::zero({0.0}, 1)), pt({1}), 1), InvalidInput);
    CHECK_THROWS_AS(subtract_jet_step(ResidualField(t, Jet::zero({0.25}, 0)), pt({1}), 1), InvalidInput);
  }

  TEST_CASE("built jets") {
    const LatticeFunction c(LatticeSpec({2, 2}), {-2, -2, -2, -2});
    const auto bc = build_jet(c, pt({1, 0}), 2);
    CHECK(bc.jet.parts[0].coeff(MultiIndex{}) == -2.0);
    CHECK(tensor_norm(bc.jet.parts[1]) == 0.0);
    CHECK(bc.residual(pt({0, 1})) == 0.0);

    const auto a = alternating();
    const auto ba = build_jet(a, pt({0}), 1);
    CHECK(tensor_norm(ba.jet.parts[0]) == 0.0);
    CHECK(tensor_norm(ba.jet.parts[1]) == 0.0);

    const auto t = tent();
    const auto bt = build_jet(t, pt({1}), 1);
    CHECK(bt.jet.base == RealVector{0.25});
    CHECK(bt.jet.parts[0].coeff(MultiIndex{}) == 1.0);
    CHECK(bt.jet.parts[1].coeff(MultiIndex{0}) == 4.0);
    const double y[] = {0.75};
    CHECK(poly_eval(bt.jet, y) == 1.0 + 4.0 * 0.5);
  }

  TEST_CASE("closed-form jets") {
    const auto t = tent();
    const auto j0 = closed_form_jet(t, pt({2}), 0);
    CHECK(j0.top_degree() == 0);
    CHECK(j0.parts[0].coeff(MultiIndex{}) == 2.0);
    const auto j1 = closed_form_jet(t, pt({1}), 1);
    CHECK(j1.parts[0].coeff(MultiIndex{}) == 1.0);
    CHECK(j1.parts[1].coeff(MultiIndex{0}) == 4.0);

    Rng rng(51);
    for (int i = 0; i < 20; ++i) {
      const LatticeSpec spec({static_cast<int>(rng.integer(2, 5)), static_cast<int>(rng.integer(2, 5))});
      const auto f = random_function(spec, rng.bits());
      const int K = static_cast<int>(rng.integer(0, 2));
      const auto x = pt({rng.integer(0, 4), rng.integer(0, 4)});
      const auto a = build_jet(f, x, K).jet, b = closed_form_jet(f, x, K);
      for (int s = 0; s <= K; ++s)
        CHECK(max_abs_difference(a.parts[static_cast<std::size_t>(s)], b.parts[static_cast<std::size_t>(s)]) <=
              1e-10);
    }
  }

  TEST_CASE("jet properties on random functions") {
    Rng rng(52);
    for (int i = 0; i < 20; ++i) {
      const LatticeSpec spec({static_cast<int>(rng.integer(2, 5)), static_cast<int>(rng.integer(2, 5))});
      const auto f = random_function(spec, rng.bits());
      const int K = static_cast<int>(rng.integer(0, 2));
      const auto x = pt({rng.integer(0, 4), rng.integer(0, 4)});
      const auto b = build_jet(f, x, K, default_balls(x, spec));
      CHECK(poly_eval(b.jet, spec.real_coords(x)) == f(x));
      for (const auto& y : site_list(spec))
        CHECK(std::abs(f(y) - poly_eval(b.jet, spec.real_coords(y)) - b.residual(y)) <= 1e-12);
      CHECK(b.diagnostics.max_theta_residual <= 1e-10);
      CHECK(std::abs(b.diagnostics.top_seminorm_f - b.diagnostics.top_seminorm_g) <=
            1e-12 * (1 + b.diagnostics.top_seminorm_f));
      CHECK(b.diagnostics.radius_bounds.size() == 3 * static_cast<std::size_t>(K + 1));
    }
  }

  TEST_CASE("nearest image") {
    const LatticeSpec spec({4});
    CHECK(nearest_image(pt({3}), pt({0}), spec) == pt({-1}));
    CHECK(nearest_image(pt({1}), pt({0}), spec) == pt({1}));
    CHECK(nearest_image(pt({2}), pt({0}), spec) == pt({-2}));
    CHECK(nearest_image(pt({0}), pt({9}), spec) == pt({8}));
  }

  TEST_CASE("constant input") {
    const LatticeFunction c(LatticeSpec({3, 2}), std::vector<double>(6, -1.5));
    const auto r = whitney_check(c, 2);
    CHECK(r.condition1_exact);
    CHECK(r.m1 == 0.0);
    CHECK(r.m2 == 1.5);
    CHECK(r.m3 == 0.0);
    CHECK_FALSE(r.ratio);
    CHECK_THROWS_AS(constant_report(c, 2), DegenerateInput);
  }

  TEST_CASE("alternating input against an exhaustive oracle") {
    const auto a = alternating();
    const auto r = whitney_check(a, 2);
    // jets are p_x(y) = f(x) + D f(x) (y - x); Θ¹ vanishes everywhere so the
    // pair quotient is |f(x) - f(y)| / |x - y|^2 (m = 0) or 0 (m = 1)
    double best = 0.0;
    for (long x = 0; x < 4; ++x)
      for (long y = x - 2; y <= x + 2; ++y) {
        if (y == x) continue;
        const double dist = std::abs(static_cast<double>(y - x)) / 4;
        best = std::max(best, std::abs(a(pt({x})) - a(pt({y}))) / (dist * dist));
      }
    CHECK(r.m3 == best);
    CHECK(r.m2 == 1.0);
    CHECK(r.worst_condition == 3);
    REQUIRE(r.ratio);
    CHECK(*r.ratio == best / 32.0);
    CHECK(constant_report(a, 2) == *r.ratio);
  }

  TEST_CASE("constant report is scale invariant and stable under refinement") {
    const auto a = random_function(LatticeSpec({4, 3}), 9);
    const double base = constant_report(a, 2);
    for (double lambda : {0.1, 10.0})
      CHECK(std::abs(constant_report(scaled(a, lambda), 2) - base) <= 1e-12 * base);
    const double r8 = constant_report(sine(8), 2), r16 = constant_report(sine(16), 2);
    CHECK(r16 / r8 <= 2.0);
    CHECK(r8 / r16 <= 2.0);
  }

  TEST_CASE("rows cover every quotient") {
    std::vector<WhitneyRow> rows;
    const auto t = tent();
    const auto r = whitney_check(t, 2, JetBuilder::recursive, &rows);
    // per site: one condition-1 row, 1 + 1 condition-2 rows, 3 * 2 condition-3 rows
    CHECK(rows.size() == 4 * (1 + 2 + 6));
    double m3 = 0.0;
    for (const auto& row : rows)
      if (row.condition == 3) m3 = std::max(m3, row.quotient);
    CHECK(m3 == r.m3);
  }
}
