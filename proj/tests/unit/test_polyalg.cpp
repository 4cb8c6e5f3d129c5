#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "torusjet/error.hpp"
#include "torusjet/random.hpp"

using namespace torusjet;
using namespace torusjet::testing;

namespace {

SymTensor random_tensor(Rng& rng, int k, int d) {
  SymTensor t(k, d);
  for (const auto& idx : t.sorted_indices()) t.set(idx, rng.uniform(-1.0, 1.0));
  return t;
}

}  // namespace

TEST_SUITE("polyalg") {
  TEST_CASE("tensor evaluation") {
    SymTensor xi(2, 1);
    xi.set(MultiIndex{0, 0}, 1.0);
    const std::vector<RealVector> args{{2.0}, {3.0}};
    CHECK(tensor_eval(xi, args) == 6.0);
    const std::vector<RealVector> zero{{2.0}, {0.0}};
    CHECK(tensor_eval(xi, zero) == 0.0);
    SymTensor lin(1, 2);
    lin.set(MultiIndex{0}, 3.0);
    lin.set(MultiIndex{1}, -2.0);
    const std::vector<RealVector> xy{{5.0, 7.0}};
    CHECK(tensor_eval(lin, xy) == 3.0 * 5.0 - 2.0 * 7.0);
  }

  TEST_CASE("diagonal evaluation") {
    SymTensor sq(2, 1);
    sq.set(MultiIndex{0, 0}, 1.0);
    const double three[] = {3.0};
    CHECK(diag_eval(sq, three) == 9.0);
    const double any[] = {4.0, -1.0};
    CHECK(diag_eval(SymTensor::constant(2.5, 2), any) == 2.5);
    SymTensor circle(2, 2);
    circle.set(MultiIndex{0, 0}, 1.0);
    circle.set(MultiIndex{1, 1}, 1.0);
    const double pt12[] = {1.0, 2.0};
    CHECK(diag_eval(circle, pt12) == 5.0);
  }

  TEST_CASE("symmetric storage ignores index order") {
    Rng rng(31);
    const auto xi = random_tensor(rng, 3, 3);
    CHECK(xi.coeff(MultiIndex{2, 0, 1}) == xi.coeff(MultiIndex{0, 1, 2}));
    const std::vector<RealVector> a{{1, 2, 3}, {-1, 0, 2}, {0.5, 0.5, -4}};
    const std::vector<RealVector> b{a[2], a[0], a[1]};
    CHECK(tensor_eval(xi, a) == doctest::Approx(tensor_eval(xi, b)).epsilon(1e-14));
  }

  TEST_CASE("diag inverse") {
    const RealOracle sq = [](std::span<const double> x) { return x[0] * x[0]; };
    CHECK(diag_inverse(sq, 2, 1).coeff(MultiIndex{0, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    const RealOracle zero = [](std::span<const double>) { return 0.0; };
    CHECK(tensor_norm(diag_inverse(zero, 2, 2)) == 0.0);
  }

  TEST_CASE("diag inverse undoes diag on random tensors") {
    Rng rng(32);
    for (int t = 0; t < 50; ++t) {
      const int k = static_cast<int>(rng.integer(0, 3));
      const int d = static_cast<int>(rng.integer(1, 3));
      const auto xi = random_tensor(rng, k, d);
      const RealOracle p = [&](std::span<const double> x) { return diag_eval(xi, x); };
      CHECK(max_abs_difference(diag_inverse(p, k, d), xi) <= 1e-10);
    }
  }

  TEST_CASE("differences of diag equal k! times the tensor") {
    Rng rng(33);
    for (int t = 0; t < 50; ++t) {
      const int k = static_cast<int>(rng.integer(1, 3));
      const int d = static_cast<int>(rng.integer(1, 3));
      const auto xi = random_tensor(rng, k, d);
      std::vector<RealVector> u(static_cast<std::size_t>(k), RealVector(static_cast<std::size_t>(d)));
      for (auto& v : u)
        for (auto& c : v) c = rng.uniform(-1.0, 1.0);
      const RealOracle p = [&](std::span<const double> x) { return diag_eval(xi, x); };
      const double expect = factorial(k) * tensor_eval(xi, u);
      for (int rep = 0; rep < 5; ++rep) {
        RealVector x(static_cast<std::size_t>(d));
        for (auto& c : x) c = rng.uniform(-2.0, 2.0);
        CHECK(std::abs(real_delta_k(p, x, u) - expect) <= 1e-10 * (1 + std::abs(expect)));
      }
    }
  }

  TEST_CASE("polynomial evaluation") {
    Jet c = Jet::zero({0.3}, 0);
    c.parts[0] = SymTensor::constant(7.0, 1);
    const double far[] = {100.0};
    CHECK(poly_eval(c, far) == 7.0);
    Jet lin = Jet::zero({0.0}, 1);
    lin.parts[1].set(MultiIndex{0}, 4.0);
    const double half[] = {0.5};
    CHECK(poly_eval(lin, half) == 2.0);
    Jet shifted = Jet::zero({1.0, -1.0}, 2);
    shifted.parts[0] = SymTensor::constant(-3.0, 2);
    shifted.parts[2].set(MultiIndex{0, 1}, 9.0);
    CHECK(poly_eval(shifted, shifted.base) == -3.0);
  }

  TEST_CASE("directional derivatives of jets") {
    const std::vector<RealVector> ones{{1.0}, {1.0}};
    const double origin[] = {0.0};
    CHECK(poly_directional_derivative(monomial(2), 2, ones, origin) == 2.0);
    CHECK(poly_directional_derivative(monomial(2), 3, std::vector<RealVector>{{1.0}, {1.0}, {1.0}}, origin) == 0.0);
    const double two[] = {2.0};
    CHECK(poly_directional_derivative(monomial(3), 1, std::vector<RealVector>{{1.0}}, two) ==
          doctest::Approx(12.0).epsilon(1e-14));
  }

  TEST_CASE("degree check on patches") {
    const LatticeSpec unit({1});
    const auto sq = [](std::span<const double> x) { return x[0] * x[0]; };
    const auto patch = sample_patch(unit, pt({-2}), {7}, sq);
    CHECK_FALSE(degree_check(patch, 1));
    CHECK(degree_check(patch, 2));
    const GridPatchFunction flat(unit, pt({0}), {5}, {4, 4, 4, 4, 4});
    CHECK(degree_check(flat, 0));
    const GridPatchFunction alt(unit, pt({0}), {6}, {0, 1, 0, 1, 0, 1});
    CHECK_FALSE(degree_check(alt, 1));
  }

  TEST_CASE("factorial") {
    CHECK(factorial(0) == 1.0);
    CHECK(factorial(5) == 120.0);
  }
}
