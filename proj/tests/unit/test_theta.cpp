#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "torusjet/random.hpp"
#include "torusjet/theta.hpp"

using namespace torusjet;
using namespace torusjet::testing;

namespace {

double frame_average(const LatticeFunction& f, const LatticePoint& x, const MultiIndex& iota) {
  const auto& spec = f.spec();
  const std::size_t d = spec.dim();
  std::vector<int> alpha(d);
  double sum = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    for (std::size_t i = 0; i < d; ++i) alpha[i] = (mask >> i) & 1;
    sum += theta_alpha(f, spec, x, alpha, iota);
  }
  return sum / static_cast<double>(std::size_t{1} << d);
}

}  // namespace

TEST_SUITE("theta") {
  TEST_CASE("single frames") {
    const auto f = alternating();
    const int zero[] = {0}, one[] = {1}, axis[] = {0};
    CHECK(theta_alpha(f, f.spec(), pt({0}), zero, axis) == 1.0);
    CHECK(theta_alpha(f, f.spec(), pt({0}), one, axis) == -1.0);
    const LatticeFunction c(LatticeSpec({4}), {2, 2, 2, 2});
    CHECK(theta_alpha(c, c.spec(), pt({1}), one, axis) == 0.0);
  }

  TEST_CASE("theta of the alternating function vanishes") {
    const auto f = alternating();
    CHECK(theta(f, pt({0}), 1).coeff(MultiIndex{0}) == 0.0);
    for (long x = 0; x < 4; ++x) CHECK(tensor_norm(theta(f, pt({x}), 2)) == 0.0);
    const LatticeFunction c(LatticeSpec({2, 3}), std::vector<double>(6, -1.0));
    CHECK(tensor_norm(theta(c, pt({1, 1}), 2)) == 0.0);
    CHECK(theta(c, pt({1, 1}), 0).coeff(MultiIndex{}) == -1.0);
  }

  TEST_CASE("centered form") {
    const auto f = tent();
    const int i0[] = {0};
    CHECK(theta_centered(f, f.spec(), pt({1}), i0) == (f(pt({2})) - f(pt({0}))) / 2);
    const int ii[] = {0, 0};
    for (long x = 0; x < 4; ++x) CHECK(theta_centered(alternating(), alternating().spec(), pt({x}), ii) == 0.0);
  }

  TEST_CASE("grouped and centered forms agree on random functions") {
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
      const int d = static_cast<int>(rng.integer(1, 3));
      std::vector<int> m;
      for (int i = 0; i < d; ++i) m.push_back(static_cast<int>(rng.integer(1, 6)));
      const LatticeSpec spec(m);
      const auto f = random_function(spec, rng.bits());
      const int k = static_cast<int>(rng.integer(0, 3));
      MultiIndex iota(static_cast<std::size_t>(k));
      for (auto& i : iota) i = static_cast<int>(rng.integer(0, d - 1));
      LatticePoint x{std::vector<long>(static_cast<std::size_t>(d))};
      for (auto& c : x.j) c = rng.integer(-6, 6);
      CHECK(std::abs(theta_lattice_value(f, spec, x, iota) - theta_centered(f, spec, x, iota)) <= 1e-12);
    }
  }

  TEST_CASE("frame average agrees when no axis repeats") {
    Rng rng(42);
    for (int t = 0; t < 50; ++t) {
      const LatticeSpec spec({static_cast<int>(rng.integer(1, 6)), static_cast<int>(rng.integer(1, 6)),
                              static_cast<int>(rng.integer(1, 6))});
      const auto f = random_function(spec, rng.bits());
      MultiIndex iota{0, 1, 2};
      std::shuffle(iota.begin(), iota.end(), std::mt19937_64(rng.bits()));
      iota.resize(static_cast<std::size_t>(rng.integer(0, 3)));
      const auto x = pt({rng.integer(0, 5), rng.integer(0, 5), rng.integer(0, 5)});
      CHECK(std::abs(frame_average(f, x, iota) - theta_lattice_value(f, spec, x, iota)) <= 1e-12);
    }
  }

  TEST_CASE("frame average differs on a repeated axis") {
    // per-axis frames shift by 2e on a doubled axis, the grouped form by e
    const auto f = tent();
    const MultiIndex ii{0, 0};
    CHECK(frame_average(f, pt({0}), ii) == 0.0);
    CHECK(theta_lattice_value(f, f.spec(), pt({0}), ii) == 1.0);
  }

  TEST_CASE("theta norm") {
    const auto a = alternating();
    CHECK(theta_norm(a, 2, all_sites(a.spec())).value == 0.0);
    CHECK(theta_norm(a, 1, all_sites(a.spec())).value == 0.0);
    const auto t = tent();
    const auto r = theta_norm(t, 1, all_sites(t.spec()));
    CHECK(r.value == 4.0);
    REQUIRE(r.witness_x);
    CHECK((*r.witness_x == pt({1}) || *r.witness_x == pt({3})));
  }

  TEST_CASE("correction coefficients") {
    const int lead[] = {2, 1, 1};
    CHECK(correction_coefficient(4, 2, lead) == 1);
    const int even[] = {0, 2, 1};
    CHECK(correction_coefficient(3, 2, even) == 0);
    const int cubic[] = {0, 3};
    CHECK(correction_coefficient(3, 1, cubic) == 1);
    // with every r_i (i >= 1) odd the exponent m - k + r_0 is always even
    const int r13[] = {1, 3};
    CHECK(correction_coefficient(4, 1, r13) == 1);
  }

  TEST_CASE("theta of homogeneous polynomials") {
    const double x0[] = {0.0};
    const std::vector<RealVector> u{{1.0}};
    const auto cubic = monomial(3).parts[3];
    CHECK(theta_of_homogeneous(cubic, 1, x0, u) == doctest::Approx(1.0).epsilon(1e-14));
    const RealOracle p = [](std::span<const double> x) { return x[0] * x[0] * x[0]; };
    CHECK(centered_difference(p, x0, u) == 1.0);

    const auto sq = monomial(2).parts[2];
    const double x1[] = {0.7};
    CHECK(theta_of_homogeneous(sq, 1, x1, u) == doctest::Approx(2 * 0.7).epsilon(1e-14));

    Rng rng(43);
    SymTensor xi(2, 2);
    for (const auto& idx : xi.sorted_indices()) xi.set(idx, rng.uniform(-1, 1));
    const std::vector<RealVector> w{{0.3, -0.2}, {1.0, 0.5}};
    const double xs[] = {0.1, 0.9};
    CHECK(theta_of_homogeneous(xi, 2, xs, w) == doctest::Approx(2 * tensor_eval(xi, w)).epsilon(1e-13));
  }

  TEST_CASE("theta of sampled homogeneous polynomials matches the formula") {
    Rng rng(44);
    for (int t = 0; t < 20; ++t) {
      const int m = static_cast<int>(rng.integer(1, 4));
      const int k = static_cast<int>(rng.integer(1, m));
      SymTensor xi(m, 2);
      for (const auto& idx : xi.sorted_indices()) xi.set(idx, rng.uniform(-1, 1));
      const RealOracle p = [&](std::span<const double> x) { return diag_eval(xi, x); };
      const double x[] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      std::vector<RealVector> u;
      for (int i = 0; i < k; ++i) u.push_back({rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
      CHECK(std::abs(centered_difference(p, x, u) - theta_of_homogeneous(xi, k, x, u)) <= 1e-9);
    }
  }

  TEST_CASE("remainder term") {
    const double x[] = {0.0}, y[] = {0.0};
    const std::vector<RealVector> u{{1.0}};
    // cubic difference, first order: Θ - D of x^3 at 0 along 1
    CHECK(remainder_term(monomial(3), Jet::zero({0.0}, 3), x, y, u) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(remainder_term(monomial(3), monomial(3), x, y, u) == 0.0);
    // m = K and m = K - 1 leave nothing
    const std::vector<RealVector> uu{{1.0}, {1.0}}, uuu{{1.0}, {1.0}, {1.0}};
    CHECK(remainder_term(monomial(3), Jet::zero({0.0}, 3), x, y, uu) == 0.0);
    CHECK(remainder_term(monomial(3), Jet::zero({0.0}, 3), x, y, uuu) == 0.0);
  }

  TEST_CASE("remainder term matches a brute-force centered difference") {
    Rng rng(45);
    for (int t = 0; t < 30; ++t) {
      Jet pa = Jet::zero({rng.uniform(-1, 1)}, 4), pb = Jet::zero(pa.base, 4);
      for (int s = 0; s <= 4; ++s) {
        pa.parts[static_cast<std::size_t>(s)].set(MultiIndex(static_cast<std::size_t>(s), 0), rng.uniform(-1, 1));
        pb.parts[static_cast<std::size_t>(s)].set(MultiIndex(static_cast<std::size_t>(s), 0), rng.uniform(-1, 1));
      }
      const RealOracle diff = [&](std::span<const double> z) { return poly_eval(pa, z) - poly_eval(pb, z); };
      const double x[] = {rng.uniform(-1, 1)};
      const int m = static_cast<int>(rng.integer(1, 2));
      std::vector<RealVector> u;
      for (int i = 0; i < m; ++i) u.push_back({rng.uniform(-0.5, 0.5)});
      const double expect = centered_difference(diff, x, u) - poly_directional_derivative(pa, m, u, x) +
                            poly_directional_derivative(pb, m, u, x);
      CHECK(std::abs(remainder_term(pa, pb, x, pa.base, u) - expect) <= 1e-10);
    }
  }
}
