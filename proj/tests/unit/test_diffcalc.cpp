#include <doctest.h>

#include "helpers.hpp"
#include "torusjet/diffcalc.hpp"
#include "torusjet/error.hpp"
#include "torusjet/random.hpp"

using namespace torusjet;
using namespace torusjet::testing;

TEST_SUITE("diffcalc") {
  TEST_CASE("first differences") {
    const auto f = alternating();
    CHECK(delta(f, vec({1}), pt({0})) == 1.0);
    CHECK(delta(f, vec({0}), pt({2})) == 0.0);
    CHECK(delta(f, vec({1}), pt({3})) == -1.0);
  }

  TEST_CASE("higher differences and their expansion") {
    const auto f = alternating();
    const MultiVector ee{vec({1}), vec({1})}, em{vec({1}), vec({-1})};
    CHECK(delta_k(f, ee, pt({0})) == -2.0);
    CHECK(delta_k(f, em, pt({0})) == -2.0);
    CHECK(delta_k(f, MultiVector{}, pt({1})) == 1.0);
    CHECK(delta_k_expansion(f, ee, pt({0})) == -2.0);
    CHECK(delta_k_expansion(f, em, pt({0})) == -2.0);
    CHECK(delta_k_expansion(f, MultiVector{vec({1})}, pt({1})) == f(pt({2})) - f(pt({1})));
    const LatticeFunction c(LatticeSpec({3}), {2, 2, 2});
    CHECK(delta_k_expansion(c, ee, pt({0})) == 0.0);
  }

  TEST_CASE("refinement sum") {
    const auto f = tent();
    const long two[] = {2};
    CHECK(refinement_sum(f, MultiVector{vec({1})}, two, pt({1})) ==
          delta(f, vec({1}), pt({1})) + delta(f, vec({1}), pt({2})));
    const auto g = alternating();
    const long twotwo[] = {2, 2};
    const MultiVector ee{vec({1}), vec({1})};
    CHECK(refinement_sum(g, ee, twotwo, pt({0})) == 0.0);
    CHECK(delta_k(g, MultiVector{vec({2}), vec({2})}, pt({0})) == 0.0);
    const long ones[] = {1, 1};
    CHECK(refinement_sum(f, ee, ones, pt({3})) == delta_k(f, ee, pt({3})));
  }

  TEST_CASE("refinement sum equals the difference along the scaled multivector") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
      const LatticeSpec spec({static_cast<int>(rng.integer(1, 6)), static_cast<int>(rng.integer(1, 6))});
      const auto f = random_function(spec, rng.bits());
      const int k = static_cast<int>(rng.integer(1, 3));
      MultiVector u;
      std::vector<long> n;
      for (int i = 0; i < k; ++i) {
        u.push_back(vec({rng.integer(-2, 2), rng.integer(-2, 2)}));
        n.push_back(rng.integer(1, 3));
      }
      const auto x = pt({rng.integer(-5, 5), rng.integer(-5, 5)});
      const double lhs = refinement_sum(f, std::span<const LatticeVector>(u), n, x);
      const double rhs = delta_k(f, scale_multivector(u, n), x);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(rhs)));
    }
  }

  TEST_CASE("seminorm at a multivector") {
    const auto f = alternating();
    const MultiVector ee{vec({1}), vec({1})};
    CHECK(seminorm_at(f, ee, all_sites(f.spec())) == 2.0);
    CHECK(seminorm_at(f, ee, SiteSet{}) == 0.0);
    const LatticeFunction c(LatticeSpec({4}), {3, 3, 3, 3});
    CHECK(seminorm_at(c, ee, all_sites(c.spec())) == 0.0);
  }

  TEST_CASE("seminorm") {
    const auto f = alternating();
    const auto r = seminorm(f, 2);
    CHECK(r.value == 32.0);
    CHECK(r.k == 2);
    REQUIRE(r.witness_x);
    CHECK(std::abs(delta_k(f, r.witness_u, *r.witness_x)) / multi_norm(r.witness_u, f.spec()) == 32.0);
    CHECK(seminorm(f, 0).value == 1.0);
    const LatticeFunction c(LatticeSpec({2, 2}), {1, 1, 1, 1});
    CHECK(seminorm(c, 1).value == 0.0);
    CHECK(seminorm(c, 3).value == 0.0);
  }

  TEST_CASE("general multivectors never beat the basic seminorm") {
    Rng rng(22);
    for (int t = 0; t < 40; ++t) {
      const LatticeSpec spec({static_cast<int>(rng.integer(1, 5)), static_cast<int>(rng.integer(1, 5))});
      const auto f = random_function(spec, rng.bits());
      const int k = static_cast<int>(rng.integer(1, 3));
      const double s = seminorm(f, k).value;
      for (int trial = 0; trial < 5; ++trial) {
        MultiVector u;
        for (int i = 0; i < k; ++i) {
          LatticeVector v;
          do v = vec({rng.integer(-3, 3), rng.integer(-3, 3)});
          while (v.is_zero());
          u.push_back(v);
        }
        const auto x = pt({rng.integer(0, 4), rng.integer(0, 4)});
        CHECK(std::abs(delta_k(f, u, x)) / multi_norm(u, spec) <= s + 1e-9);
      }
    }
  }

  TEST_CASE("patch differences refuse to leave the patch") {
    const GridPatchFunction g(LatticeSpec({1}), pt({0}), {4}, {0, 1, 4, 9});
    CHECK(delta_k(g, std::span<const LatticeVector>(MultiVector{vec({1}), vec({1})}), pt({0})) == 2.0);
    CHECK_THROWS_AS(delta(g, vec({1}), pt({3})), InvalidInput);
    CHECK(restricted_domain(g, MultiVector{vec({1}), vec({1})}).size() == 2);
    CHECK(patch_seminorm(g, 2).value == 2.0);
  }
}
