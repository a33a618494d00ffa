#include <doctest.h>

#include "helpers.hpp"
#include "twoalg/errors.hpp"
#include "twoalg/quiverpath.hpp"
#include "twoalg/twist.hpp"

using namespace twoalg;
using testing::span;


TEST_SUITE("twist") {
  TEST_CASE("tensoring with the base ring changes nothing") {
    auto a = over_semisimple(kronecker_on(span(3, {{1, 0, 0}, {0, 1, 1}}), 0), "K(V)");
    auto s = over_semisimple(semisimple_algebra(2), "S");
    CHECK(balanced_tensor(a, s).dim() == a.total.dim());
    CHECK(balanced_tensor(s, a).dim() == a.total.dim());
    auto b = over_semisimple(one_arrow_algebra(2, 1, 0, 0, "b", 0), "K1op");
    // K(V) ⊗_S K1op: pairs (x, y) with source(x) = target(y).
    CHECK(balanced_tensor(a, b).dim() == 2 * 2 + 3);
  }

  TEST_CASE("R tensor_R R = R") {
    auto r = over_semisimple(semisimple_algebra(2), "S");
    CHECK(balanced_tensor(r, r).dim() == 2);
  }

  TEST_CASE("v-twist of K(V) and K1op") {
    auto KV = kronecker_on(span(3, {{1, 0, 0}, {0, 1, 1}}), 0);
    auto K1op = one_arrow_algebra(2, 1, 0, 0, "b", 3);
    auto a = over_semisimple(KV, "K(V)");
    auto b = over_semisimple(K1op, "K1op");
    CHECK_FALSE(find_ring_failure(a));
    CHECK_FALSE(find_ring_failure(b));
    auto tau = v_twist(a, b);
    CHECK(tau.fixsides);
    CHECK(tau.well_defined);

    // b ⊗ v with both in the augmentation ideals goes to zero.
    auto radical = [](const GradedAlgebra& g) {
      std::vector<int> out;
      for (int x = 0; x < g.dim(); ++x)
        if (x != g.idempotent(0) && x != g.idempotent(1)) out.push_back(x);
      return out;
    };
    REQUIRE(radical(KV).size() == 2);
    REQUIRE(radical(K1op).size() == 1);
    for (int v : radical(KV)) {
      int id = tau.domain.pair_id(radical(K1op)[0], v);
      REQUIRE(id >= 0);
      CHECK(tau.apply(unit_vector(id)).empty());
    }
    // 1 ⊗ a ↦ a ⊗ 1 and b ⊗ 1 ↦ 1 ⊗ b.
    for (int v = 0; v < KV.dim(); ++v) {
      auto lhs = tau.apply(tau.domain.tensor(K1op.unit(), unit_vector(v)));
      auto rhs = tau.codomain.project(tau.codomain.tensor(unit_vector(v), K1op.unit()));
      CHECK(lhs == rhs);
    }
    for (int x = 0; x < K1op.dim(); ++x) {
      auto lhs = tau.apply(tau.domain.tensor(unit_vector(x), KV.unit()));
      auto rhs = tau.codomain.project(tau.codomain.tensor(KV.unit(), unit_vector(x)));
      CHECK(lhs == rhs);
    }

    auto prod = twisted_product(a, b, tau);
    CHECK(prod.algebra.dim() == 2 * 2 + 3);
    CHECK_FALSE(prod.associativity_failure);
  }

  TEST_CASE("semisimple twisted product") {
    auto s = over_semisimple(semisimple_algebra(2), "S");
    auto tau = v_twist(s, s);
    auto p = twisted_product(s, s, tau);
    CHECK(p.algebra.dim() == 2);
  }

  TEST_CASE("missing augmentation is an input error") {
    RingOverR r = over_semisimple(semisimple_algebra(2), "S");
    r.augmentation.reset();
    CHECK_THROWS_AS(v_twist(r, r), InputError);
  }

  TEST_CASE("factorization of the empty family is the terminal Kronecker algebra") {
    auto c = factorize_R(empty_family(3));
    CHECK(c.passed);
    CHECK(c.steps.empty());
    CHECK(c.terminal == "K_3");
    CHECK(c.terminal_verified);
    CHECK(c.status() == "CERTIFIED-BY-FACTORIZATION");
  }

  TEST_CASE("Green families factor in l - 1 elementary steps") {
    for (int l = 2; l <= 7; ++l) {
      auto c = factorize_R(green_family(l));
      CHECK(c.passed);
      CHECK(c.elementary_steps() == l - 1);
      CHECK(static_cast<int>(c.steps.size()) == green_family(l).m());
    }
  }

  TEST_CASE("KK2 factors in two verified steps") {
    auto c = factorize_R(kk_family(2));
    CHECK(c.passed);
    REQUIRE(c.steps.size() == 2);
    for (const auto& s : c.steps) {
      CHECK(s.rho_bijective.value_or(false));
      CHECK(s.rho_multiplicative.value_or(false));
      CHECK(s.ideal_nilpotent);
      CHECK(s.left_dim == 2 * 1 + 3);
    }
  }

  TEST_CASE("nodal n=2, k=1, m=2: the top step reaches dim R_F = 12") {
    auto c = factorize_R(random_family(2, 2, {1, 1}, 19));
    REQUIRE(c.steps.size() == 2);
    int top = 0;
    for (const auto& s : c.steps) top = std::max(top, s.tensor_dim);
    CHECK(top == 12);
  }

  TEST_CASE("graded factorization keeps degrees") {
    auto c = factorize_R(kk_family(2), {0, 1, 1});
    CHECK(c.passed);
    for (const auto& s : c.steps) CHECK(s.degrees_match.value_or(false));
    CHECK_THROWS_AS(factorize_R(kk_family(2), {0, 1}), InputError);
  }

  TEST_CASE("random families factor") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) CHECK(factorize_R(random_family(3, 3, {2, 2, 1}, seed)).passed);
  }

  TEST_CASE("transversality failure stops factorization") {
    Family bad(2, {{span(2, {{1, 0}}), span(2, {{1, 0}})}});
    CHECK_THROWS_AS(factorize_R(bad), InputError);
  }

  TEST_CASE("generalized Green algebras") {
    CHECK(generalized_green(3, {}).algebra.dim() == 3);
    CHECK(generalized_green(2, {{1, 2, 0}}).algebra.dim() == 3);
    auto g3 = generalized_green(2, green_steps(3));
    CHECK(g3.certificate.passed);
    auto q = green_quiver(3);
    auto o = build_oracle(q.quiver, q.relations, 8);
    CHECK(compare_by_letters(g3.algebra, {0, 2, 1}, o).agree());
    CHECK_THROWS_AS(generalized_green(2, {{1, 1, 0}}), InputError);
  }

  TEST_CASE("left projectivity") {
    CHECK(left_projectivity_check(green_family(4)).injective);
    auto r = left_projectivity_check(random_family(3, 2, {1, 1}, 13));
    CHECK(r.injective);
    CHECK(r.rank == r.columns);
    CHECK(left_projectivity_check(random_family(2, 1, {1}, 3)).injective);
  }
}
