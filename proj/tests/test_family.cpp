#include <doctest.h>

#include "helpers.hpp"
#include "twoalg/errors.hpp"
#include "twoalg/family.hpp"

using namespace twoalg;
using testing::span;

TEST_SUITE("family") {
  TEST_CASE("empty family passes vacuously") {
    auto c = check_G(empty_family(3));
    CHECK(c.passed);
    CHECK(c.entries.empty());
  }

  TEST_CASE("Green families satisfy the transversality condition") {
    for (int l = 2; l <= 8; ++l) CHECK(check_G(green_family(l)).passed);
  }

  TEST_CASE("V1 = W1 fails at (1,1)") {
    Family f(2, {{span(2, {{1, 0}}), span(2, {{1, 0}})}});
    auto c = check_G(f);
    CHECK_FALSE(c.passed);
    REQUIRE(c.first_failure);
    CHECK(*c.first_failure == std::pair{1, 1});
    CHECK_THROWS_AS(complements(f), InputError);
  }

  TEST_CASE("equidimensional families have zero middle complements") {
    auto cd = complements(kk_family(3));
    for (const auto& [ij, p] : cd.middle) {
      CHECK(p.space.dim() == 0);
      CHECK(p.theta.rows() == 0);
    }
  }

  TEST_CASE("left and right projections split C") {
    auto f = random_family(3, 2, {2, 1}, 5);
    auto cd = complements(f);
    for (int i = 1; i <= 2; ++i) {
      // θ_left kills W_i and is the identity on V_i coordinates.
      const auto& L = cd.left(i);
      for (int r = 0; r < f.W(i).dim(); ++r)
        for (const auto& y : twoalg::apply(L.theta, f.W(i).basis_vector(r))) CHECK(y == 0);
      CHECK(L.space == f.V(i));
      CHECK(cd.right(i).space == f.W(i));
    }
  }

  TEST_CASE("green_family(2) and (3)") {
    auto g2 = green_family(2);
    CHECK(g2.n() == 1);
    CHECK(g2.m() == 1);
    CHECK(g2.V(1).dim() == 0);
    CHECK(g2.W(1) == Subspace::full(1));
    auto g3 = green_family(3);
    CHECK(g3.n() == 2);
    CHECK(g3.m() == 1);
    CHECK(g3.V(1) == span(2, {{0, 1}}));
    CHECK(g3.W(1) == span(2, {{1, 0}}));
  }

  TEST_CASE("kk_family(1) and (2)") {
    auto k1 = kk_family(1);
    CHECK(k1.n() == 1);
    CHECK(k1.V(1) == Subspace::full(1));
    CHECK(k1.W(1).dim() == 0);
    auto k2 = kk_family(2);
    CHECK(k2.V(1) == span(2, {{1, 0}}));
    CHECK(k2.W(1) == span(2, {{-1, 1}}));
    CHECK(k2.V(2) == span(2, {{0, 1}}));
    CHECK(k2.W(2) == span(2, {{1, 0}}));
    CHECK(k2.is_equidimensional());
  }

  TEST_CASE("random families: extreme k and determinism") {
    auto zero = random_family(3, 3, {0, 0, 0}, 9);
    for (int i = 1; i <= 3; ++i) {
      CHECK(zero.V(i).dim() == 0);
      CHECK(zero.W(i) == Subspace::full(3));
    }
    auto full = random_family(3, 2, {3, 3}, 9);
    for (int i = 1; i <= 2; ++i) CHECK(full.W(i).dim() == 0);
    CHECK(check_G(full).passed);
    auto a = random_family(2, 2, {1, 1}, 2024);
    CHECK(a == random_family(2, 2, {1, 1}, 2024));
    CHECK(check_G(a).passed);
    CHECK_THROWS_AS(random_family(2, 2, {1, 2}, 1), InputError);
    CHECK_THROWS_AS(random_family(2, 1, {1, 1}, 1), InputError);
  }

  TEST_CASE("dimension validation") {
    CHECK_THROWS_AS(Family(2, {{span(2, {{1, 0}}), span(2, {{0, 1}, {1, 1}})}}), InputError);
    CHECK_THROWS_AS(Family(2, {{span(2, {{1, 0}}), span(2, {{0, 1}})}, {Subspace::full(2), Subspace(2)}}),
                    InputError);
  }

  TEST_CASE("JSON round trip") {
    auto f = random_family(4, 3, {3, 2, 2}, 77);
    CHECK(family_from_json(to_json(f)) == f);
    CHECK(family_from_json(to_json(empty_family(2))) == empty_family(2));
    CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"n": 2, "pairs": [{"V": [["1/0", "1"]]}]})")),
                    InputError);
  }

  TEST_CASE("prefix") {
    auto f = kk_family(3);
    auto p = f.prefix(2);
    CHECK(p.m() == 2);
    CHECK(p.V(2) == f.V(2));
  }
}
