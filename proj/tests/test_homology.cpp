#include <doctest.h>

#include "twoalg/errors.hpp"
#include "twoalg/homology.hpp"
#include "twoalg/quiverpath.hpp"
#include "twoalg/ralgebra.hpp"
#include "twoalg/twist.hpp"

using namespace twoalg;

TEST_SUITE("homology") {
  TEST_CASE("semisimple algebra") {
    auto a = semisimple_algebra(3);
    auto rep = gldim(a, 4);
    CHECK(rep.gldim == 0);
    CHECK(rep.loewy == 1);
    CHECK(rep.euler_ok);
  }

  TEST_CASE("Kronecker algebra K_n") {
    for (int n = 1; n <= 4; ++n) {
      auto a = build_R(empty_family(n)).algebra();
      auto census = simples_and_projectives(a);
      CHECK(census.projective_dims == std::vector<int>{1, n + 1});
      CHECK(census.simple_dims == std::vector<int>{1, 1});
      auto rep = gldim(a, 4);
      CHECK(rep.gldim == 1);
      CHECK(rep.loewy == 2);
      // S_2 has a resolution 0 -> P_1^n -> P_2.
      auto r = minimal_resolution(a, 1, 4);
      REQUIRE(r.length() == 1);
      CHECK(r.betti[1] == std::vector<int>{n, 0});
      CHECK(r.minimal);
    }
  }

  TEST_CASE("module axioms") {
    auto a = build_R(kk_family(2)).algebra();
    for (int v = 0; v < 2; ++v) {
      CHECK_FALSE(find_module_failure(a, projective_module(a, v)));
      CHECK_FALSE(find_module_failure(a, simple_module(a, v)));
    }
  }

  TEST_CASE("Green algebras have global dimension l") {
    for (int l = 2; l <= 6; ++l) {
      auto rep = gldim(build_R(green_family(l)).algebra(), default_gldim_cutoff(green_family(l)));
      CHECK(rep.gldim == l);
      CHECK(rep.euler_ok);
    }
  }

  TEST_CASE("G3 from the oracle agrees") {
    auto q = green_quiver(3);
    auto a = build_oracle(q.quiver, q.relations, 8).to_algebra();
    CHECK(gldim(a, 6).gldim == 3);
  }

  TEST_CASE("KK_n has global dimension 2n+1 and Loewy length 4") {
    for (int n = 2; n <= 3; ++n) {
      auto rep = gldim(build_R(kk_family(n)).algebra(), default_gldim_cutoff(kk_family(n)));
      CHECK(rep.gldim == 2 * n + 1);
      CHECK(rep.loewy == 4);
      CHECK(rep.euler_ok);
    }
  }

  TEST_CASE("random families have finite global dimension") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto f = random_family(3, 3, {2, 1, 1}, seed);
      auto rep = gldim(build_R(f).algebra(), default_gldim_cutoff(f));
      CHECK(rep.euler_ok);
      CHECK(rep.gldim <= 2 * f.m() + 1);
    }
  }

  TEST_CASE("infinite global dimension hits the cutoff") {
    // Two-cycle with both length-two paths zero: self-injective, not semisimple.
    Quiver q(2, {{0, 1, 0, "a"}, {1, 0, 0, "b"}});
    auto a = build_oracle(q, {PathVector::single(Path::of({0, 1})), PathVector::single(Path::of({1, 0}))}, 3)
                 .to_algebra();
    CHECK(loewy_length(a) == 2);
    CHECK_THROWS_AS(gldim(a, 5), CutoffExceeded);
  }
}
