#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "twoalg/errors.hpp"
#include "twoalg/quiverpath.hpp"
#include "twoalg/ralgebra.hpp"

using namespace twoalg;
using testing::span;

namespace {

Family equidim_21(int m, std::uint64_t seed) { return random_family(2, m, std::vector<int>(m, 1), seed); }

}  // namespace

TEST_SUITE("ralgebra") {
  TEST_CASE("empty family gives the Kronecker algebra") {
    for (int n = 1; n <= 4; ++n) {
      auto r = build_R(empty_family(n));
      CHECK(r.dim() == n + 2);
      CHECK(cartan_matrix(r.algebra()) == std::vector<std::vector<int>>{{1, 0}, {n, 1}});
      CHECK(verify_against_oracle(empty_family(n)).agree);
    }
  }

  TEST_CASE("Kronecker K2 Cartan matrix") {
    CHECK(cartan_matrix(build_oracle(two_vertex_quiver(2, 0), {}, 3).to_algebra()) ==
          std::vector<std::vector<int>>{{1, 0}, {2, 1}});
  }

  TEST_CASE("equidimensional n=2, k=1 has dimension 4 + 4m") {
    for (int m = 0; m <= 5; ++m) {
      auto r = build_R(equidim_21(m, 100 + m));
      CHECK(r.dim() == 4 + 4 * m);
      CHECK_FALSE(find_formula_mismatch(r));
    }
  }

  TEST_CASE("Cartan matrix for n=2, k=1, m=1") {
    auto r = build_R(equidim_21(1, 3));
    CHECK(cartan_matrix(r.algebra()) == std::vector<std::vector<int>>{{2, 1}, {3, 2}});
  }

  TEST_CASE("Green family matches the Green quiver") {
    auto r = build_R(green_family(2));
    CHECK(r.dim() == 5);
    auto g = green_quiver(2);
    CHECK(build_oracle(g.quiver, g.relations, 6).dim() == 5);
    std::vector<int> dims;
    for (int l = 2; l <= 8; ++l) dims.push_back(build_R(green_family(l)).dim());
    CHECK(dims == std::vector<int>{5, 8, 13, 21, 34, 55, 89});
  }

  TEST_CASE("oracle agreement") {
    auto kk = verify_against_oracle(kk_family(2));
    CHECK(kk.agree);
    CHECK(kk.closed_dim == 12);
    CHECK(verify_against_oracle(empty_family(3)).agree);
    auto rnd = verify_against_oracle(random_family(3, 2, {2, 1}, 41));
    CHECK(rnd.agree);
    CHECK(rnd.bijective);
    CHECK(rnd.multiplicative);
    CHECK(rnd.multidegrees_match);
    CHECK(verify_against_oracle(random_family(4, 3, {3, 2, 1}, 8)).agree);
  }

  TEST_CASE("KK dims") {
    CHECK(build_R(kk_family(1)).dim() == 5);
    CHECK(build_R(kk_family(2)).dim() == 12);
    CHECK(build_R(kk_family(3)).dim() == 23);
  }

  TEST_CASE("structure is associative and well formed") {
    for (const auto& f : {kk_family(3), random_family(3, 3, {2, 1, 1}, 6), green_family(6)}) {
      auto r = build_R(f);
      CHECK_FALSE(find_associativity_failure(r.algebra()));
      CHECK_FALSE(find_structure_failure(r.algebra()));
    }
  }

  TEST_CASE("words with a repeated or increasing b vanish") {
    auto r = build_R(kk_family(2));
    std::vector<Scalar> c1{1, 0};
    CHECK(r.normalize({Letter::arrow_b(1), Letter::vector_c(c1), Letter::arrow_b(2)}).empty());
    CHECK(r.normalize({Letter::arrow_b(1), Letter::vector_c(c1), Letter::arrow_b(1)}).empty());
    // b_i v = 0 for v in V_i, w b_i = 0 for w in W_i
    const auto& f = r.family();
    CHECK(r.normalize({Letter::arrow_b(2), Letter::vector_c(f.V(2).basis_vector(0))}).empty());
    CHECK(r.normalize({Letter::vector_c(f.W(1).basis_vector(0)), Letter::arrow_b(1)}).empty());
    // equidimensional: U_21 = C, so b2 c b1 = 0 for every c
    CHECK(r.normalize({Letter::arrow_b(2), Letter::vector_c(c1), Letter::arrow_b(1)}).empty());
    auto g = build_R(random_family(3, 2, {2, 1}, 41));
    auto t = g.complement_data().T(2, 1).space.basis_vector(0);
    CHECK_FALSE(g.normalize({Letter::arrow_b(2), Letter::vector_c(t), Letter::arrow_b(1)}).empty());
  }

  TEST_CASE("gradings") {
    auto r = build_R(kk_family(2));
    auto zero = apply_grading(r.algebra(), {0, 0, 0});
    for (const auto& e : zero.basis()) CHECK(e.zdegree == 0);
    auto chi = apply_grading(r.algebra(), {0, 1, 1});
    std::map<int, int> hist;
    for (const auto& e : chi.basis()) ++hist[e.zdegree];
    CHECK(hist == std::map<int, int>{{0, 4}, {1, 8}});
    CHECK_THROWS_AS(apply_grading(r.algebra(), {0, 1}), InputError);
  }

  TEST_CASE("transversality failure is an input error") {
    Family bad(2, {{span(2, {{1, 0}}), span(2, {{1, 0}})}});
    CHECK_THROWS_AS(build_R(bad), InputError);
  }

  TEST_CASE("JSON report carries the basis and structure constants") {
    auto r = build_R(equidim_21(1, 3));
    auto j = to_json(r, {0, 1});
    CHECK(j["basis"].size() == 8);
    CHECK(j["cartan"] == nlohmann::json::parse("[[2,1],[3,2]]"));
    CHECK(j.dump() == to_json(build_R(equidim_21(1, 3)), {0, 1}).dump());
  }
}
