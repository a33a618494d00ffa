#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "twoalg/dcat.hpp"
#include "twoalg/errors.hpp"

using namespace twoalg;
using testing::line;

namespace {

Family nodal(int m) {
  std::vector<SubspacePair> pairs;
  for (int i = 1; i <= m; ++i) pairs.push_back({line(1, i), line(1, -i)});
  return Family(2, pairs);
}

DegreeDims total(const std::map<std::pair<int, int>, DegreeDims>& blocks) {
  DegreeDims out;
  for (const auto& [key, dims] : blocks)
    for (auto [p, d] : dims) out[p] += d;
  return out;
}

bool all_ok(const std::vector<HomTableEntry>& t) {
  return std::all_of(t.begin(), t.end(), [](const HomTableEntry& e) { return e.ok(); });
}

}  // namespace

TEST_SUITE("dcat") {
  TEST_CASE("n=2, k=1, m=1 has dimension 9") {
    auto d = build_D(nodal(1), {0});
    CHECK(d.dim() == 9);
    CHECK(all_ok(hom_table(d)));
  }

  TEST_CASE("Hom table between indecomposable projectives") {
    auto d = build_D(nodal(2), {0, 2});
    auto t = hom_table(d);
    CHECK(all_ok(t));
    for (const auto& e : t) {
      if (e.source == DAlgebra::vertex_one() && e.target == DAlgebra::vertex_two())
        CHECK(e.actual == DegreeDims{{0, 2}});
      if (e.source == DAlgebra::vertex_two() && e.target == DAlgebra::vertex_l(2))
        CHECK(e.actual == DegreeDims{{0, 1}, {2, 1}});
      if (e.source == DAlgebra::vertex_one() && e.target == DAlgebra::vertex_l(1))
        CHECK(e.actual == DegreeDims{{0, 2}});  // n - k in degree 0, plus one in degree δ_1 = 0
    }
  }

  TEST_CASE("shapes of P1, P2 and K_i") {
    auto f = random_family(3, 3, {2, 2, 2}, 5);
    auto d = build_D(f, {0, 1, -1});
    auto pk = build_P1_P2_K(d);
    CHECK(pk.P1.summands.size() == 4u);
    CHECK(pk.P2.summands.size() == 3u * 2u + 1u);
    REQUIRE(pk.K.size() == 3u);
    for (const auto& K : pk.K) {
      CHECK(K.summands.size() == 2u + 2u);
      CHECK_FALSE(find_complex_failure(d.algebra(), K));
    }
    CHECK_FALSE(find_complex_failure(d.algebra(), pk.P1));
    CHECK_FALSE(find_complex_failure(d.algebra(), pk.P2));
  }

  TEST_CASE("β_i kills v and φ_ij kills w") {
    auto f = nodal(2);
    auto d = build_D(f, {0, 0});
    const auto& a = d.algebra();
    auto v1 = f.V(1).basis().to_rows()[0];
    auto w1 = f.W(1).basis().to_rows()[0];
    CHECK(a.multiply(d.beta(1), d.c_element(v1)).empty());
    CHECK(d.phi_times(1, 1, w1).empty());
    CHECK_FALSE(d.phi_times(1, 1, v1).empty());
  }

  TEST_CASE("exceptional collection") {
    for (auto delta : {std::vector<int>{0, 0, 0}, std::vector<int>{1, 2, 3}, std::vector<int>{-1, 0, 2}}) {
      auto d = build_D(nodal(3), delta);
      auto ex = exceptionality_suite(d);
      CHECK(ex.complex_failures.empty());
      for (const auto& c : ex.checks) {
        INFO(c.name);
        CHECK(c.ok());
      }
    }
  }

  TEST_CASE("End(P1 + P2) recovers R_F with the χ grading") {
    auto d = build_D(nodal(1), {0});
    auto cmp = endomorphism_cohomology(d);
    CHECK(cmp.passed());
    CHECK(cmp.chi == std::vector<int>{0, 1});
    CHECK(total(cmp.cohomology) == DegreeDims{{0, 4}, {1, 4}});
  }

  TEST_CASE("comparison holds for shifted and larger families") {
    CHECK(endomorphism_cohomology(build_D(nodal(2), {2, -1})).passed());
    CHECK(endomorphism_cohomology(build_D(random_family(3, 2, {2, 2}, 9), {1, 0})).passed());
    CHECK(endomorphism_cohomology(build_D(kk_family(2), {0, 0})).passed());
  }

  TEST_CASE("chi from delta") { CHECK(chi_for_delta({0, 1, 3}) == std::vector<int>{0, 1, 0, -2}); }

  TEST_CASE("bad input") {
    CHECK_THROWS_AS(build_D(random_family(3, 2, {2, 1}, 4), {0, 0}), InputError);
    CHECK_THROWS_AS(build_D(nodal(2), {0}), InputError);
    Family bad(2, {{line(1, 0), line(1, 1)}, {line(1, 1), line(1, 0)}});
    CHECK_THROWS_AS(build_D(bad, {0, 0}), InputError);
  }

  TEST_CASE("dropping the differential of P1 breaks acyclicity of Hom(P1, K)") {
    auto d = build_D(nodal(1), {0});
    auto pk = build_P1_P2_K(d);
    CHECK(HomComplex(d.algebra(), pk.P1, pk.K[0]).cohomology_dims().empty());
    auto broken = pk.P1;
    broken.differential.clear();
    auto dims = HomComplex(d.algebra(), broken, pk.K[0]).cohomology_dims();
    CHECK_FALSE(dims.empty());
  }

  TEST_CASE("wrong shift is a degree violation") {
    auto d = build_D(nodal(1), {1});
    auto pk = build_P1_P2_K(d);
    auto broken = pk.P1;
    broken.summands[0].shift += 1;
    CHECK(find_complex_failure(d.algebra(), broken));
  }

  TEST_CASE("Hom complex differential squares to zero") {
    auto d = build_D(nodal(2), {0, 1});
    auto pk = build_P1_P2_K(d);
    HomComplex h(d.algebra(), pk.P2, pk.P1);
    for (int p : h.degrees())
      for (int i = 0; i < h.dim(p); ++i) {
        auto once = h.differential(p, unit_vector(i));
        CHECK(h.differential(p + 1, once).empty());
      }
  }
}
