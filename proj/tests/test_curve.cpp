#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "twoalg/curve.hpp"
#include "twoalg/errors.hpp"

using namespace twoalg;
using testing::line;

namespace {

const Subspace A = line(1, 1);
const Subspace B = line(1, 2);
const Subspace C = line(1, 3);
const Subspace D = line(1, 4);
const Subspace inf = line(1, 0);
const Subspace zero = line(0, 1);

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("lines to points") {
    CHECK(line_to_point(line(2, 4)).to_string() == "1:2");
    CHECK(line_to_point(line(0, 5)).to_string() == "0:1");
    CHECK(line_to_point(line(3, 0)).at_infinity());
    CHECK(line_to_point(line(-2, 3)).to_string() == "1:-3/2");
    CHECK_THROWS_AS(line_to_point(Subspace::span(2, {{1, 0}, {0, 1}})), InputError);
  }

  TEST_CASE("empty family is smooth") {
    auto f = empty_family(2);
    auto g = build_graph(f);
    CHECK(g.vertices.empty());
    CHECK(is_modest(g));
    auto r = curve_report(f);
    CHECK(r.singular_points == 0);
    CHECK(r.consistent);
  }

  TEST_CASE("nodal family: distinct points") {
    Family f(2, {{A, B}, {C, D}});
    auto g = build_graph(f);
    CHECK(g.vertices.size() == 4u);
    CHECK(g.components.size() == 2u);
    CHECK(g.cycle_rank == 0);
    CHECK(is_modest(g));
    auto r = curve_report(f);
    CHECK(r.singular_points == 2);
    CHECK(r.branches == std::vector<int>{2, 2});
    CHECK(r.distinct_points == 4);
    CHECK(r.consistent);
  }

  TEST_CASE("nodal m=1: λ has rank 2") {
    Family f(2, {{A, B}});
    auto l = lambda_rank(f);
    CHECK(l.rank == 2);
    CHECK(l.surjective);
    CHECK(coordinate_ring_basis(f, 1).size() == 1u);
    CHECK(coordinate_ring_basis(f, 2).size() == 2u);
    CHECK_THROWS_AS(lambda_rank(f, 0), InputError);
  }

  TEST_CASE("parallel edges are not modest") {
    Family f(2, {{A, B}, {A, B}});
    auto g = build_graph(f);
    CHECK(g.edges.size() == 2u);
    CHECK(g.cycle_rank == 1);
    CHECK_FALSE(is_modest(g));
    auto l = lambda_rank(f);
    CHECK(l.rank == 3);
    CHECK_FALSE(l.surjective);
    CHECK(forest_lambda_consistency(f));
    auto red = spanning_forest_reduce(f);
    CHECK(red.kept == std::vector<int>{1});
    CHECK(red.dropped == std::vector<int>{2});
    CHECK(is_modest(build_graph(red.family)));
  }

  TEST_CASE("chain: one singular point with three branches") {
    Family f(2, {{A, B}, {C, A}});
    auto g = build_graph(f);
    CHECK(is_modest(g));
    auto r = curve_report(f);
    CHECK(r.singular_points == 1);
    CHECK(r.branches == std::vector<int>{3});
    CHECK(r.distinct_points == 3);
    CHECK(r.lambda.surjective);
  }

  TEST_CASE("triangle has a cycle and reduces to a path") {
    Family f(2, {{B, A}, {C, B}, {C, A}});
    auto g = build_graph(f);
    CHECK(g.cycle_rank == 1);
    CHECK_FALSE(lambda_rank(f).surjective);
    auto red = spanning_forest_reduce(f);
    CHECK(red.dropped.size() == 1u);
    auto g2 = build_graph(red.family);
    CHECK(is_modest(g2));
    CHECK(g2.components == g.components);
  }

  TEST_CASE("a point at infinity moves the chart") {
    Family f(2, {{inf, zero}, {A, B}});
    auto g = build_graph(f);
    auto chart = affine_chart(g);
    CHECK(chart.shifted);
    std::set<std::string> seen;
    for (const auto& z : chart.coordinate) seen.insert(z.get_str());
    CHECK(seen.size() == g.vertices.size());
    CHECK(curve_report(f).consistent);
  }

  TEST_CASE("requires n=2, k=1 and transversality") {
    CHECK_THROWS_AS(build_graph(random_family(3, 1, {1}, 1)), InputError);
    CHECK_THROWS_AS(build_graph(Family(2, {{A, B}, {B, A}})), InputError);
  }

  TEST_CASE("random families: modest iff λ surjective, kernel by rank-nullity") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      auto f = random_curve_family(1 + static_cast<int>(seed % 5), 4, seed);
      auto r = curve_report(f);
      CHECK(r.consistent);
      CHECK(r.distinct_points <= 2 * f.m());
      int d = r.lambda.d;
      CHECK(static_cast<int>(coordinate_ring_basis(f, d).size()) == d + 1 + f.m() - r.lambda.rank);
      auto red = spanning_forest_reduce(f);
      CHECK(is_modest(build_graph(red.family)));
    }
  }

  TEST_CASE("determinism of random curve families") {
    CHECK(random_curve_family(4, 3, 7) == random_curve_family(4, 3, 7));
  }
}
