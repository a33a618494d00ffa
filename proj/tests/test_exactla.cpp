#include <doctest.h>

#include "helpers.hpp"
#include "twoalg/errors.hpp"
#include "twoalg/exactla.hpp"

using namespace twoalg;
using testing::span;

TEST_SUITE("exactla") {
  TEST_CASE("rref of the identity") {
    auto r = rref(Matrix::identity(2));
    CHECK(r.rank == 2);
    CHECK(r.form == Matrix::identity(2));
  }

  TEST_CASE("rref of a rank one matrix") {
    auto r = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.form == Matrix::from_rows({{1, 2}, {0, 0}}));
  }

  TEST_CASE("rank of a dependent 3x3") { CHECK(rank(Matrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 2}})) == 2); }

  TEST_CASE("rationals stay exact") {
    auto r = rref(Matrix::from_rows({{3, 1}, {1, Scalar(1, 3)}}));
    CHECK(r.rank == 1);
    CHECK(r.form.at(0, 1) == Scalar(1, 3));
    CHECK(to_string(Scalar(-6, 4)) == "-3/2");
    CHECK(to_string(Scalar(5)) == "5/1");
    CHECK(parse_scalar("-3/2") == Scalar(-3, 2));
    CHECK(parse_scalar("7") == 7);
    CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
    CHECK_THROWS_AS(parse_scalar("x"), InputError);
  }

  TEST_CASE("inverse") {
    auto inv = inverse(Matrix::from_rows({{2, 1}, {1, 1}}));
    REQUIRE(inv);
    CHECK(*inv == Matrix::from_rows({{1, -1}, {-1, 2}}));
    CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
  }

  TEST_CASE("intersections") {
    auto U = span(2, {{1, 0}});
    CHECK(intersect(U, U) == U);
    CHECK(intersect(span(2, {{1, 0}}), span(2, {{0, 1}})).dim() == 0);
    CHECK(intersect(span(3, {{1, 0, 0}, {0, 1, 0}}), span(3, {{0, 1, 0}, {0, 0, 1}})) == span(3, {{0, 1, 0}}));
  }

  TEST_CASE("sums") {
    auto U = span(3, {{1, 2, 3}});
    CHECK(sum(U, Subspace(3)) == U);
    CHECK(sum(span(2, {{1, 0}}), span(2, {{0, 1}})) == Subspace::full(2));
    CHECK(sum(span(3, {{1, 1, 0}}), span(3, {{1, 0, 0}, {0, 0, 1}})) == Subspace::full(3));
  }

  TEST_CASE("coordinate complements") {
    CHECK(coordinate_complement(Subspace::full(3)).dim() == 0);
    CHECK(coordinate_complement(span(2, {{1, 0}})) == span(2, {{0, 1}}));
    CHECK(coordinate_complement(span(3, {{1, 2, 0}, {0, 0, 1}})) == span(3, {{0, 1, 0}}));
  }

  TEST_CASE("projections along a complement") {
    CHECK(projection_along(Subspace(3), Subspace::full(3)) == Matrix::identity(3));
    CHECK(projection_along(span(2, {{1, 0}}), span(2, {{0, 1}})) == Matrix::from_rows({{0, 1}}));
    CHECK(projection_along(span(2, {{1, 1}}), span(2, {{1, 0}})) == Matrix::from_rows({{1, -1}}));
  }

  TEST_CASE("random subspaces") {
    CHECK(random_subspace(4, 0, 11).dim() == 0);
    CHECK(random_subspace(4, 4, 11) == Subspace::full(4));
    auto a = random_subspace(2, 1, 12345);
    CHECK(a == random_subspace(2, 1, 12345));
    CHECK(a.dim() == 1);
    auto b = random_subspace(5, 3, 7);
    CHECK(b.dim() == 3);
  }

  TEST_CASE("kernel of rows") {
    std::vector<SparseVec> rows{sparse_from_dense({1, 2}), sparse_from_dense({2, 4}), sparse_from_dense({0, 1})};
    auto k = kernel_of_rows(rows, 2);
    REQUIRE(k.size() == 1);
    SparseBuilder acc;
    for (const auto& [i, c] : k[0]) acc.add(rows[i], c);
    CHECK(acc.take().empty());
  }

  TEST_CASE("row echelon reduce and contains") {
    RowEchelon e(3);
    CHECK(e.insert(sparse_from_dense({1, 1, 0})));
    CHECK(e.insert(sparse_from_dense({0, 1, 1})));
    CHECK_FALSE(e.insert(sparse_from_dense({1, 2, 1})));
    CHECK(e.contains(sparse_from_dense({2, 3, 1})));
    CHECK_FALSE(e.contains(sparse_from_dense({0, 0, 1})));
    CHECK(e.rank() == 2);
  }

  TEST_CASE("subspace containment and validation") {
    auto V = span(3, {{1, 1, 0}, {0, 0, 2}});
    CHECK(V.contains({3, 3, 5}));
    CHECK_FALSE(V.contains({1, 0, 0}));
    CHECK(V.dim() == 2);
  }
}
