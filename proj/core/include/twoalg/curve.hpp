#pragma once

// Families with n = 2, k = 1 seen as pairs of points on P^1: the gluing graph,
// modesty (the graph is a forest), the evaluation map λ_d and its kernel.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoalg/exactla.hpp"
#include "twoalg/family.hpp"

namespace twoalg {

// (a:b) with the first nonzero coordinate equal to 1.
struct P1Point {
  Scalar a;
  Scalar b;

  bool at_infinity() const { return b == 0; }
  std::string to_string() const;
  friend bool operator==(const P1Point& x, const P1Point& y) { return x.a == y.a && x.b == y.b; }
};

P1Point line_to_point(const Subspace& V);

struct CurveGraph {
  struct Edge {
    int from;   // W_i's point
    int to;     // V_i's point
    int label;  // i, 1-based
  };
  std::vector<P1Point> vertices;
  std::vector<std::vector<std::string>> vertex_labels;  // e.g. "V1", "W2"
  std::vector<Edge> edges;
  std::vector<std::vector<int>> components;  // vertex ids, ordered by first vertex
  int cycle_rank = 0;
};

// Requires n = 2, k = 1 and condition (G).
CurveGraph build_graph(const Family& f);
bool is_modest(const CurveGraph& g);

// Affine coordinates of the graph's vertices. z = a/b, or 1/(a/b - q) for the
// least integer q >= 0 not already a coordinate when some point is (1:0).
struct AffineChart {
  std::vector<Scalar> coordinate;
  bool shifted = false;
  Scalar q = 0;
};

AffineChart affine_chart(const CurveGraph& g);

// Rows v_1, w_1, v_2, w_2, ...; columns 1, z, ..., z^d, then -e_i.
Matrix lambda_matrix(const Family& f, int d);

struct LambdaRank {
  int d = 0;
  int rank = 0;
  bool surjective = false;
  bool stabilized = false;  // rank at d equals rank at d + 1
};

// d < 0 picks #distinct points - 1. Throws InputError when d is below that.
LambdaRank lambda_rank(const Family& f, int d = -1);
bool forest_lambda_consistency(const Family& f);

struct ForestReduction {
  Family family;
  std::vector<int> kept;     // 1-based labels
  std::vector<int> dropped;  // 1-based labels
};

// Keeps edges in label order whenever they join two components.
ForestReduction spanning_forest_reduce(const Family& f);

// Basis of ker λ_d as vectors (f_0, ..., f_d, a_1, ..., a_m).
std::vector<std::vector<Scalar>> coordinate_ring_basis(const Family& f, int d);

struct CurveReport {
  CurveGraph graph;
  bool modest = false;
  LambdaRank lambda;
  int singular_points = 0;
  std::vector<int> branches;  // per singular point
  int distinct_points = 0;    // c, at most 2m
  bool consistent = false;    // modest == λ surjective
};

CurveReport curve_report(const Family& f);

// n = 2, k = 1 family of m pairs drawn from a pool of random points, redrawn until (G) holds.
Family random_curve_family(int m, int pool, std::uint64_t seed);

nlohmann::json to_json(const CurveGraph& g);
nlohmann::json to_json(const CurveReport& r);

}  // namespace twoalg
