#include "twoalg/curve.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "twoalg/errors.hpp"

namespace twoalg {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

void require_curve_family(const Family& f) {
  if (f.n() != 2) throw InputError("curve families need n = 2");
  for (int i = 1; i <= f.m(); ++i)
    if (f.k(i) != 1) throw InputError("curve families need dim V_i = 1");
  auto cert = check_G(f);
  if (!cert.passed)
    throw InputError("transversality fails at (" + std::to_string(cert.first_failure->first) + "," +
                     std::to_string(cert.first_failure->second) + ")");
}

// Vertex id of V_i and W_i in the graph.
std::pair<int, int> endpoints(const CurveGraph& g, int i) {
  for (const auto& e : g.edges)
    if (e.label == i) return {e.to, e.from};
  throw InputError("no edge with label " + std::to_string(i));
}

}  // namespace

std::string P1Point::to_string() const { return a.get_str() + ":" + b.get_str(); }

P1Point line_to_point(const Subspace& V) {
  if (V.ambient() != 2 || V.dim() != 1) throw InputError("line_to_point needs a line in k^2");
  auto v = V.basis_vector(0);
  const Scalar& lead = v[0] != 0 ? v[0] : v[1];
  return {v[0] / lead, v[1] / lead};
}

CurveGraph build_graph(const Family& f) {
  require_curve_family(f);
  CurveGraph g;
  auto vertex_of = [&](const P1Point& p, const std::string& label) {
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
      if (g.vertices[v] == p) {
        g.vertex_labels[v].push_back(label);
        return v;
      }
    g.vertices.push_back(p);
    g.vertex_labels.push_back({label});
    return static_cast<int>(g.vertices.size()) - 1;
  };
  for (int i = 1; i <= f.m(); ++i) {
    int to = vertex_of(line_to_point(f.V(i)), "V" + std::to_string(i));
    int from = vertex_of(line_to_point(f.W(i)), "W" + std::to_string(i));
    g.edges.push_back({from, to, i});
  }
  const int nv = static_cast<int>(g.vertices.size());
  UnionFind uf(nv);
  for (const auto& e : g.edges) uf.unite(e.from, e.to);
  std::vector<int> slot(nv, -1);
  for (int v = 0; v < nv; ++v) {
    int r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(g.components.size());
      g.components.emplace_back();
    }
    g.components[slot[r]].push_back(v);
  }
  g.cycle_rank = static_cast<int>(g.edges.size()) - nv + static_cast<int>(g.components.size());
  return g;
}

bool is_modest(const CurveGraph& g) { return g.cycle_rank == 0; }

AffineChart affine_chart(const CurveGraph& g) {
  AffineChart c;
  bool infinity = false;
  std::set<Scalar> occupied;
  for (const auto& p : g.vertices) {
    if (p.at_infinity())
      infinity = true;
    else
      occupied.insert(p.a / p.b);
  }
  if (infinity) {
    c.shifted = true;
    while (occupied.count(c.q)) c.q += 1;
  }
  for (const auto& p : g.vertices) {
    if (!infinity)
      c.coordinate.push_back(p.a / p.b);
    else if (p.at_infinity())
      c.coordinate.push_back(0);
    else
      c.coordinate.push_back(Scalar(1) / (p.a / p.b - c.q));
  }
  return c;
}

Matrix lambda_matrix(const Family& f, int d) {
  if (d < 0) throw InputError("degree bound must be non-negative");
  CurveGraph g = build_graph(f);
  AffineChart chart = affine_chart(g);
  const int m = f.m();
  Matrix lam(2 * m, d + 1 + m);
  for (int i = 1; i <= m; ++i) {
    auto [v, w] = endpoints(g, i);
    int row = 2 * (i - 1);
    for (int pt : {v, w}) {
      Scalar power = 1;
      for (int e = 0; e <= d; ++e) {
        lam.at(row, e) = power;
        power *= chart.coordinate[pt];
      }
      lam.at(row, d + i) = -1;
      ++row;
    }
  }
  return lam;
}

LambdaRank lambda_rank(const Family& f, int d) {
  CurveGraph g = build_graph(f);
  const int floor = std::max(0, static_cast<int>(g.vertices.size()) - 1);
  if (d < 0) d = floor;
  if (d < floor) throw InputError("degree bound below #points - 1");
  LambdaRank r;
  r.d = d;
  r.rank = rank(lambda_matrix(f, d));
  r.surjective = r.rank == 2 * f.m();
  r.stabilized = r.rank == rank(lambda_matrix(f, d + 1));
  return r;
}

bool forest_lambda_consistency(const Family& f) { return is_modest(build_graph(f)) == lambda_rank(f).surjective; }

ForestReduction spanning_forest_reduce(const Family& f) {
  CurveGraph g = build_graph(f);
  UnionFind uf(static_cast<int>(g.vertices.size()));
  ForestReduction out;
  std::vector<SubspacePair> pairs;
  for (const auto& e : g.edges) {
    if (uf.unite(e.from, e.to)) {
      out.kept.push_back(e.label);
      pairs.push_back(f.pairs()[e.label - 1]);
    } else {
      out.dropped.push_back(e.label);
    }
  }
  out.family = Family(f.n(), std::move(pairs));
  return out;
}

std::vector<std::vector<Scalar>> coordinate_ring_basis(const Family& f, int d) {
  Matrix lam = lambda_matrix(f, d);
  const int cols = lam.cols();
  if (lam.rows() == 0) {
    std::vector<std::vector<Scalar>> out;
    for (int j = 0; j < cols; ++j) {
      std::vector<Scalar> e(cols, 0);
      e[j] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  std::vector<SparseVec> columns;
  for (const auto& col : lam.transposed().to_rows()) columns.push_back(sparse_from_dense(col));
  std::vector<std::vector<Scalar>> out;
  for (const auto& k : kernel_of_rows(columns, lam.rows())) out.push_back(dense_from_sparse(k, cols));
  return out;
}

CurveReport curve_report(const Family& f) {
  CurveReport r;
  r.graph = build_graph(f);
  r.modest = is_modest(r.graph);
  r.lambda = lambda_rank(f);
  r.consistent = r.modest == r.lambda.surjective;
  r.distinct_points = static_cast<int>(r.graph.vertices.size());
  std::vector<bool> has_edge(r.graph.components.size(), false);
  std::vector<int> comp_of(r.graph.vertices.size());
  for (int c = 0; c < static_cast<int>(r.graph.components.size()); ++c)
    for (int v : r.graph.components[c]) comp_of[v] = c;
  for (const auto& e : r.graph.edges) has_edge[comp_of[e.from]] = true;
  for (int c = 0; c < static_cast<int>(r.graph.components.size()); ++c)
    if (has_edge[c]) {
      ++r.singular_points;
      r.branches.push_back(static_cast<int>(r.graph.components[c].size()));
    }
  return r;
}

Family random_curve_family(int m, int pool, std::uint64_t seed) {
  if (m < 0 || pool < 2) throw InputError("random_curve_family needs m >= 0 and a pool of at least 2 points");
  std::mt19937_64 rng(seed);
  std::vector<Subspace> points;
  for (int attempt = 0; static_cast<int>(points.size()) < pool; ++attempt) {
    if (attempt > 100 * pool) throw InputError("could not draw enough distinct points");
    Subspace p = random_subspace(2, 1, rng);
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<SubspacePair> pairs;
    for (int i = 0; i < m; ++i) {
      const auto& v = points[rng() % pool];
      const auto& w = points[rng() % pool];
      pairs.push_back({v, w});
    }
    Family f(2, std::move(pairs));
    if (check_G(f).passed) return f;
  }
  throw InputError("random_curve_family: 1000 consecutive draws violate transversality");
}

nlohmann::json to_json(const CurveGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    vertices.push_back({{"point", g.vertices[v].to_string()}, {"labels", g.vertex_labels[v]}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({{"label", e.label}, {"from", e.from}, {"to", e.to}});
  return {{"vertices", vertices}, {"edges", edges}, {"components", g.components}, {"cycle_rank", g.cycle_rank}};
}

nlohmann::json to_json(const CurveReport& r) {
  return {{"graph", to_json(r.graph)},
          {"modest", r.modest},
          {"lambda", {{"d", r.lambda.d}, {"rank", r.lambda.rank}, {"surjective", r.lambda.surjective},
                      {"stabilized", r.lambda.stabilized}}},
          {"singular_points", r.singular_points},
          {"branches", r.branches},
          {"distinct_points", r.distinct_points},
          {"consistent", r.consistent}};
}

}  // namespace twoalg
