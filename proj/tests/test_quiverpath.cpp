#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "twoalg/errors.hpp"
#include "twoalg/quiverpath.hpp"

using namespace twoalg;

namespace {

// All composable paths of length exactly len, leftmost letter first.
std::vector<std::vector<int>> paths_of_length(const Quiver& q, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) return out;
  for (int a = 0; a < q.arrow_count(); ++a) out.push_back({a});
  for (int l = 1; l < len; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out)
      for (int a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(p.back()).source == q.arrow(a).target) {
          auto x = p;
          x.push_back(a);
          next.push_back(std::move(x));
        }
    out = std::move(next);
  }
  return out;
}

// dim of (kQ/I)_len computed from scratch: span of u r v for all paths u, v, relations r.
int brute_force_dim(const Quiver& q, const std::vector<PathVector>& rels, int len) {
  if (len == 0) return q.vertex_count();
  auto paths = paths_of_length(q, len);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) index[paths[i]] = i;
  std::vector<SparseVec> ideal;
  for (const auto& r : rels) {
    const int rl = r.terms.front().path.length();
    if (rl > len) continue;
    const Path& p0 = r.terms.front().path;
    int rs = path_source(q, p0), rt = path_target(q, p0);
    for (int left = 0; left <= len - rl; ++left) {
      const int right = len - rl - left;
      auto us = left == 0 ? std::vector<std::vector<int>>{{}} : paths_of_length(q, left);
      auto vs = right == 0 ? std::vector<std::vector<int>>{{}} : paths_of_length(q, right);
      for (const auto& u : us) {
        if (!u.empty() && q.arrow(u.back()).source != rt) continue;
        for (const auto& v : vs) {
          if (!v.empty() && q.arrow(v.front()).target != rs) continue;
          SparseBuilder acc;
          for (const auto& t : r.terms) {
            auto w = u;
            w.insert(w.end(), t.path.arrows.begin(), t.path.arrows.end());
            w.insert(w.end(), v.begin(), v.end());
            acc.add(index.at(w), t.coef);
          }
          ideal.push_back(acc.take());
        }
      }
    }
  }
  return static_cast<int>(paths.size()) - rank_of(ideal, static_cast<int>(paths.size()));
}

std::set<std::string> words(const QuotientOracle& o) {
  std::set<std::string> out;
  for (const auto& p : o.basis()) out.insert(path_word(o.quiver(), p));
  return out;
}

}  // namespace

TEST_SUITE("quiverpath") {
  TEST_CASE("Kronecker quiver has dimension n + 2") {
    for (int n = 1; n <= 4; ++n) CHECK(build_oracle(two_vertex_quiver(n, 0), {}, 3).dim() == n + 2);
  }

  TEST_CASE("G2 basis by hand") {
    auto g = green_quiver(2);
    auto o = build_oracle(g.quiver, g.relations, 6);
    CHECK(o.dim() == 5);
    CHECK(words(o) == std::set<std::string>{"e1", "e2", "c1", "b1", "b1c1"});
  }

  TEST_CASE("G3 basis by hand") {
    auto g = green_quiver(3);
    auto o = build_oracle(g.quiver, g.relations, 8);
    CHECK(o.dim() == 8);
    CHECK(words(o) == std::set<std::string>{"e1", "e2", "c1", "c2", "b1", "b1c1", "c2b1", "c2b1c1"});
  }

  TEST_CASE("products in G2") {
    auto g = green_quiver(2);
    auto o = build_oracle(g.quiver, g.relations, 6);
    const int c1 = 0, b1 = 1;
    auto e1 = o.reduce(Path::trivial(0));
    CHECK(o.multiply(e1, e1) == e1);
    CHECK(o.multiply(o.reduce(Path::of({c1})), o.reduce(Path::of({b1}))).empty());
    auto bc = o.multiply(o.reduce(Path::of({b1})), o.reduce(Path::of({c1})));
    CHECK(bc == o.reduce(Path::of({b1, c1})));
    CHECK_FALSE(bc.empty());
  }

  TEST_CASE("green quiver relations") {
    auto g1 = green_quiver(1);
    CHECK(g1.quiver.arrow_count() == 1);
    CHECK(g1.relations.empty());
    auto g2 = green_quiver(2);
    REQUIRE(g2.relations.size() == 1);
    CHECK(path_word(g2.quiver, g2.relations[0].terms[0].path) == "c1b1");
    auto g5 = green_quiver(5);
    std::set<std::string> rel;
    for (const auto& r : g5.relations) rel.insert(path_word(g5.quiver, r.terms[0].path));
    CHECK(rel == std::set<std::string>{"b1c2", "b1c3", "b2c3", "c1b1", "c1b2", "c2b2"});
  }

  TEST_CASE("Kirkman-Kuzmanovich relations") {
    CHECK(kk_quiver(1).relations.size() == 2);
    CHECK(kk_quiver(2).relations.size() == 12);
    auto kk = kk_quiver(2);
    auto o = build_oracle(kk.quiver, kk.relations, 6);
    auto dims = o.dims_by_length();
    for (std::size_t len = 4; len < dims.size(); ++len) CHECK(dims[len] == 0);  // rad^4 = 0
    CHECK(dims[3] > 0);
    CHECK(o.dim() == 12);
  }

  TEST_CASE("oracle agrees with brute-force path enumeration") {
    std::vector<QuiverWithRelations> cases{green_quiver(2), green_quiver(3), green_quiver(5), kk_quiver(1),
                                           kk_quiver(2), kk_quiver(3), {two_vertex_quiver(3, 0), {}}};
    for (const auto& c : cases) {
      auto o = build_oracle(c.quiver, c.relations, 9);
      auto dims = o.dims_by_length();
      for (int len = 0; len < 9; ++len) {
        int want = brute_force_dim(c.quiver, c.relations, len);
        int got = len < static_cast<int>(dims.size()) ? dims[len] : 0;
        CHECK(got == want);
      }
    }
  }

  TEST_CASE("oracle algebra is associative") {
    auto kk = kk_quiver(2);
    auto a = build_oracle(kk.quiver, kk.relations, 6).to_algebra();
    CHECK_FALSE(find_associativity_failure(a));
    CHECK_FALSE(find_structure_failure(a));
  }

  TEST_CASE("cutoff is enforced") {
    CHECK_THROWS_AS(build_oracle(two_vertex_quiver(1, 1), {}, 4), CutoffExceeded);
  }

  TEST_CASE("malformed relations are rejected") {
    auto q = two_vertex_quiver(1, 1);
    // c1 c1 is not composable
    CHECK_THROWS_AS(build_oracle(q, {PathVector::single(Path::of({0, 0}))}, 4), InputError);
  }
}
