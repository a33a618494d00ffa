#include "twoalg/quiverpath.hpp"

#include <algorithm>
#include <map>

#include "twoalg/errors.hpp"

namespace twoalg {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 || a.target >= vertex_count_)
      throw InputError("arrow endpoint out of range");
    if (a.source == a.target) throw InputError("quivers with loops are not supported");
  }
}

Quiver two_vertex_quiver(int n, int m) {
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) arrows.push_back({0, 1, 0, "c" + std::to_string(i)});
  for (int i = 1; i <= m; ++i) arrows.push_back({1, 0, 0, "b" + std::to_string(i)});
  return Quiver(2, std::move(arrows));
}

int path_source(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.vertex : q.arrow(p.arrows.back()).source;
}

int path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.vertex : q.arrow(p.arrows.front()).target;
}

bool is_composable(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return p.vertex >= 0 && p.vertex < q.vertex_count();
  for (int a : p.arrows)
    if (a < 0 || a >= q.arrow_count()) return false;
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (q.arrow(p.arrows[i]).source != q.arrow(p.arrows[i + 1]).target) return false;
  return true;
}

std::string path_word(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.vertex + 1);
  std::string out;
  for (int a : p.arrows) out += q.arrow(a).name.empty() ? "a" + std::to_string(a) : q.arrow(a).name;
  return out;
}

std::vector<int> QuotientOracle::dims_by_length() const {
  std::vector<int> dims;
  for (std::size_t l = 0; l + 1 < level_start_.size(); ++l) dims.push_back(level_start_[l + 1] - level_start_[l]);
  return dims;
}

int QuotientOracle::index_of(const Path& p) const {
  for (int i = 0; i < dim(); ++i) {
    const Path& b = basis_[i];
    if (b.arrows == p.arrows && (!p.arrows.empty() || b.vertex == p.vertex)) return i;
  }
  return -1;
}

SparseVec QuotientOracle::right_multiply(const SparseVec& x, int arrow) const {
  SparseBuilder acc;
  for (const auto& [i, c] : x) {
    const auto& p = rmul_[i][arrow];
    if (!p.empty()) acc.add(p, c);
  }
  return acc.take();
}

SparseVec QuotientOracle::reduce(const Path& p) const {
  if (!is_composable(quiver_, p)) return {};
  SparseVec v = unit_vector(level_start_[0] + path_target(quiver_, p));
  for (int a : p.arrows) {
    v = right_multiply(v, a);
    if (v.empty()) break;
  }
  return v;
}

SparseVec QuotientOracle::reduce(const PathVector& v) const {
  SparseBuilder acc;
  for (const auto& t : v.terms) acc.add(reduce(t.path), t.coef);
  return acc.take();
}

SparseVec QuotientOracle::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseBuilder acc;
  for (const auto& [j, cy] : y) {
    const Path& p = basis_[j];
    int t = path_target(quiver_, p);
    SparseVec v;
    for (const auto& [i, cx] : x)
      if (path_source(quiver_, basis_[i]) == t) v.emplace_back(i, cx);
    for (int a : p.arrows) {
      if (v.empty()) break;
      v = right_multiply(v, a);
    }
    acc.add(v, cy);
  }
  return acc.take();
}

PathVector QuotientOracle::to_path_vector(const SparseVec& v) const {
  PathVector out;
  for (const auto& [i, c] : v) out.add(basis_[i], c);
  return out;
}

PathVector QuotientOracle::multiply(const PathVector& x, const PathVector& y) const {
  return to_path_vector(multiply(reduce(x), reduce(y)));
}

GradedAlgebra QuotientOracle::to_algebra() const {
  std::vector<BasisElement> elems;
  for (const Path& p : basis_) {
    BasisElement b;
    b.source = path_source(quiver_, p);
    b.target = path_target(quiver_, p);
    b.weight = p.length();
    b.multidegree.assign(quiver_.arrow_count(), 0);
    for (int a : p.arrows) {
      ++b.multidegree[a];
      b.zdegree += quiver_.arrow(a).zdegree;
    }
    b.word = path_word(quiver_, p);
    b.letters = p.arrows;
    elems.push_back(std::move(b));
  }
  int n = dim();
  std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (elems[i].source != elems[j].target) continue;
      SparseVec v = unit_vector(i);
      for (int a : basis_[j].arrows) {
        v = right_multiply(v, a);
        if (v.empty()) break;
      }
      table[static_cast<std::size_t>(i) * n + j] = std::move(v);
    }
  return GradedAlgebra(quiver_.vertex_count(), std::move(elems), std::move(table));
}

namespace {

struct CheckedRelation {
  int length = 0;
  int source = 0;
  int target = 0;
  // (coef, all but the last letter, last letter)
  std::vector<std::tuple<Scalar, std::vector<int>, int>> terms;
};

CheckedRelation check_relation(const Quiver& q, const PathVector& r) {
  CheckedRelation out;
  bool first = true;
  for (const auto& t : r.terms) {
    if (t.coef == 0) continue;
    const Path& p = t.path;
    if (!is_composable(q, p)) throw InputError("malformed relation: non-composable path");
    if (p.length() < 2) throw InputError("malformed relation: path of length < 2");
    int s = path_source(q, p), tg = path_target(q, p);
    if (first) {
      out.length = p.length();
      out.source = s;
      out.target = tg;
      first = false;
    } else if (p.length() != out.length || s != out.source || tg != out.target) {
      throw InputError("malformed relation: terms differ in length or endpoints");
    }
    std::vector<int> head(p.arrows.begin(), p.arrows.end() - 1);
    out.terms.emplace_back(t.coef, std::move(head), p.arrows.back());
  }
  return out;
}

}  // namespace

QuotientOracle build_oracle(const Quiver& q, const std::vector<PathVector>& relations, int cutoff) {
  std::vector<CheckedRelation> rels;
  int max_len = 0;
  for (const auto& r : relations) {
    auto c = check_relation(q, r);
    if (c.terms.empty()) continue;
    max_len = std::max(max_len, c.length);
    rels.push_back(std::move(c));
  }
  if (cutoff < max_len) throw InputError("cutoff below maximal relation length");

  QuotientOracle o;
  o.quiver_ = q;
  o.relations_ = relations;
  o.cutoff_ = cutoff;
  for (int v = 0; v < q.vertex_count(); ++v) o.basis_.push_back(Path::trivial(v));
  o.level_start_ = {0, q.vertex_count()};
  o.rmul_.assign(o.basis_.size(), std::vector<SparseVec>(q.arrow_count()));

  // Normal form of basis_i times the letters in word, using levels built so far.
  auto fold = [&](SparseVec v, const std::vector<int>& word) {
    for (int a : word) {
      if (v.empty()) break;
      v = o.right_multiply(v, a);
    }
    return v;
  };

  for (int len = 1;; ++len) {
    int prev_begin = o.level_start_[len - 1], prev_end = o.level_start_[len];
    if (prev_begin == prev_end) break;
    if (len > cutoff) throw CutoffExceeded("cutoff exceeded: normal forms survive at path length " + std::to_string(cutoff));

    // Candidates w*a for w a normal form of length len-1.
    struct Candidate {
      std::vector<int> word;
      int prev;
      int arrow;
    };
    std::vector<Candidate> cands;
    for (int w = prev_begin; w < prev_end; ++w) {
      int src = path_source(q, o.basis_[w]);
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).target != src) continue;
        auto word = o.basis_[w].arrows;
        word.push_back(a);
        cands.push_back({std::move(word), w, a});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.word < y.word; });
    int nc = static_cast<int>(cands.size());
    // Column 0 is the lexicographically largest candidate, so pivots land on
    // large words and the surviving normal forms are the smallest ones.
    std::map<std::pair<int, int>, int> column;
    for (int i = 0; i < nc; ++i) column[{cands[i].prev, cands[i].arrow}] = nc - 1 - i;

    RowEchelon ech(nc);
    for (const auto& r : rels) {
      if (r.length > len) continue;
      int pad = len - r.length;
      for (int p = o.level_start_[pad]; p < o.level_start_[pad + 1]; ++p) {
        if (path_source(q, o.basis_[p]) != r.target) continue;
        SparseBuilder row;
        for (const auto& [coef, head, last] : r.terms) {
          SparseVec nf = fold(unit_vector(p), head);
          for (const auto& [w, c] : nf) row.add(column.at({w, last}), coef * c);
        }
        SparseVec v = row.take();
        if (!v.empty()) ech.insert(v);
      }
    }
    ech.make_reduced();

    std::vector<int> new_id(nc, -1);
    for (int i = 0; i < nc; ++i) {
      int col = nc - 1 - i;
      if (ech.is_pivot(col)) continue;
      new_id[col] = static_cast<int>(o.basis_.size());
      o.basis_.push_back(Path::of(cands[i].word));
    }
    o.level_start_.push_back(static_cast<int>(o.basis_.size()));
    o.rmul_.resize(o.basis_.size(), std::vector<SparseVec>(q.arrow_count()));
    for (int i = 0; i < nc; ++i) {
      int col = nc - 1 - i;
      SparseVec nf;
      if (!ech.is_pivot(col)) {
        nf = unit_vector(new_id[col]);
      } else {
        SparseBuilder acc;
        const auto& row = ech.row_for_pivot(col);
        for (std::size_t k = 1; k < row.size(); ++k) acc.add(new_id[row[k].first], -row[k].second);
        nf = acc.take();
      }
      o.rmul_[cands[i].prev][cands[i].arrow] = std::move(nf);
    }
  }
  return o;
}

QuiverWithRelations green_quiver(int l) {
  if (l < 0) throw InputError("green_quiver: l must be nonnegative");
  int m = l / 2;
  int n = l - m;
  QuiverWithRelations out{two_vertex_quiver(n, m), {}};
  auto c = [](int j) { return j - 1; };
  auto b = [n](int i) { return n + i - 1; };
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= n; ++j) out.relations.push_back(PathVector::single(Path::of({b(i), c(j)})));
  for (int j = 1; j <= n; ++j)
    for (int i = j; i <= m; ++i) out.relations.push_back(PathVector::single(Path::of({c(j), b(i)})));
  return out;
}

QuiverWithRelations kk_quiver(int n) {
  if (n < 1) throw InputError("kk_quiver: n must be positive");
  QuiverWithRelations out{two_vertex_quiver(n, n), {}};
  auto c = [](int j) { return j - 1; };
  auto b = [n](int i) { return n + i - 1; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) out.relations.push_back(PathVector::single(Path::of({b(i), c(k), b(j)})));
  for (int i = 1; i <= n; ++i) out.relations.push_back(PathVector::single(Path::of({b(i), c(i)})));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) out.relations.push_back(PathVector::single(Path::of({c(j), b(i)})));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PathVector r = PathVector::single(Path::of({c(j), b(i)}));
      r.add(Path::of({c(i), b(i)}), -1);
      out.relations.push_back(std::move(r));
    }
  return out;
}

}  // namespace twoalg
