#include "twoalg/ralgebra.hpp"

#include <algorithm>

#include "twoalg/errors.hpp"

namespace twoalg {

const char* tag_name(SummandTag t) {
  switch (t) {
    case SummandTag::LeftC: return "LEFT-C";
    case SummandTag::RightC: return "RIGHT-C";
    default: return "NONE";
  }
}

std::string c_letter_name(const std::vector<Scalar>& v) {
  int nonzero = 0, last = -1;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (v[k] != 0) {
      ++nonzero;
      last = k;
    }
  if (nonzero == 1 && v[last] == 1) return "c" + std::to_string(last + 1);
  std::string out = "(";
  bool first = true;
  for (int k = 0; k < static_cast<int>(v.size()); ++k) {
    if (v[k] == 0) continue;
    Scalar a = abs(v[k]);
    if (v[k] < 0)
      out += first ? "-" : "-";
    else if (!first)
      out += "+";
    if (a != 1) out += a.get_str();
    out += "c" + std::to_string(k + 1);
    first = false;
  }
  return out + ")";
}

std::vector<int> RAlgebra::P(int id) const {
  std::vector<int> p;
  const auto& md = algebra_.element(id).multidegree;
  for (int i = 1; i < static_cast<int>(md.size()); ++i)
    if (md[i] != 0) p.push_back(i);
  return p;
}

namespace {

// Projections for the C-slots of a word, left to right.
std::vector<const Projection*> slot_projections(const ComplementData& cd, const std::vector<int>& P, bool left_c,
                                                bool right_c) {
  std::vector<const Projection*> slots;
  int s = static_cast<int>(P.size());
  if (left_c) slots.push_back(&cd.left(P[s - 1]));
  for (int j = s - 1; j >= 1; --j) slots.push_back(&cd.T(P[j], P[j - 1]));
  if (right_c) slots.push_back(&cd.right(P[0]));
  return slots;
}

// Interleaves b-letters (decreasing) with the given C-vectors.
Word assemble(const std::vector<int>& P, bool left_c, bool right_c, const std::vector<std::vector<Scalar>>& cs) {
  Word w;
  std::size_t next = 0;
  int s = static_cast<int>(P.size());
  if (left_c) w.push_back(Letter::vector_c(cs[next++]));
  for (int j = s - 1; j >= 0; --j) {
    w.push_back(Letter::arrow_b(P[j]));
    if (j > 0) w.push_back(Letter::vector_c(cs[next++]));
  }
  if (right_c) w.push_back(Letter::vector_c(cs[next++]));
  return w;
}

std::string word_name(const Word& w) {
  std::string out;
  for (const auto& l : w) out += l.is_b() ? "b" + std::to_string(l.b) : c_letter_name(l.c);
  return out;
}

std::vector<std::vector<int>> subsets_in_order(int m) {
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= m; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i + 1;
    while (true) {
      out.push_back(idx);
      int i = s - 1;
      while (i >= 0 && idx[i] == m - s + i + 1) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

SummandTag tag_for(bool left_c, bool right_c) {
  if (left_c && !right_c) return SummandTag::LeftC;
  if (!left_c && right_c) return SummandTag::RightC;
  return SummandTag::None;
}

}  // namespace

SparseVec RAlgebra::normalize(const Word& w) const {
  if (w.empty()) return {};
  int n = family_.n();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].is_b() == w[i + 1].is_b()) return {};
  std::vector<int> bs;
  for (const auto& l : w) {
    if (l.is_b()) {
      if (l.b > family_.m()) throw InputError("letter b index out of range");
      bs.push_back(l.b);
    } else if (static_cast<int>(l.c.size()) != n) {
      throw InputError("C-letter of wrong length");
    }
  }
  for (std::size_t i = 0; i + 1 < bs.size(); ++i)
    if (bs[i] <= bs[i + 1]) return {};
  if (bs.empty()) {
    const auto& comp = components_[component_index_.at({{}, 1, 0})];
    SparseVec out;
    for (int k = 0; k < n; ++k)
      if (w[0].c[k] != 0) out.emplace_back(comp.offset + k, w[0].c[k]);
    return out;
  }
  std::vector<int> P(bs.rbegin(), bs.rend());
  bool left_c = !w.front().is_b(), right_c = !w.back().is_b();
  int u = static_cast<int>(w.size() - bs.size());
  auto it = component_index_.find({P, u, static_cast<int>(tag_for(left_c, right_c))});
  if (it == component_index_.end()) return {};
  const Component& comp = components_[it->second];

  auto slots = slot_projections(complements_, P, left_c, right_c);
  std::vector<std::vector<Scalar>> coords;
  std::size_t slot = 0;
  for (const auto& l : w) {
    if (l.is_b()) continue;
    auto x = apply(slots[slot++]->theta, l.c);
    if (std::all_of(x.begin(), x.end(), [](const Scalar& a) { return a == 0; })) return {};
    coords.push_back(std::move(x));
  }
  // Tensor product with the leftmost slot most significant.
  SparseVec out{{comp.offset, Scalar(1)}};
  for (const auto& x : coords) {
    int d = static_cast<int>(x.size());
    SparseVec next;
    for (const auto& [idx, c] : out)
      for (int k = 0; k < d; ++k)
        if (x[k] != 0) next.emplace_back(comp.offset + (idx - comp.offset) * d + k, c * x[k]);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

RAlgebra build_R(const Family& f) {
  RAlgebra r;
  r.family_ = f;
  r.complements_ = complements(f);
  int n = f.n(), m = f.m();
  std::vector<BasisElement> elems;

  auto add_component = [&](std::vector<int> P, int u, SummandTag tag, int dim) {
    Component c{std::move(P), u, tag, static_cast<int>(elems.size()), dim};
    r.component_index_[{c.P, c.u, static_cast<int>(c.tag)}] = static_cast<int>(r.components_.size());
    r.components_.push_back(std::move(c));
  };
  auto md_for = [&](const std::vector<int>& P, int u) {
    std::vector<int> md(m + 1, 0);
    md[0] = u;
    for (int p : P) md[p] = 1;
    return md;
  };

  add_component({}, 0, SummandTag::None, 2);
  for (int v = 0; v < 2; ++v) {
    BasisElement e;
    e.source = e.target = v;
    e.multidegree = md_for({}, 0);
    e.word = "e" + std::to_string(v + 1);
    elems.push_back(e);
    r.words_.emplace_back();
  }
  add_component({}, 1, SummandTag::None, n);
  for (int k = 0; k < n; ++k) {
    std::vector<Scalar> c(n);
    c[k] = 1;
    BasisElement e;
    e.source = 0;
    e.target = 1;
    e.weight = 1;
    e.multidegree = md_for({}, 1);
    e.word = c_letter_name(c);
    e.letters = {k};
    elems.push_back(e);
    r.words_.push_back({Letter::vector_c(c)});
  }

  for (const auto& P : subsets_in_order(m)) {
    int s = static_cast<int>(P.size());
    const std::pair<bool, bool> shapes[] = {{false, false}, {true, false}, {false, true}, {true, true}};
    for (auto [left_c, right_c] : shapes) {
      auto slots = slot_projections(r.complements_, P, left_c, right_c);
      int dim = 1;
      for (const auto* sl : slots) dim *= sl->space.dim();
      if (dim == 0) continue;
      int u = static_cast<int>(slots.size());
      SummandTag tag = tag_for(left_c, right_c);
      add_component(P, u, tag, dim);
      std::vector<int> digit(slots.size(), 0);
      for (int t = 0; t < dim; ++t) {
        std::vector<std::vector<Scalar>> cs;
        for (std::size_t k = 0; k < slots.size(); ++k) cs.push_back(slots[k]->space.basis_vector(digit[k]));
        Word w = assemble(P, left_c, right_c, cs);
        BasisElement e;
        e.target = w.front().is_b() ? 0 : 1;
        e.source = w.back().is_b() ? 1 : 0;
        e.weight = static_cast<int>(w.size());
        e.multidegree = md_for(P, u);
        e.tag = static_cast<int>(tag);
        e.word = word_name(w);
        for (const auto& l : w) e.letters.push_back(l.is_b() ? n + l.b - 1 : -1);
        elems.push_back(std::move(e));
        r.words_.push_back(std::move(w));
        for (int k = static_cast<int>(slots.size()) - 1; k >= 0; --k) {
          if (++digit[k] < slots[k]->space.dim()) break;
          digit[k] = 0;
        }
      }
      (void)s;
    }
  }

  int d = static_cast<int>(elems.size());
  // Temporary algebra shell so normalize() can run before the table exists.
  r.algebra_ = GradedAlgebra(2, elems, std::vector<SparseVec>(static_cast<std::size_t>(d) * d));
  std::vector<SparseVec> table(static_cast<std::size_t>(d) * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      if (elems[x].source != elems[y].target) continue;
      SparseVec p;
      if (elems[x].weight == 0)
        p = unit_vector(y);
      else if (elems[y].weight == 0)
        p = unit_vector(x);
      else {
        Word w = r.words_[x];
        w.insert(w.end(), r.words_[y].begin(), r.words_[y].end());
        p = r.normalize(w);
      }
      table[static_cast<std::size_t>(x) * d + y] = std::move(p);
    }
  r.algebra_ = GradedAlgebra(2, std::move(elems), std::move(table));
  return r;
}

std::map<std::tuple<std::vector<int>, int, int>, int> formula_dims(const Family& f) {
  std::map<std::tuple<std::vector<int>, int, int>, int> out;
  int n = f.n();
  out[{{}, 0, 0}] = 2;
  out[{{}, 1, 0}] = n;
  for (const auto& P : subsets_in_order(f.m())) {
    int s = static_cast<int>(P.size());
    int prod = 1;
    for (int j = 0; j + 1 < s; ++j) prod *= f.k(P[j]) - f.k(P[j + 1]);
    int top = f.k(P[s - 1]), bottom = n - f.k(P[0]);
    auto put = [&](int u, SummandTag t, int d) {
      if (d != 0) out[{P, u, static_cast<int>(t)}] = d;
    };
    put(s - 1, SummandTag::None, prod);
    put(s, SummandTag::LeftC, top * prod);
    put(s, SummandTag::RightC, prod * bottom);
    put(s + 1, SummandTag::None, top * prod * bottom);
  }
  return out;
}

std::optional<std::string> find_formula_mismatch(const RAlgebra& r) {
  auto expected = formula_dims(r.family());
  std::map<std::tuple<std::vector<int>, int, int>, int> built;
  for (const auto& c : r.components()) built[{c.P, c.u, static_cast<int>(c.tag)}] = c.dim;
  for (const auto& [key, d] : expected) {
    auto it = built.find(key);
    int got = it == built.end() ? 0 : it->second;
    if (got != d) return "component dimension " + std::to_string(got) + " != formula " + std::to_string(d);
  }
  for (const auto& [key, d] : built)
    if (!expected.count(key)) return "unexpected nonzero component of dimension " + std::to_string(d);
  return std::nullopt;
}

QuiverWithRelations r_presentation(const Family& f) {
  int n = f.n(), m = f.m();
  QuiverWithRelations out{two_vertex_quiver(n, m), {}};
  auto b = [n](int i) { return n + i - 1; };
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = 0; k < n; ++k) out.relations.push_back(PathVector::single(Path::of({b(i), k, b(j)})));
  for (int i = 1; i <= m; ++i)
    for (int r = 0; r < f.V(i).dim(); ++r) {
      PathVector rel;
      auto v = f.V(i).basis_vector(r);
      for (int k = 0; k < n; ++k)
        if (v[k] != 0) rel.add(Path::of({b(i), k}), v[k]);
      out.relations.push_back(std::move(rel));
    }
  for (int i = 1; i <= m; ++i)
    for (int r = 0; r < f.W(i).dim(); ++r) {
      PathVector rel;
      auto w = f.W(i).basis_vector(r);
      for (int k = 0; k < n; ++k)
        if (w[k] != 0) rel.add(Path::of({k, b(i)}), w[k]);
      out.relations.push_back(std::move(rel));
    }
  return out;
}

int default_oracle_cutoff(const Family& f) { return 2 * f.m() + 4; }

OracleReport compare_with_oracle(const RAlgebra& r, const QuotientOracle& oracle) {
  OracleReport rep;
  const auto& A = r.algebra();
  int n = r.family().n(), m = r.family().m();
  rep.closed_dim = A.dim();
  rep.oracle_dim = oracle.dim();
  if (oracle.quiver().arrow_count() != n + m || oracle.quiver().vertex_count() != 2) {
    rep.message = "oracle quiver is not Q_{n,m}";
    return rep;
  }
  std::vector<SparseVec> images;
  for (int id = 0; id < A.dim(); ++id) {
    const auto& e = A.element(id);
    if (e.weight == 0) {
      images.push_back(oracle.reduce(Path::trivial(e.source)));
      continue;
    }
    // Expand every C-letter in the standard basis of C.
    PathVector pv = PathVector::single(Path::of({}));
    for (const auto& l : r.word(id)) {
      PathVector next;
      for (const auto& t : pv.terms) {
        if (l.is_b()) {
          Path p = t.path;
          p.arrows.push_back(n + l.b - 1);
          next.add(std::move(p), t.coef);
        } else {
          for (int k = 0; k < n; ++k) {
            if (l.c[k] == 0) continue;
            Path p = t.path;
            p.arrows.push_back(k);
            next.add(std::move(p), t.coef * l.c[k]);
          }
        }
      }
      pv = std::move(next);
    }
    images.push_back(oracle.reduce(pv));
  }
  rep.bijective = is_bijective(images, oracle.dim());

  std::map<std::vector<int>, int> closed_md, oracle_md;
  for (const auto& e : A.basis()) ++closed_md[e.multidegree];
  for (const auto& p : oracle.basis()) {
    std::vector<int> md(m + 1, 0);
    for (int a : p.arrows) ++md[a < n ? 0 : a - n + 1];
    ++oracle_md[md];
  }
  rep.multidegrees_match = closed_md == oracle_md;

  GradedAlgebra O = oracle.to_algebra();
  auto fail = find_map_failure(A, O, images);
  rep.multiplicative = !fail.has_value();
  rep.first_failure = fail;
  rep.agree = rep.bijective && rep.multiplicative && rep.multidegrees_match;
  if (!rep.bijective)
    rep.message = "closed form and oracle bases are not in bijection";
  else if (!rep.multidegrees_match)
    rep.message = "per-multidegree dimensions differ";
  else if (fail)
    rep.message = "product of basis " + A.element(fail->first).word + " and " + A.element(fail->second).word +
                  " disagrees with the oracle";
  return rep;
}

OracleReport verify_against_oracle(const Family& f, int cutoff) {
  RAlgebra r = build_R(f);
  auto pres = r_presentation(f);
  auto oracle = build_oracle(pres.quiver, pres.relations, cutoff < 0 ? default_oracle_cutoff(f) : cutoff);
  return compare_with_oracle(r, oracle);
}

nlohmann::json to_json(const OracleReport& rep) {
  nlohmann::json j = {{"agree", rep.agree},
                      {"closed_dim", rep.closed_dim},
                      {"oracle_dim", rep.oracle_dim},
                      {"bijective", rep.bijective},
                      {"multiplicative", rep.multiplicative},
                      {"multidegrees_match", rep.multidegrees_match},
                      {"message", rep.message}};
  if (rep.first_failure) j["first_failure"] = {rep.first_failure->first, rep.first_failure->second};
  return j;
}

GradedAlgebra apply_grading(const GradedAlgebra& a, const std::vector<int>& chi) {
  std::vector<int> z;
  for (const auto& e : a.basis()) {
    if (e.multidegree.size() != chi.size())
      throw InputError("grading has " + std::to_string(chi.size()) + " entries, expected " +
                       std::to_string(e.multidegree.size()));
    int d = 0;
    for (std::size_t k = 0; k < chi.size(); ++k) d += chi[k] * e.multidegree[k];
    z.push_back(d);
  }
  return a.with_zdegrees(z);
}

std::vector<std::vector<int>> cartan_matrix(const GradedAlgebra& a) {
  int v = a.vertex_count();
  std::vector<std::vector<int>> c(v, std::vector<int>(v, 0));
  for (const auto& e : a.basis()) ++c[e.target][e.source];
  return c;
}

nlohmann::json to_json(const RAlgebra& r, const std::vector<int>& chi) {
  const GradedAlgebra A = chi.empty() ? r.algebra() : apply_grading(r.algebra(), chi);
  nlohmann::json basis = nlohmann::json::array();
  for (int i = 0; i < A.dim(); ++i) {
    const auto& e = A.element(i);
    basis.push_back({{"id", i},
                     {"source", e.source + 1},
                     {"target", e.target + 1},
                     {"u", r.u(i)},
                     {"P", r.P(i)},
                     {"tag", tag_name(r.tag(i))},
                     {"zdegree", e.zdegree},
                     {"word", e.word}});
  }
  nlohmann::json table = nlohmann::json::array();
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      const auto& p = A.product(i, j);
      if (p.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, c] : p) terms.push_back({k, to_string(c)});
      table.push_back({i, j, terms});
    }
  return {{"convention", "basis element with source s and target t lies in e_t R e_s"},
          {"n", r.family().n()},
          {"m", r.family().m()},
          {"dim", A.dim()},
          {"chi", chi},
          {"cartan", cartan_matrix(A)},
          {"basis", basis},
          {"structure_constants", table}};
}

}  // namespace twoalg
