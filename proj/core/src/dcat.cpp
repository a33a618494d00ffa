#include "twoalg/dcat.hpp"

#include <algorithm>
#include <tuple>

#include "twoalg/errors.hpp"
#include "twoalg/ralgebra.hpp"

namespace twoalg {

namespace {

PathVector combination(const std::vector<int>& prefix, const std::vector<Scalar>& c, int n) {
  PathVector pv;
  for (int l = 0; l < n; ++l) {
    if (c[l] == 0) continue;
    auto arrows = prefix;
    arrows.push_back(l);
    pv.add(Path::of(arrows), c[l]);
  }
  return pv;
}

int required_k(const Family& f) {
  if (f.m() == 0) return 0;
  if (!f.is_equidimensional()) throw InputError("D_F needs an equidimensional family");
  if (f.k(1) < 1) throw InputError("D_F needs dim V_i >= 1");
  return f.k(1);
}

int beta_index(int n, int k, int i) { return n + (i - 1) * (k + 1); }

std::string degree_key(int p) { return std::to_string(p); }

nlohmann::json dims_json(const DegreeDims& d) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [p, v] : d) j[degree_key(p)] = v;
  return j;
}

void add_entry(HomMatrix& into, const std::pair<int, int>& key, const SparseVec& v, const Scalar& coef) {
  if (v.empty()) return;
  auto it = into.find(key);
  SparseVec sum = it == into.end() ? scaled(v, coef) : axpy(it->second, coef, v);
  if (sum.empty()) {
    if (it != into.end()) into.erase(it);
  } else {
    into[key] = std::move(sum);
  }
}

}  // namespace

std::string DAlgebra::vertex_name(int v) const {
  if (v == 0) return "1";
  if (v == 1) return "2";
  return "l" + std::to_string(v - 1);
}

int DAlgebra::arrow_beta(int i) const { return beta_index(family_.n(), k_, i); }
int DAlgebra::arrow_phi(int i, int j) const { return arrow_beta(i) + j; }

SparseVec DAlgebra::c_element(const std::vector<Scalar>& c) const {
  return oracle_.reduce(combination({}, c, family_.n()));
}
SparseVec DAlgebra::beta(int i) const { return oracle_.reduce(Path::of({arrow_beta(i)})); }
SparseVec DAlgebra::phi(int i, int j) const { return oracle_.reduce(Path::of({arrow_phi(i, j)})); }
SparseVec DAlgebra::phi_times(int i, int j, const std::vector<Scalar>& c) const {
  return oracle_.reduce(combination({arrow_phi(i, j)}, c, family_.n()));
}

QuiverWithRelations d_presentation(const Family& f, const std::vector<int>& delta) {
  const int n = f.n(), m = f.m(), k = required_k(f);
  if (static_cast<int>(delta.size()) != m) throw InputError("delta needs one entry per pair");
  std::vector<Arrow> arrows;
  for (int l = 1; l <= n; ++l) arrows.push_back({0, 1, 0, "c" + std::to_string(l)});
  for (int i = 1; i <= m; ++i) {
    arrows.push_back({1, 1 + i, 0, "beta" + std::to_string(i)});
    for (int j = 1; j <= k; ++j)
      arrows.push_back({1, 1 + i, delta[i - 1], "phi" + std::to_string(i) + "_" + std::to_string(j)});
  }
  QuiverWithRelations qr{Quiver(m + 2, std::move(arrows)), {}};
  for (int i = 1; i <= m; ++i) {
    const int b = beta_index(n, k, i);
    const Subspace& V = f.V(i);
    const Subspace& W = f.W(i);
    for (int r = 0; r < V.dim(); ++r) qr.relations.push_back(combination({b}, V.basis_vector(r), n));
    for (int j = 1; j <= k; ++j) {
      for (int r = 0; r < W.dim(); ++r) qr.relations.push_back(combination({b + j}, W.basis_vector(r), n));
      for (int l = 1; l <= k; ++l)
        if (l != j) qr.relations.push_back(combination({b + j}, V.basis_vector(l - 1), n));
      if (j > 1) {
        PathVector pv = combination({b + j}, V.basis_vector(j - 1), n);
        for (auto& t : combination({b + 1}, V.basis_vector(0), n).terms) pv.add(t.path, -t.coef);
        qr.relations.push_back(std::move(pv));
      }
    }
  }
  return qr;
}

DAlgebra build_D(const Family& f, const std::vector<int>& delta) {
  complements(f);  // transversality
  DAlgebra d;
  d.family_ = f;
  d.delta_ = delta;
  d.k_ = required_k(f);
  auto qr = d_presentation(f, delta);
  d.oracle_ = build_oracle(qr.quiver, qr.relations, 3);
  d.algebra_ = d.oracle_.to_algebra();
  return d;
}

HomMatrix compose(const GradedAlgebra& d, const HomMatrix& g, const HomMatrix& f) {
  std::multimap<int, std::pair<int, const SparseVec*>> by_target;  // u -> (r, f[u][r])
  for (const auto& [key, v] : f) by_target.emplace(key.first, std::make_pair(key.second, &v));
  HomMatrix out;
  for (const auto& [key, gv] : g) {
    auto [lo, hi] = by_target.equal_range(key.second);
    for (auto it = lo; it != hi; ++it) add_entry(out, {key.first, it->second.first}, d.multiply(gv, *it->second.second), 1);
  }
  return out;
}

HomMatrix add(const HomMatrix& a, const HomMatrix& b, const Scalar& coef) {
  HomMatrix out = a;
  for (const auto& [key, v] : b) add_entry(out, key, v, coef);
  return out;
}

bool is_zero(const HomMatrix& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second.empty(); });
}

std::optional<std::string> find_complex_failure(const GradedAlgebra& d, const TwistedComplex& x) {
  const int s = static_cast<int>(x.summands.size());
  for (const auto& [key, v] : x.differential) {
    auto [t, r] = key;
    if (t < 0 || r < 0 || t >= s || r >= s) return x.name + ": entry outside the summand range";
    if (t >= r) return x.name + ": differential is not strictly lower triangular";
    const int want = 1 + x.summands[t].shift - x.summands[r].shift;
    for (const auto& [e, c] : v) {
      const auto& b = d.element(e);
      if (b.source != x.summands[r].vertex || b.target != x.summands[t].vertex)
        return x.name + ": entry " + x.summands[r].label + " -> " + x.summands[t].label + " has wrong endpoints";
      if (b.zdegree != want)
        return x.name + ": entry " + x.summands[r].label + " -> " + x.summands[t].label + " has degree " +
               std::to_string(b.zdegree) + ", expected " + std::to_string(want);
    }
  }
  if (!is_zero(compose(d, x.differential, x.differential))) return x.name + ": d^2 != 0";
  return std::nullopt;
}

std::vector<TwistedComplex> projectives(const DAlgebra& d) {
  std::vector<TwistedComplex> out;
  for (int v = 0; v < d.family().m() + 2; ++v)
    out.push_back({"Q_" + d.vertex_name(v), {{v, 0, "Q_" + d.vertex_name(v)}}, {}});
  return out;
}

PKComplexes build_P1_P2_K(const DAlgebra& d) {
  const Family& f = d.family();
  const int m = f.m(), k = d.k();
  PKComplexes pk;

  // P1 = Cone(Q_1 -> ⊕ Q_{l_i}[δ_i]), the map being φ_i1 v_i1 in each component.
  pk.P1.name = "P1";
  for (int i = 1; i <= m; ++i)
    pk.P1.summands.push_back({DAlgebra::vertex_l(i), d.delta()[i - 1], "Q_l" + std::to_string(i)});
  pk.P1.summands.push_back({DAlgebra::vertex_one(), 1, "Q_1"});
  for (int i = 1; i <= m; ++i) pk.P1.differential[{i - 1, m}] = d.phi_times(i, 1, f.V(i).basis_vector(0));

  // P2 = Cone(Q_2 -> ⊕ V_i ⊗ Q_{l_i}[δ_i]), the map being Σ_j v_ij ⊗ φ_ij.
  pk.P2.name = "P2";
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= k; ++j)
      pk.P2.summands.push_back(
          {DAlgebra::vertex_l(i), d.delta()[i - 1], "Q_l" + std::to_string(i) + "^" + std::to_string(j)});
  pk.P2.summands.push_back({DAlgebra::vertex_two(), 1, "Q_2"});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= k; ++j) pk.P2.differential[{(i - 1) * k + j - 1, m * k}] = d.phi(i, j);

  // K_i = Tot(V_i ⊗ Q_1 -> Q_2 -> Q_{l_i}).
  for (int i = 1; i <= m; ++i) {
    TwistedComplex K;
    K.name = "K" + std::to_string(i);
    K.summands.push_back({DAlgebra::vertex_l(i), 0, "Q_l" + std::to_string(i)});
    K.summands.push_back({DAlgebra::vertex_two(), 1, "Q_2"});
    for (int j = 1; j <= k; ++j) K.summands.push_back({DAlgebra::vertex_one(), 2, "Q_1^" + std::to_string(j)});
    K.differential[{0, 1}] = d.beta(i);
    for (int j = 1; j <= k; ++j) K.differential[{1, 1 + j}] = d.c_element(f.V(i).basis_vector(j - 1));
    pk.K.push_back(std::move(K));
  }
  return pk;
}

const std::vector<HomComplex::Entry> HomComplex::empty_{};

HomComplex::HomComplex(const GradedAlgebra& d, TwistedComplex x, TwistedComplex y)
    : d_(&d), x_(std::move(x)), y_(std::move(y)) {
  for (int t = 0; t < static_cast<int>(y_.summands.size()); ++t)
    for (int r = 0; r < static_cast<int>(x_.summands.size()); ++r)
      for (int e : d.elements_between(x_.summands[r].vertex, y_.summands[t].vertex)) {
        const int p = d.element(e).zdegree + x_.summands[r].shift - y_.summands[t].shift;
        auto& list = basis_[p];
        index_[{t, r, e}] = {p, static_cast<int>(list.size())};
        list.push_back({t, r, e});
      }
}

std::vector<int> HomComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [p, list] : basis_) out.push_back(p);
  return out;
}

int HomComplex::dim(int p) const {
  auto it = basis_.find(p);
  return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<HomComplex::Entry>& HomComplex::basis(int p) const {
  auto it = basis_.find(p);
  return it == basis_.end() ? empty_ : it->second;
}

SparseVec HomComplex::to_coords(int p, const HomMatrix& f) const {
  SparseBuilder acc;
  for (const auto& [key, v] : f)
    for (const auto& [e, c] : v) {
      auto it = index_.find({key.first, key.second, e});
      if (it == index_.end()) throw VerificationError(x_.name + " -> " + y_.name + ": component with wrong endpoints");
      if (it->second.first != p)
        throw VerificationError(x_.name + " -> " + y_.name + ": component of degree " +
                                std::to_string(it->second.first) + " in a degree " + std::to_string(p) + " map");
      acc.add(it->second.second, c);
    }
  return acc.take();
}

HomMatrix HomComplex::to_matrix(int p, const SparseVec& v) const {
  HomMatrix out;
  const auto& b = basis(p);
  for (const auto& [i, c] : v) add_entry(out, {b[i].target, b[i].source}, unit_vector(b[i].element), c);
  return out;
}

SparseVec HomComplex::differential(int p, const SparseVec& v) const {
  HomMatrix f = to_matrix(p, v);
  HomMatrix df = add(compose(*d_, y_.differential, f), compose(*d_, f, x_.differential), p % 2 == 0 ? -1 : 1);
  return to_coords(p + 1, df);
}

std::vector<SparseVec> HomComplex::differential_rows(int p) const {
  std::vector<SparseVec> rows;
  for (int i = 0; i < dim(p); ++i) rows.push_back(differential(p, unit_vector(i)));
  return rows;
}

int HomComplex::cohomology_dim(int p) const {
  return dim(p) - rank_of(differential_rows(p), dim(p + 1)) - rank_of(differential_rows(p - 1), dim(p));
}

std::map<int, int> HomComplex::complex_dims() const {
  std::map<int, int> out;
  for (const auto& [p, list] : basis_) out[p] = static_cast<int>(list.size());
  return out;
}

std::map<int, int> HomComplex::cohomology_dims() const {
  std::map<int, int> out;
  for (const auto& [p, list] : basis_)
    if (int h = cohomology_dim(p); h != 0) out[p] = h;
  return out;
}

bool HomComplex::is_cycle(int p, const SparseVec& v) const { return differential(p, v).empty(); }

int HomComplex::rank_modulo_boundaries(int p, const std::vector<SparseVec>& cycles) const {
  RowEchelon e(dim(p));
  for (const auto& b : differential_rows(p - 1)) e.insert(b);
  const int before = e.rank();
  for (const auto& c : cycles) e.insert(c);
  return e.rank() - before;
}

std::vector<HomTableEntry> hom_table(const DAlgebra& d) {
  const Family& f = d.family();
  const int n = f.n(), m = f.m(), k = d.k();
  auto Q = projectives(d);
  std::vector<HomTableEntry> out;
  for (int a = 0; a < m + 2; ++a)
    for (int b = 0; b < m + 2; ++b) {
      HomTableEntry e{a, b, {}, {}};
      if (a == b) {
        e.expected[0] = 1;
      } else if (a == 0 && b == 1) {
        e.expected[0] = n;
      } else if (b >= 2 && (a == 0 || a == 1)) {
        const int delta = d.delta()[b - 2];
        if (a == 1) {
          e.expected[0] += 1;
          e.expected[delta] += k;
        } else {
          if (n - k > 0) e.expected[0] += n - k;
          e.expected[delta] += 1;
        }
      }
      HomComplex h(d.algebra(), Q[a], Q[b]);
      e.actual = h.cohomology_dims();
      out.push_back(std::move(e));
    }
  return out;
}

namespace {

PairCheck check_pair(const GradedAlgebra& a, const TwistedComplex& x, const TwistedComplex& y, DegreeDims expected,
                     std::vector<std::string>& failures) {
  HomComplex h(a, x, y);
  PairCheck c;
  c.name = "Hom(" + x.name + "," + y.name + ")";
  c.expected = std::move(expected);
  c.cohomology = h.cohomology_dims();
  long chi_c = 0, chi_h = 0;
  for (const auto& [p, v] : h.complex_dims()) chi_c += (p % 2 == 0 ? v : -v);
  for (const auto& [p, v] : c.cohomology) chi_h += (p % 2 == 0 ? v : -v);
  c.euler_ok = chi_c == chi_h;
  for (int p : h.degrees())
    for (int i = 0; i < h.dim(p); ++i)
      if (!h.differential(p + 1, h.differential(p, unit_vector(i))).empty()) {
        failures.push_back(c.name + ": differential does not square to zero");
        return c;
      }
  return c;
}

}  // namespace

bool ExceptionalityReport::passed() const {
  return complex_failures.empty() && std::all_of(checks.begin(), checks.end(), [](const PairCheck& c) { return c.ok(); });
}

ExceptionalityReport exceptionality_suite(const DAlgebra& d) {
  const GradedAlgebra& a = d.algebra();
  const int m = d.family().m();
  ExceptionalityReport rep;
  auto pk = build_P1_P2_K(d);
  auto Q = projectives(d);
  for (const auto* x : {&pk.P1, &pk.P2})
    if (auto e = find_complex_failure(a, *x)) rep.complex_failures.push_back(*e);
  for (const auto& K : pk.K)
    if (auto e = find_complex_failure(a, K)) rep.complex_failures.push_back(*e);
  if (!rep.complex_failures.empty()) return rep;

  for (int i = 0; i < m; ++i) rep.checks.push_back(check_pair(a, pk.K[i], pk.K[i], {{0, 1}}, rep.complex_failures));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) rep.checks.push_back(check_pair(a, pk.K[i], pk.K[j], {}, rep.complex_failures));
  for (const auto* P : {&pk.P1, &pk.P2})
    for (int j = 0; j < m; ++j) rep.checks.push_back(check_pair(a, *P, pk.K[j], {}, rep.complex_failures));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j)
        rep.checks.push_back(check_pair(a, Q[DAlgebra::vertex_l(i)], Q[DAlgebra::vertex_l(j)], {}, rep.complex_failures));
  return rep;
}

std::vector<int> chi_for_delta(const std::vector<int>& delta) {
  std::vector<int> chi{0};
  for (int d : delta) chi.push_back(1 - d);
  return chi;
}

CohomologyComparison endomorphism_cohomology(const DAlgebra& d) {
  const Family& f = d.family();
  const int n = f.n(), m = f.m(), k = d.k();
  const GradedAlgebra& A = d.algebra();
  CohomologyComparison cmp;
  cmp.chi = chi_for_delta(d.delta());

  RAlgebra R = build_R(f);
  GradedAlgebra Rg = apply_grading(R.algebra(), cmp.chi);
  const ComplementData& cd = R.complement_data();

  auto pk = build_P1_P2_K(d);
  const TwistedComplex* block[3] = {nullptr, &pk.P1, &pk.P2};
  std::map<std::pair<int, int>, HomComplex> hom;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      hom.emplace(std::make_pair(a, b), HomComplex(A, *block[a], *block[b]));
      cmp.cohomology[{a, b}] = hom.at({a, b}).cohomology_dims();
      cmp.expected[{a, b}];
    }
  for (const auto& e : Rg.basis()) ++cmp.expected[{e.source + 1, e.target + 1}][e.zdegree];

  const int p1_top = m, p2_top = m * k;
  auto xi_c = [&](const std::vector<Scalar>& c) {
    HomMatrix h;
    add_entry(h, {p2_top, p1_top}, d.c_element(c), 1);
    for (int i = 1; i <= m; ++i) {
      const Matrix& theta = cd.left(i).theta;
      for (int j = 0; j < k; ++j) {
        Scalar coef = 0;
        for (int l = 0; l < n; ++l) coef += theta.at(j, l) * c[l];
        add_entry(h, {(i - 1) * k + j, i - 1}, d.idempotent(DAlgebra::vertex_l(i)), coef);
      }
    }
    return h;
  };
  auto xi_b = [&](int i) {
    HomMatrix h;
    h[{i - 1, p2_top}] = d.beta(i);
    return h;
  };
  auto identity = [&](int blk) {
    HomMatrix h;
    const auto& s = block[blk]->summands;
    for (int r = 0; r < static_cast<int>(s.size()); ++r) h[{r, r}] = d.idempotent(s[r].vertex);
    return h;
  };
  auto xi_word = [&](const Word& w, int vertex) {
    if (w.empty()) return identity(vertex + 1);
    HomMatrix h = w.back().is_b() ? xi_b(w.back().b) : xi_c(w.back().c);
    for (int s = static_cast<int>(w.size()) - 2; s >= 0; --s)
      h = compose(A, w[s].is_b() ? xi_b(w[s].b) : xi_c(w[s].c), h);
    return h;
  };

  std::vector<HomMatrix> xi(Rg.dim());
  for (int z = 0; z < Rg.dim(); ++z) {
    xi[z] = xi_word(R.word(z), Rg.element(z).source);
    if (R.normalize(R.word(z)) != unit_vector(z) && !R.word(z).empty()) {
      cmp.note = "basis word " + Rg.element(z).word + " does not normalize to itself";
      return cmp;
    }
  }
  auto block_of = [&](int z) { return std::make_pair(Rg.element(z).source + 1, Rg.element(z).target + 1); };

  try {
    cmp.cycles = true;
    std::vector<SparseVec> coords(Rg.dim());
    for (int z = 0; z < Rg.dim(); ++z) {
      const auto& h = hom.at(block_of(z));
      coords[z] = h.to_coords(Rg.element(z).zdegree, xi[z]);
      if (!h.is_cycle(Rg.element(z).zdegree, coords[z])) {
        cmp.cycles = false;
        cmp.note = "image of " + Rg.element(z).word + " is not a cycle";
      }
    }

    cmp.multiplicative = true;
    for (int x = 0; x < Rg.dim() && cmp.multiplicative; ++x)
      for (int y = 0; y < Rg.dim(); ++y) {
        if (Rg.element(x).source != Rg.element(y).target) continue;
        HomMatrix lhs = compose(A, xi[x], xi[y]);
        HomMatrix rhs;
        for (const auto& [z, c] : Rg.product(x, y)) rhs = add(rhs, xi[z], c);
        if (!is_zero(add(lhs, rhs, -1))) {
          cmp.multiplicative = false;
          cmp.note = "not multiplicative at " + Rg.element(x).word + " * " + Rg.element(y).word;
          break;
        }
      }

    cmp.relations = true;
    auto unit = [&](int l) {
      std::vector<Scalar> c(n, 0);
      c[l] = 1;
      return c;
    };
    for (int i = 1; i <= m; ++i) {
      for (int j = i; j <= m; ++j)
        for (int l = 0; l < n; ++l)
          if (!is_zero(compose(A, xi_b(i), compose(A, xi_c(unit(l)), xi_b(j))))) cmp.relations = false;
      for (int r = 0; r < f.V(i).dim(); ++r)
        if (!is_zero(compose(A, xi_b(i), xi_c(f.V(i).basis_vector(r))))) cmp.relations = false;
      for (int r = 0; r < f.W(i).dim(); ++r)
        if (!is_zero(compose(A, xi_c(f.W(i).basis_vector(r)), xi_b(i)))) cmp.relations = false;
    }
    if (!cmp.relations && cmp.note.empty()) cmp.note = "a defining relation of R_F fails on the images";

    cmp.bijective = true;
    std::map<std::pair<std::pair<int, int>, int>, std::vector<SparseVec>> grouped;
    for (int z = 0; z < Rg.dim(); ++z) grouped[{block_of(z), Rg.element(z).zdegree}].push_back(coords[z]);
    for (const auto& [key, vs] : grouped) {
      const auto& h = hom.at(key.first);
      if (h.rank_modulo_boundaries(key.second, vs) != static_cast<int>(vs.size()) ||
          h.cohomology_dim(key.second) != static_cast<int>(vs.size()))
        cmp.bijective = false;
    }
    for (const auto& [blk, dims] : cmp.cohomology)
      for (const auto& [p, v] : dims)
        if (!grouped.count({blk, p})) cmp.bijective = false;
    if (!cmp.bijective && cmp.note.empty()) cmp.note = "images do not form a basis of cohomology";
  } catch (const VerificationError& e) {
    cmp.cycles = cmp.multiplicative = cmp.relations = cmp.bijective = false;
    cmp.note = e.what();
  }
  return cmp;
}

nlohmann::json to_json(const std::vector<HomTableEntry>& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : t)
    out.push_back({{"source", e.source + 1},
                   {"target", e.target + 1},
                   {"expected", dims_json(e.expected)},
                   {"actual", dims_json(e.actual)},
                   {"ok", e.ok()}});
  return out;
}

nlohmann::json to_json(const ExceptionalityReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"pair", c.name},
                      {"cohomology", dims_json(c.cohomology)},
                      {"expected", dims_json(c.expected)},
                      {"euler_ok", c.euler_ok},
                      {"ok", c.ok()}});
  return {{"complex_failures", r.complex_failures}, {"checks", checks}, {"passed", r.passed()}};
}

nlohmann::json to_json(const CohomologyComparison& c) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& [blk, dims] : c.cohomology)
    blocks.push_back({{"source", "P" + std::to_string(blk.first)},
                      {"target", "P" + std::to_string(blk.second)},
                      {"cohomology", dims_json(dims)},
                      {"expected", dims_json(c.expected.at(blk))}});
  return {{"chi", c.chi},
          {"blocks", blocks},
          {"cycles", c.cycles},
          {"multiplicative", c.multiplicative},
          {"relations", c.relations},
          {"bijective", c.bijective},
          {"note", c.note},
          {"passed", c.passed()}};
}

}  // namespace twoalg
