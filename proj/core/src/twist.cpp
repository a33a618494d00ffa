#include "twoalg/twist.hpp"

#include <algorithm>

#include "twoalg/errors.hpp"
#include "twoalg/ralgebra.hpp"

namespace twoalg {

namespace {

SparseVec apply_linear(const std::vector<SparseVec>& images, const SparseVec& v) {
  SparseBuilder acc;
  for (const auto& [i, c] : v) acc.add(images[i], c);
  return acc.take();
}

std::string element_word(const GradedAlgebra& a, int i) { return a.element(i).word; }

}  // namespace

std::optional<std::string> find_ring_failure(const RingOverR& r) {
  const auto& R = r.base;
  const auto& T = r.total;
  if (static_cast<int>(r.inclusion.size()) != R.dim()) return "inclusion has wrong length";
  if (apply_linear(r.inclusion, R.unit()) != T.unit()) return "inclusion is not unital";
  if (auto f = find_map_failure(R, T, r.inclusion))
    return "inclusion not multiplicative at " + element_word(R, f->first) + "," + element_word(R, f->second);
  if (r.augmentation) {
    const auto& aug = *r.augmentation;
    if (static_cast<int>(aug.size()) != T.dim()) return "augmentation has wrong length";
    if (auto f = find_map_failure(T, R, aug))
      return "augmentation not multiplicative at " + element_word(T, f->first) + "," + element_word(T, f->second);
    for (int x = 0; x < R.dim(); ++x)
      if (apply_linear(aug, r.inclusion[x]) != unit_vector(x))
        return "augmentation does not split the inclusion at " + element_word(R, x);
  }
  return std::nullopt;
}

int TensorSpace::pair_id(int a, int b) const {
  auto it = index_.find({a, b});
  return it == index_.end() ? -1 : it->second;
}

SparseVec TensorSpace::tensor(const SparseVec& x, const SparseVec& y) const {
  SparseBuilder acc;
  for (const auto& [i, c] : x)
    for (const auto& [j, d] : y) {
      if (left_source_[i] != right_target_[j]) continue;
      acc.add(index_.at({i, j}), c * d);
    }
  return acc.take();
}

SparseVec TensorSpace::project(const SparseVec& pairs) const {
  // The echelon works on reversed pair ids so the largest pair in a relation is eliminated.
  int P = pair_count();
  SparseVec rev;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) rev.emplace_back(P - 1 - it->first, it->second);
  rev = echelon_.reduce(std::move(rev));
  SparseVec out;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    int q = coordinate_[P - 1 - it->first];
    if (q < 0) throw VerificationError("tensor projection left an eliminated pair");
    out.emplace_back(q, it->second);
  }
  return out;
}

TensorSpace balanced_tensor(const RingOverR& a, const RingOverR& b) {
  const auto& A = a.total;
  const auto& B = b.total;
  const auto& R = a.base;
  if (b.base.dim() != R.dim()) throw InputError("balanced_tensor: rings over different bases");
  TensorSpace t;
  for (int x = 0; x < A.dim(); ++x) t.left_source_.push_back(A.element(x).source);
  for (int y = 0; y < B.dim(); ++y) t.right_target_.push_back(B.element(y).target);
  for (int x = 0; x < A.dim(); ++x)
    for (int y = 0; y < B.dim(); ++y)
      if (A.element(x).source == B.element(y).target) {
        t.index_[{x, y}] = static_cast<int>(t.pairs_.size());
        t.pairs_.emplace_back(x, y);
      }
  int P = t.pair_count();
  t.echelon_ = RowEchelon(P);
  for (int r : R.radical_basis()) {
    const auto& ra = a.inclusion[r];
    const auto& rb = b.inclusion[r];
    int rs = R.element(r).source, rt = R.element(r).target;
    for (int x = 0; x < A.dim(); ++x) {
      if (A.element(x).source != rt) continue;
      SparseVec xr = A.multiply(unit_vector(x), ra);
      for (int y = 0; y < B.dim(); ++y) {
        if (B.element(y).target != rs) continue;
        SparseVec rel = axpy(t.tensor(xr, unit_vector(y)), -1, t.tensor(unit_vector(x), B.multiply(rb, unit_vector(y))));
        if (rel.empty()) continue;
        SparseVec rev;
        for (auto it = rel.rbegin(); it != rel.rend(); ++it) rev.emplace_back(P - 1 - it->first, it->second);
        t.relations_.push_back(std::move(rel));
        t.echelon_.insert(rev);
      }
    }
  }
  t.echelon_.make_reduced();
  t.coordinate_.assign(P, -1);
  for (int p = 0; p < P; ++p)
    if (!t.echelon_.is_pivot(P - 1 - p)) {
      t.coordinate_[p] = static_cast<int>(t.basis_.size());
      t.basis_.push_back(p);
    }
  return t;
}

SparseVec TwistMap::apply(const SparseVec& domain_pairs) const {
  return apply_linear(images, domain.project(domain_pairs));
}

TwistMap v_twist(const RingOverR& a, const RingOverR& b) {
  if (!a.augmentation || !b.augmentation) throw InputError("v_twist needs augmentations on both factors");
  const auto& A = a.total;
  const auto& B = b.total;
  TwistMap tau{balanced_tensor(b, a), balanced_tensor(a, b), {}, false, false};
  SparseVec oneA = A.unit(), oneB = B.unit();

  // On B ⊗_k A in pair coordinates, landing in A ⊗_k B pair coordinates.
  auto on_pairs = [&](const SparseVec& v) {
    SparseBuilder acc;
    for (const auto& [p, c] : v) {
      auto [y, x] = tau.domain.pair(p);
      SparseVec ey = apply_linear(a.inclusion, (*b.augmentation)[y]);
      SparseVec ex = apply_linear(b.inclusion, (*a.augmentation)[x]);
      acc.add(tau.codomain.tensor(A.multiply(ey, unit_vector(x)), oneB), c);
      acc.add(tau.codomain.tensor(oneA, B.multiply(unit_vector(y), ex)), c);
      acc.add(tau.codomain.tensor(ey, ex), -c);
    }
    return acc.take();
  };

  for (int q = 0; q < tau.domain.dim(); ++q) {
    auto [y, x] = tau.domain.basis_pair(q);
    tau.images.push_back(tau.codomain.project(on_pairs(unit_vector(tau.domain.pair_id(y, x)))));
  }
  tau.well_defined = std::all_of(tau.domain.relations().begin(), tau.domain.relations().end(),
                                 [&](const SparseVec& rel) { return tau.codomain.project(on_pairs(rel)).empty(); });
  bool fix = true;
  for (int x = 0; x < A.dim() && fix; ++x)
    fix = tau.apply(tau.domain.tensor(oneB, unit_vector(x))) == tau.codomain.project(tau.codomain.tensor(unit_vector(x), oneB));
  for (int y = 0; y < B.dim() && fix; ++y)
    fix = tau.apply(tau.domain.tensor(unit_vector(y), oneA)) == tau.codomain.project(tau.codomain.tensor(oneA, unit_vector(y)));
  tau.fixsides = fix;
  return tau;
}

TwistedProduct twisted_product(const RingOverR& a, const RingOverR& b, const TwistMap& tau) {
  const auto& A = a.total;
  const auto& B = b.total;
  const TensorSpace& S = tau.codomain;
  int d = S.dim();
  std::vector<BasisElement> elems;
  for (int q = 0; q < d; ++q) {
    auto [x, y] = S.basis_pair(q);
    const auto& ex = A.element(x);
    const auto& ey = B.element(y);
    BasisElement e;
    e.source = ey.source;
    e.target = ex.target;
    e.weight = ex.weight + ey.weight;
    e.zdegree = ex.zdegree + ey.zdegree;
    e.multidegree = ex.multidegree;
    e.multidegree.insert(e.multidegree.end(), ey.multidegree.begin(), ey.multidegree.end());
    if (ex.weight == 0 && ey.weight == 0)
      e.word = "e" + std::to_string(e.source + 1);
    else if (ex.weight == 0)
      e.word = ey.word;
    else if (ey.weight == 0)
      e.word = ex.word;
    else
      e.word = ex.word + "|" + ey.word;
    e.letters = ex.letters;
    e.letters.insert(e.letters.end(), ey.letters.begin(), ey.letters.end());
    elems.push_back(std::move(e));
  }
  std::vector<SparseVec> table(static_cast<std::size_t>(d) * d);
  for (int q1 = 0; q1 < d; ++q1) {
    auto [x, y] = S.basis_pair(q1);
    for (int q2 = 0; q2 < d; ++q2) {
      auto [x2, y2] = S.basis_pair(q2);
      if (B.element(y).source != A.element(x2).target) continue;
      SparseVec t = tau.apply(tau.domain.tensor(unit_vector(y), unit_vector(x2)));
      SparseBuilder acc;
      for (const auto& [k, c] : t) {
        auto [ak, bk] = S.basis_pair(k);
        acc.add(S.tensor(A.product(x, ak), B.product(bk, y2)), c);
      }
      table[static_cast<std::size_t>(q1) * d + q2] = S.project(acc.take());
    }
  }
  GradedAlgebra alg(A.vertex_count(), std::move(elems), std::move(table));
  auto fail = find_associativity_failure(alg);
  return TwistedProduct{S, std::move(alg), fail};
}

GradedAlgebra semisimple_algebra(int vertices) {
  std::vector<BasisElement> elems;
  std::vector<SparseVec> table(static_cast<std::size_t>(vertices) * vertices);
  for (int v = 0; v < vertices; ++v) {
    BasisElement e;
    e.source = e.target = v;
    e.multidegree = {0};
    e.word = "e" + std::to_string(v + 1);
    elems.push_back(e);
    table[static_cast<std::size_t>(v) * vertices + v] = unit_vector(v);
  }
  return GradedAlgebra(vertices, std::move(elems), std::move(table));
}

namespace {

// Vertex idempotents followed by arrows (source, target) that compose to zero.
GradedAlgebra square_zero_algebra(int vertices, const std::vector<BasisElement>& arrows) {
  std::vector<BasisElement> elems;
  for (int v = 0; v < vertices; ++v) {
    BasisElement e;
    e.source = e.target = v;
    e.multidegree = {0};
    e.word = "e" + std::to_string(v + 1);
    elems.push_back(e);
  }
  elems.insert(elems.end(), arrows.begin(), arrows.end());
  int d = static_cast<int>(elems.size());
  std::vector<SparseVec> table(static_cast<std::size_t>(d) * d);
  for (int v = 0; v < vertices; ++v) table[static_cast<std::size_t>(v) * d + v] = unit_vector(v);
  for (int i = vertices; i < d; ++i) {
    table[static_cast<std::size_t>(elems[i].target) * d + i] = unit_vector(i);
    table[static_cast<std::size_t>(i) * d + elems[i].source] = unit_vector(i);
  }
  return GradedAlgebra(vertices, std::move(elems), std::move(table));
}

}  // namespace

GradedAlgebra one_arrow_algebra(int vertices, int source, int target, int zdegree, const std::string& name,
                                int letter) {
  if (source == target) throw InputError("one_arrow_algebra: loops are not allowed");
  if (source < 0 || target < 0 || source >= vertices || target >= vertices)
    throw InputError("one_arrow_algebra: vertex out of range");
  BasisElement e;
  e.source = source;
  e.target = target;
  e.weight = 1;
  e.zdegree = zdegree;
  e.multidegree = {1};
  e.word = name;
  e.letters = {letter};
  return square_zero_algebra(vertices, {e});
}

GradedAlgebra kronecker_on(const Subspace& V, int zdegree) {
  std::vector<BasisElement> arrows;
  for (int r = 0; r < V.dim(); ++r) {
    BasisElement e;
    e.source = 0;
    e.target = 1;
    e.weight = 1;
    e.zdegree = zdegree;
    e.multidegree = {1};
    e.word = c_letter_name(V.basis_vector(r));
    arrows.push_back(std::move(e));
  }
  return square_zero_algebra(2, arrows);
}

RingOverR over_semisimple(GradedAlgebra total, std::string name) {
  RingOverR r;
  int N = total.vertex_count();
  r.base = semisimple_algebra(N);
  for (int v = 0; v < N; ++v) r.inclusion.push_back(unit_vector(total.idempotent(v)));
  std::vector<SparseVec> aug;
  for (const auto& e : total.basis()) aug.push_back(e.weight == 0 ? unit_vector(e.source) : SparseVec{});
  r.augmentation = std::move(aug);
  r.total = std::move(total);
  r.name = std::move(name);
  return r;
}

int FactorizationCertificate::elementary_steps() const {
  int t = static_cast<int>(terminal_steps.size());
  return static_cast<int>(steps.size()) + std::max(0, t - 1);
}

namespace {

// Shared checks of one twisted-product step; fills everything but the comparison map.
FactorStep twist_step(const RingOverR& left, const RingOverR& right, TwistedProduct& out) {
  FactorStep s;
  s.left = left.name;
  s.right = right.name;
  s.left_dim = left.total.dim();
  s.base_dim = left.base.dim();
  s.right_dim = right.total.dim();
  auto lf = find_ring_failure(left);
  auto rf = find_ring_failure(right);
  s.ring_axioms = !lf && !rf;
  if (lf) s.note = "left ring: " + *lf;
  if (rf) s.note = "right ring: " + *rf;
  TwistMap tau = v_twist(left, right);
  s.fixsides = tau.fixsides;
  s.well_defined = tau.well_defined;
  out = twisted_product(left, right, tau);
  s.associative = !out.associativity_failure;
  s.tensor_dim = out.algebra.dim();
  s.checksum = structure_checksum(out.algebra);

  // I_A ⊗ B, with I_A the kernel of the left augmentation.
  const auto& aug = *left.augmentation;
  std::vector<SparseVec> gens;
  for (int x = 0; x < left.total.dim(); ++x) {
    if (!aug[x].empty()) continue;
    for (int y = 0; y < right.total.dim(); ++y)
      gens.push_back(out.space.project(out.space.tensor(unit_vector(x), unit_vector(y))));
  }
  auto nil = nilpotency_index(out.algebra, gens, out.algebra.dim() + 1);
  s.ideal_nilpotent = nil.has_value();
  s.nilpotency = nil.value_or(-1);
  return s;
}

bool degrees_preserved(const GradedAlgebra& src, const GradedAlgebra& dst, const std::vector<SparseVec>& images) {
  for (int q = 0; q < src.dim(); ++q)
    for (const auto& [k, c] : images[q])
      if (dst.element(k).zdegree != src.element(q).zdegree) return false;
  return true;
}

std::string pair_range_name(int p) {
  if (p == 0) return "K_n";
  return "R[1.." + std::to_string(p) + "]";
}

// One peeling step R_F ≅ K(V_m; b_m) ⊗^v_{K(V_m)} R_G.
FactorStep peel(const Family& F, const std::vector<int>& chiF) {
  int n = F.n(), m = F.m();
  Family G = F.prefix(m - 1);
  const Subspace& Vm = F.V(m);
  int k = Vm.dim();
  RAlgebra RF = build_R(F);
  RAlgebra RG = build_R(G);
  GradedAlgebra RFg = apply_grading(RF.algebra(), chiF);
  GradedAlgebra RGg = apply_grading(RG.algebra(), std::vector<int>(chiF.begin(), chiF.end() - 1));
  std::string mm = std::to_string(m);

  // Left factor: K(V_m) ⊗^v_S K_1^op.
  GradedAlgebra KV = kronecker_on(Vm, chiF[0]);
  GradedAlgebra K1op = one_arrow_algebra(2, 1, 0, chiF[m], "b" + mm, n + m - 1);
  RingOverR lk = over_semisimple(KV, "K(V_" + mm + ")");
  RingOverR rk = over_semisimple(K1op, "K_1^op");
  TwistedProduct A;
  FactorStep inner = twist_step(lk, rk, A);

  std::vector<SparseVec> iota_A;
  for (int q = 0; q < A.algebra.dim(); ++q) {
    auto [x, y] = A.space.basis_pair(q);
    SparseVec ix = KV.element(x).weight == 0 ? unit_vector(RF.algebra().idempotent(KV.element(x).source))
                                             : RF.normalize({Letter::vector_c(Vm.basis_vector(x - 2))});
    SparseVec iy = K1op.element(y).weight == 0 ? unit_vector(RF.algebra().idempotent(K1op.element(y).source))
                                               : RF.normalize({Letter::arrow_b(m)});
    iota_A.push_back(RFg.multiply(ix, iy));
  }
  bool left_ok = inner.passed() && A.algebra.dim() == 2 * k + 3 && rank_of(iota_A, RFg.dim()) == A.algebra.dim() &&
                 !find_map_failure(A.algebra, RFg, iota_A) && degrees_preserved(A.algebra, RFg, iota_A);

  // Rings over K(V_m).
  RingOverR ra;
  ra.base = KV;
  ra.total = A.algebra;
  ra.name = "K(V_" + mm + ";b_" + mm + ")";
  for (int x = 0; x < KV.dim(); ++x)
    ra.inclusion.push_back(A.space.project(A.space.tensor(unit_vector(x), K1op.unit())));
  {
    std::vector<SparseVec> aug;
    for (int q = 0; q < A.algebra.dim(); ++q) {
      auto [x, y] = A.space.basis_pair(q);
      aug.push_back(K1op.element(y).weight == 0 ? unit_vector(x) : SparseVec{});
    }
    ra.augmentation = std::move(aug);
  }

  RingOverR rb;
  rb.base = KV;
  rb.total = RGg;
  rb.name = pair_range_name(m - 1);
  for (int x = 0; x < KV.dim(); ++x)
    rb.inclusion.push_back(KV.element(x).weight == 0 ? unit_vector(RG.algebra().idempotent(KV.element(x).source))
                                                     : RG.normalize({Letter::vector_c(Vm.basis_vector(x - 2))}));
  {
    // π kills W_m and every component with P ≠ ∅.
    const Matrix& theta = RF.complement_data().left(m).theta;
    std::vector<SparseVec> aug;
    for (int id = 0; id < RG.dim(); ++id) {
      const auto& e = RG.algebra().element(id);
      if (e.weight == 0) {
        aug.push_back(unit_vector(e.source));
      } else if (RG.P(id).empty()) {
        int col = id - 2;
        SparseVec v;
        for (int r = 0; r < theta.rows(); ++r)
          if (theta.at(r, col) != 0) v.emplace_back(2 + r, theta.at(r, col));
        aug.push_back(std::move(v));
      } else {
        aug.push_back({});
      }
    }
    rb.augmentation = std::move(aug);
  }

  TwistedProduct C;
  FactorStep s = twist_step(ra, rb, C);
  s.base = "K(V_" + mm + ")";
  s.left_factor_iso = left_ok;
  if (!left_ok && s.note.empty()) s.note = "left factor does not embed as K(V_m;b_m)";
  s.target_dim = RF.dim();

  std::vector<SparseVec> rho;
  for (int q = 0; q < C.algebra.dim(); ++q) {
    auto [x, y] = C.space.basis_pair(q);
    const auto& ey = RG.algebra().element(y);
    SparseVec iy = ey.weight == 0 ? unit_vector(RF.algebra().idempotent(ey.source)) : RF.normalize(RG.word(y));
    rho.push_back(RFg.multiply(iota_A[x], iy));
  }
  s.rho_bijective = C.algebra.dim() == RF.dim() && is_bijective(rho, RF.dim());
  auto fail = find_map_failure(C.algebra, RFg, rho);
  s.rho_multiplicative = !fail;
  s.degrees_match = degrees_preserved(C.algebra, RFg, rho);
  if (fail && s.note.empty())
    s.note = "rho not multiplicative at " + C.algebra.element(fail->first).word + "," +
             C.algebra.element(fail->second).word;
  return s;
}

}  // namespace

LetterComparison compare_by_letters(const GradedAlgebra& a, const std::vector<int>& letter_to_arrow,
                                    const QuotientOracle& oracle) {
  std::vector<SparseVec> images;
  for (const auto& e : a.basis()) {
    if (e.weight == 0) {
      images.push_back(oracle.reduce(Path::trivial(e.source)));
      continue;
    }
    std::vector<int> arrows;
    for (int l : e.letters) arrows.push_back(letter_to_arrow.at(l));
    images.push_back(oracle.reduce(Path::of(arrows)));
  }
  LetterComparison out;
  out.bijective = is_bijective(images, oracle.dim());
  out.multiplicative = !find_map_failure(a, oracle.to_algebra(), images);
  return out;
}

GeneralizedGreen generalized_green(int vertices, const std::vector<GreenStep>& steps) {
  if (vertices < 1) throw InputError("generalized_green: need at least one vertex");
  GeneralizedGreen out;
  out.algebra = semisimple_algebra(vertices);
  std::string base = "S_" + std::to_string(vertices);
  bool ok = true;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const auto& st = steps[t];
    if (st.i == st.j) throw InputError("generalized_green: loop requested at step " + std::to_string(t + 1));
    if (st.i < 1 || st.j < 1 || st.i > vertices || st.j > vertices)
      throw InputError("generalized_green: vertex out of range at step " + std::to_string(t + 1));
    std::string name = "a" + std::to_string(t + 1);
    GradedAlgebra X = one_arrow_algebra(vertices, st.i - 1, st.j - 1, st.d, name, static_cast<int>(t));
    std::string xname = "K_{" + std::to_string(st.i) + std::to_string(st.j) + "}[" + std::to_string(st.d) + "]";
    RingOverR left = over_semisimple(std::move(X), xname);
    RingOverR right = over_semisimple(out.algebra, t == 0 ? base : "G[" + std::to_string(t) + "]");
    TwistedProduct P;
    FactorStep s = twist_step(left, right, P);
    s.base = base;
    s.target_dim = P.algebra.dim();
    ok = ok && s.passed();
    out.certificate.steps.push_back(std::move(s));
    out.algebra = std::move(P.algebra);
  }
  out.certificate.terminal = base;
  out.certificate.terminal_verified = true;
  out.certificate.passed = ok;
  return out;
}

std::vector<GreenStep> green_steps(int l) {
  std::vector<GreenStep> s;
  for (int t = 0; t < l; ++t) s.push_back(t % 2 == 0 ? GreenStep{1, 2, 0} : GreenStep{2, 1, 0});
  return s;
}

FactorizationCertificate factorize_R(const Family& f, const std::vector<int>& chi) {
  int n = f.n(), m = f.m();
  std::vector<int> c = chi.empty() ? std::vector<int>(m + 1, 0) : chi;
  if (static_cast<int>(c.size()) != m + 1)
    throw InputError("grading has " + std::to_string(c.size()) + " entries, expected " + std::to_string(m + 1));
  FactorizationCertificate cert;
  cert.chi = c;
  complements(f);  // throws on (G) failure
  bool ok = true;
  for (int p = m; p >= 1; --p) {
    FactorStep s = peel(f.prefix(p), std::vector<int>(c.begin(), c.begin() + p + 1));
    ok = ok && s.passed();
    cert.steps.push_back(std::move(s));
  }
  cert.terminal = "K_" + std::to_string(n);
  auto kn = generalized_green(2, std::vector<GreenStep>(n, GreenStep{1, 2, c[0]}));
  cert.terminal_steps = kn.certificate.steps;
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i;
  auto oracle = build_oracle(two_vertex_quiver(n, 0), {}, 3);
  cert.terminal_verified = kn.certificate.passed && compare_by_letters(kn.algebra, letters, oracle).agree();
  cert.passed = ok && cert.terminal_verified;
  return cert;
}

ProjectivityReport left_projectivity_check(const Family& f) {
  int m = f.m();
  if (m < 1) throw InputError("left_projectivity_check needs m >= 1");
  complements(f);
  RAlgebra RG = build_R(f.prefix(m - 1));
  const Subspace& Vm = f.V(m);
  std::vector<int> e1R, e2R;
  for (int id = 0; id < RG.dim(); ++id) (RG.algebra().element(id).target == 0 ? e1R : e2R).push_back(id);
  std::vector<SparseVec> rows;
  for (int r = 0; r < Vm.dim(); ++r) {
    SparseVec v = RG.normalize({Letter::vector_c(Vm.basis_vector(r))});
    for (int x : e1R) rows.push_back(RG.algebra().multiply(v, unit_vector(x)));
  }
  ProjectivityReport rep;
  rep.columns = static_cast<int>(rows.size());
  rep.rank = rank_of(rows, RG.dim());
  rep.injective = rep.rank == rep.columns;
  rep.q1_copies = static_cast<int>(e1R.size());
  rep.q2_copies = static_cast<int>(e2R.size()) - Vm.dim() * static_cast<int>(e1R.size());
  return rep;
}

namespace {

nlohmann::json optional_bool(const std::optional<bool>& b) {
  return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const FactorStep& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(s.checksum));
  nlohmann::json j = {{"left", s.left},
                      {"base", s.base},
                      {"right", s.right},
                      {"twist", "v"},
                      {"dims", {{"left", s.left_dim}, {"base", s.base_dim}, {"right", s.right_dim}, {"tensor", s.tensor_dim}, {"target", s.target_dim}}},
                      {"ring_axioms", s.ring_axioms},
                      {"fixsides", s.fixsides},
                      {"well_defined", s.well_defined},
                      {"associative", s.associative},
                      {"left_factor_iso", s.left_factor_iso},
                      {"rho_bijective", optional_bool(s.rho_bijective)},
                      {"rho_multiplicative", optional_bool(s.rho_multiplicative)},
                      {"degrees_match", optional_bool(s.degrees_match)},
                      {"ideal_nilpotent", s.ideal_nilpotent},
                      {"nilpotency_index", s.nilpotency},
                      {"checksum", buf},
                      {"passed", s.passed()}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

nlohmann::json to_json(const FactorizationCertificate& c) {
  nlohmann::json steps = nlohmann::json::array(), terminal = nlohmann::json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  for (const auto& s : c.terminal_steps) terminal.push_back(to_json(s));
  return {{"status", c.status()},
          {"chi", c.chi},
          {"peel_steps", static_cast<int>(c.steps.size())},
          {"elementary_steps", c.elementary_steps()},
          {"chain", steps},
          {"terminal", {{"algebra", c.terminal}, {"verified", c.terminal_verified}, {"factors", terminal}}},
          {"radical_assumption", "zero differential: internal and external radicals coincide"}};
}

nlohmann::json to_json(const ProjectivityReport& r) {
  return {{"injective", r.injective},
          {"rank", r.rank},
          {"columns", r.columns},
          {"Q1_copies", r.q1_copies},
          {"Q2_copies", r.q2_copies}};
}

}  // namespace twoalg
