#include "suite.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "twoalg/curve.hpp"
#include "twoalg/dcat.hpp"
#include "twoalg/errors.hpp"
#include "twoalg/homology.hpp"
#include "twoalg/quiverpath.hpp"
#include "twoalg/ralgebra.hpp"
#include "twoalg/twist.hpp"

namespace twoalg::suite {

namespace {

std::uint64_t subseed(const Options& o, std::uint64_t stream, std::uint64_t idx) {
  return o.seed * 1000003ULL + stream * 7919ULL + idx;
}

int draw(std::mt19937_64& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

Subspace line(int a, int b) { return Subspace::span(2, {{a, b}}); }

std::string kseq_text(const std::vector<int>& ks) {
  std::string s = "(";
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
  return s + ")";
}

Criterion make(int id, std::string title) {
  Criterion c;
  c.id = id;
  c.title = std::move(title);
  c.passed = true;
  c.report = nlohmann::json::array();
  return c;
}

void fail(Criterion& c, const std::string& why) {
  if (c.passed) c.detail = why;
  c.passed = false;
}

Criterion green_regression(const Options& o) {
  Criterion c = make(1, "Green regression: gldim R_green(l) = l, dim G2 = 5, dim G3 = 8");
  const int top = o.quick ? 6 : 8;
  for (int l = 2; l <= top; ++l) {
    auto r = build_R(green_family(l));
    auto rep = gldim(r.algebra(), default_gldim_cutoff(green_family(l)));
    c.report.push_back({{"l", l}, {"dim", r.dim()}, {"gldim", rep.gldim}, {"loewy", rep.loewy}});
    if (rep.gldim != l) fail(c, "gldim of green(" + std::to_string(l) + ") is " + std::to_string(rep.gldim));
  }
  for (auto [l, want] : {std::pair{2, 5}, std::pair{3, 8}}) {
    auto q = green_quiver(l);
    int d = build_oracle(q.quiver, q.relations, l + 3).dim();
    c.report.push_back({{"oracle_G", l}, {"dim", d}});
    if (d != want) fail(c, "oracle dim G" + std::to_string(l) + " = " + std::to_string(d));
  }
  if (c.passed) c.detail = "l = 2.." + std::to_string(top) + " exact";
  return c;
}

Criterion kk_regression(const Options&) {
  Criterion c = make(2, "Kirkman-Kuzmanovich regression: gldim = 2n+1, Loewy length = 4");
  for (int n : {2, 3}) {
    auto f = kk_family(n);
    auto rep = gldim(build_R(f).algebra(), default_gldim_cutoff(f));
    c.report.push_back({{"n", n}, {"gldim", rep.gldim}, {"loewy", rep.loewy}});
    if (rep.gldim != 2 * n + 1 || rep.loewy != 4)
      fail(c, "kk(" + std::to_string(n) + "): gldim " + std::to_string(rep.gldim) + ", loewy " +
                  std::to_string(rep.loewy));
  }
  if (c.passed) c.detail = "n = 2, 3 exact";
  return c;
}

Criterion oracle_equivalence(const Options& o) {
  Criterion c = make(3, "Oracle equivalence of closed-form R_F and the path quotient");
  auto fams = oracle_families(o);
  for (const auto& nf : fams) {
    try {
      auto rep = verify_against_oracle(nf.family);
      c.report.push_back({{"family", nf.name}, {"dim", rep.closed_dim}, {"oracle_dim", rep.oracle_dim},
                          {"agree", rep.agree}});
      if (!rep.agree) fail(c, nf.name + ": " + rep.message);
    } catch (const std::exception& e) {
      c.report.push_back({{"family", nf.name}, {"error", e.what()}});
      fail(c, nf.name + ": " + e.what());
    }
  }
  if (c.passed) c.detail = std::to_string(fams.size()) + " families agree";
  return c;
}

Criterion dimension_formulas(const Options& o) {
  Criterion c = make(4, "Dimension formulas per component; 4+4m for n=2, k=1");
  auto fams = oracle_families(o);
  for (int m = 0; m <= 4; ++m)
    fams.push_back({"random:2," + std::to_string(m) + ",k=1",
                    random_family(2, m, std::vector<int>(m, 1), subseed(o, 4, m))});
  for (const auto& nf : fams) {
    auto r = build_R(nf.family);
    auto bad = find_formula_mismatch(r);
    nlohmann::json row{{"family", nf.name}, {"dim", r.dim()}, {"formula_ok", !bad}};
    if (bad) fail(c, nf.name + ": " + *bad);
    const Family& f = nf.family;
    if (f.n() == 2 && f.m() > 0 && f.is_equidimensional() && f.k(1) == 1) {
      row["expected_dim"] = 4 + 4 * f.m();
      if (r.dim() != 4 + 4 * f.m()) fail(c, nf.name + ": dim " + std::to_string(r.dim()) + " != 4+4m");
    }
    c.report.push_back(row);
  }
  if (c.passed) c.detail = std::to_string(fams.size()) + " families match";
  return c;
}

Criterion factorization(const Options& o) {
  Criterion c = make(5, "Twisted factorization in m certified steps");
  auto fams = oracle_families(o);
  for (const auto& nf : fams) {
    auto cert = factorize_R(nf.family);
    bool steps_ok = static_cast<int>(cert.steps.size()) == nf.family.m();
    bool rho_ok = true, nil_ok = true;
    for (const auto& s : cert.steps) {
      rho_ok = rho_ok && s.rho_bijective.value_or(false) && s.rho_multiplicative.value_or(false);
      nil_ok = nil_ok && s.ideal_nilpotent;
    }
    c.report.push_back({{"family", nf.name}, {"steps", cert.steps.size()}, {"status", cert.status()},
                        {"rho_iso", rho_ok}, {"nilpotent", nil_ok}});
    if (!cert.passed || !steps_ok || !rho_ok || !nil_ok) fail(c, nf.name + ": certificate " + cert.status());
  }
  if (c.passed) c.detail = std::to_string(fams.size()) + " certificates";
  return c;
}

Criterion hom_table_check(const Options& o) {
  Criterion c = make(6, "Hom(Q_a, Q_b) table of the collection algebra");
  auto cases = dcat_cases(o);
  for (const auto& dc : cases) {
    auto d = build_D(dc.family, dc.delta);
    auto t = hom_table(d);
    bool ok = std::all_of(t.begin(), t.end(), [](const HomTableEntry& e) { return e.ok(); });
    c.report.push_back({{"case", dc.name}, {"dimD", d.dim()}, {"ok", ok}});
    if (!ok) fail(c, dc.name + ": Hom table mismatch");
  }
  if (c.passed) c.detail = std::to_string(cases.size()) + " cases";
  return c;
}

Criterion exceptionality(const Options& o) {
  Criterion c = make(7, "Exceptionality of K_i and acyclicity of Hom(P_a, K_j)");
  auto cases = dcat_cases(o);
  for (const auto& dc : cases) {
    auto rep = exceptionality_suite(build_D(dc.family, dc.delta));
    c.report.push_back({{"case", dc.name}, {"checks", rep.checks.size()}, {"passed", rep.passed()}});
    if (!rep.passed()) {
      std::string why = rep.complex_failures.empty() ? "" : rep.complex_failures.front();
      for (const auto& pc : rep.checks)
        if (why.empty() && !pc.ok()) why = pc.name;
      fail(c, dc.name + ": " + why);
    }
  }
  if (c.passed) c.detail = std::to_string(cases.size()) + " cases";
  return c;
}

Criterion quasi_isomorphism(const Options& o) {
  Criterion c = make(8, "H*(End(P1+P2)) against R_F(chi) and the comparison map");
  auto cases = dcat_cases(o);
  for (const auto& dc : cases) {
    auto cmp = endomorphism_cohomology(build_D(dc.family, dc.delta));
    std::map<int, int> total;
    for (const auto& [blk, dims] : cmp.cohomology)
      for (const auto& [p, v] : dims) total[p] += v;
    nlohmann::json tj = nlohmann::json::object();
    for (const auto& [p, v] : total) tj[std::to_string(p)] = v;
    c.report.push_back({{"case", dc.name}, {"chi", cmp.chi}, {"cohomology", tj}, {"passed", cmp.passed()}});
    if (!cmp.passed()) fail(c, dc.name + ": " + (cmp.note.empty() ? "graded dims differ" : cmp.note));
  }
  if (c.passed) c.detail = std::to_string(cases.size()) + " cases";
  return c;
}

std::set<std::set<std::string>> point_partition(const CurveGraph& g) {
  std::set<std::set<std::string>> out;
  for (const auto& comp : g.components) {
    std::set<std::string> s;
    for (int v : comp) s.insert(g.vertices[v].to_string());
    out.insert(s);
  }
  return out;
}

Criterion curve_suite(const Options& o) {
  Criterion c = make(9, "Curve suite: modest iff lambda surjective, forest reduction, rank-nullity, c <= 2m");
  auto fams = curve_families(o);
  for (const auto& nf : fams) {
    const Family& f = nf.family;
    auto rep = curve_report(f);
    auto red = spanning_forest_reduce(f);
    auto rg = build_graph(red.family);
    bool forest_ok = is_modest(rg) && point_partition(rg) == point_partition(rep.graph);
    bool nullity_ok = true;
    for (int d : {rep.lambda.d, rep.lambda.d + 1}) {
      Matrix lam = lambda_matrix(f, d);
      auto basis = coordinate_ring_basis(f, d);
      if (static_cast<int>(basis.size()) != d + 1 + f.m() - rank(lam)) nullity_ok = false;
      for (const auto& x : basis)
        for (const auto& y : twoalg::apply(lam, x))
          if (y != 0) nullity_ok = false;
    }
    bool c_ok = rep.distinct_points <= 2 * f.m();
    c.report.push_back({{"family", nf.name}, {"m", f.m()}, {"modest", rep.modest}, {"lambda_rank", rep.lambda.rank},
                        {"surjective", rep.lambda.surjective}, {"dropped", red.dropped}, {"c", rep.distinct_points}});
    if (!rep.consistent) fail(c, nf.name + ": modest flag disagrees with lambda");
    if (!rep.lambda.stabilized) fail(c, nf.name + ": lambda rank not stable");
    if (!forest_ok) fail(c, nf.name + ": forest reduction");
    if (!nullity_ok) fail(c, nf.name + ": rank-nullity");
    if (!c_ok) fail(c, nf.name + ": c > 2m");
  }
  if (c.passed) c.detail = std::to_string(fams.size()) + " families";
  return c;
}

nlohmann::json criterion_json(const Criterion& c) {
  return {{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}, {"report", c.report}};
}

// Reruns criteria 1..9 and compares with the first pass.
Criterion determinism(const std::vector<Criterion>& first, const Options& o) {
  Criterion c = make(10, "Determinism: identical seeds give byte-identical JSON");
  for (int i = 1; i <= 9; ++i) {
    std::string a = criterion_json(first[i - 1]).dump();
    std::string b = criterion_json(run_criterion(i, o)).dump();
    c.report.push_back({{"criterion", i}, {"bytes", a.size()}, {"identical", a == b}});
    if (a != b) fail(c, "criterion " + std::to_string(i) + " differs between runs");
  }
  if (c.passed) c.detail = "criteria 1-9 reproduced";
  return c;
}

}  // namespace

std::vector<NamedFamily> oracle_families(const Options& o) {
  std::vector<NamedFamily> out;
  out.push_back({"empty:2", empty_family(2)});
  for (int l = 2; l <= 6; ++l) out.push_back({"green:" + std::to_string(l), green_family(l)});
  for (int n = 1; n <= 3; ++n) out.push_back({"kk:" + std::to_string(n), kk_family(n)});
  const int count = o.quick ? 5 : 20;
  std::mt19937_64 rng(subseed(o, 3, 0));
  for (int idx = 0; idx < count; ++idx) {
    int n = draw(rng, 1, 4), m = draw(rng, 0, 4);
    std::vector<int> ks;
    for (int i = 0; i < m; ++i) ks.push_back(draw(rng, 0, n));
    std::sort(ks.rbegin(), ks.rend());
    auto seed = subseed(o, 3, idx + 1);
    out.push_back({"random:" + std::to_string(n) + "," + std::to_string(m) + "," + kseq_text(ks) + "," +
                       std::to_string(seed),
                   random_family(n, m, ks, seed)});
  }
  return out;
}

std::vector<DcatCase> dcat_cases(const Options& o) {
  std::vector<DcatCase> out;
  const int count = o.quick ? 4 : 10;
  std::mt19937_64 rng(subseed(o, 6, 0));
  for (int idx = 0; idx < count; ++idx) {
    int n, k, m;
    if (idx == 0) {
      n = 2, k = 1, m = 1;
    } else if (idx == count - 1) {
      n = 3, k = 2, m = 3;
    } else {
      n = draw(rng, 2, 3);
      k = draw(rng, 1, std::min(2, n));
      m = draw(rng, 1, 3);
    }
    std::vector<int> delta(m, 0);
    std::string mode = "zero";
    if (idx % 3 == 1) {
      delta.assign(m, 1);
      mode = "one";
    } else if (idx % 3 == 2) {
      for (auto& d : delta) d = draw(rng, -1, 3);
      mode = "mixed";
    }
    auto seed = subseed(o, 6, idx + 1);
    std::string name = "random:" + std::to_string(n) + "," + std::to_string(m) + "," +
                       kseq_text(std::vector<int>(m, k)) + "," + std::to_string(seed) + " delta=" + mode +
                       kseq_text(delta);
    out.push_back({name, random_family(n, m, std::vector<int>(m, k), seed), delta});
  }
  return out;
}

std::vector<NamedFamily> curve_families(const Options& o) {
  std::vector<NamedFamily> out;
  const int count = o.quick ? 10 : 50;
  std::mt19937_64 rng(subseed(o, 9, 0));
  for (int idx = 0; idx < count; ++idx) {
    int m = draw(rng, 0, 6);
    int pool = draw(rng, 2, std::max(2, 2 * m + 1));
    auto seed = subseed(o, 9, idx + 1);
    out.push_back({"curve:m=" + std::to_string(m) + ",pool=" + std::to_string(pool) + "," + std::to_string(seed),
                   random_curve_family(m, pool, seed)});
  }
  auto A = line(1, 1), B = line(1, 2), C = line(1, 3), D = line(1, 4), inf = line(1, 0), zero = line(0, 1);
  out.push_back({"adversarial:empty", Family(2, {})});
  out.push_back({"adversarial:nodal", Family(2, {{A, B}, {C, D}, {inf, zero}})});
  out.push_back({"adversarial:parallel", Family(2, {{A, B}, {A, B}})});
  out.push_back({"adversarial:chain", Family(2, {{A, B}, {C, A}})});
  out.push_back({"adversarial:long-chain", Family(2, {{A, B}, {C, A}, {D, C}, {inf, D}})});
  out.push_back({"adversarial:triangle", Family(2, {{B, A}, {C, B}, {C, A}})});
  out.push_back({"adversarial:triangle-plus-parallel", Family(2, {{B, A}, {C, B}, {C, A}, {inf, zero}, {inf, zero}})});
  out.push_back({"adversarial:infinity-chain", Family(2, {{inf, A}, {B, inf}})});
  return out;
}

Criterion run_criterion(int id, const Options& o) {
  switch (id) {
    case 1: return green_regression(o);
    case 2: return kk_regression(o);
    case 3: return oracle_equivalence(o);
    case 4: return dimension_formulas(o);
    case 5: return factorization(o);
    case 6: return hom_table_check(o);
    case 7: return exceptionality(o);
    case 8: return quasi_isomorphism(o);
    case 9: return curve_suite(o);
    case 10: {
      std::vector<Criterion> first;
      for (int i = 1; i <= 9; ++i) first.push_back(run_criterion(i, o));
      return determinism(first, o);
    }
    default: throw InputError("no criterion " + std::to_string(id));
  }
}

std::vector<Criterion> run_all(const Options& o) {
  std::vector<Criterion> out;
  for (int i = 1; i <= 9; ++i) out.push_back(run_criterion(i, o));
  out.push_back(determinism(out, o));
  return out;
}

std::string summary_line(const Criterion& c) {
  return std::string(c.passed ? "PASS" : "FAIL") + "  criterion " + std::to_string(c.id) + ": " + c.title + " [" +
         c.detail + "]";
}

nlohmann::json to_json(const std::vector<Criterion>& cs, const Options& o) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& c : cs) {
    arr.push_back(criterion_json(c));
    all = all && c.passed;
  }
  return {{"seed", o.seed}, {"quick", o.quick}, {"criteria", arr}, {"passed", all}};
}

}  // namespace twoalg::suite
