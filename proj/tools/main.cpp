// twoalg: command-line front end for the algebra, factorization, Hom-complex and curve checks.
//
// Exit codes: 0 all checks pass, 1 a check failed or a cutoff was hit, 2 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "family_spec.hpp"
#include "suite.hpp"
#include "twoalg/curve.hpp"
#include "twoalg/dcat.hpp"
#include "twoalg/errors.hpp"
#include "twoalg/homology.hpp"
#include "twoalg/ralgebra.hpp"
#include "twoalg/twist.hpp"

namespace {

using namespace twoalg;

struct Args {
  std::string family;
  std::string chi;
  std::string delta;
  int cutoff = -1;
  std::string out;
  std::uint64_t seed = 1;
  bool quick = false;
};

void write_json(const Args& a, const nlohmann::json& j) {
  if (a.out.empty()) return;
  std::ofstream f(a.out);
  if (!f) throw InputError("cannot write '" + a.out + "'");
  f << j.dump(2) << '\n';
}

std::vector<int> chi_or_default(const Args& a, const Family& f) {
  auto chi = parse_int_list(a.chi);
  if (!chi.empty() && static_cast<int>(chi.size()) != f.m() + 1)
    throw InputError("--chi needs m+1 = " + std::to_string(f.m() + 1) + " entries");
  return chi;
}

int check_family(const Args& a) {
  auto f = parse_family_spec(a.family);
  auto cert = check_G(f);
  std::cout << "n = " << f.n() << ", m = " << f.m() << ", transversal = " << (cert.passed ? "yes" : "no") << '\n';
  write_json(a, {{"family", to_json(f)}, {"transversality", to_json(cert)}});
  return cert.passed ? 0 : 1;
}

int build_algebra(const Args& a) {
  auto f = parse_family_spec(a.family);
  auto chi = chi_or_default(a, f);
  auto r = build_R(f);
  auto bad = find_formula_mismatch(r);
  std::cout << "dim = " << r.dim() << ", cartan = " << nlohmann::json(cartan_matrix(r.algebra())).dump()
            << ", formulas " << (bad ? "FAIL: " + *bad : std::string("ok")) << '\n';
  write_json(a, to_json(r, chi));
  return bad ? 1 : 0;
}

int verify_oracle(const Args& a) {
  auto f = parse_family_spec(a.family);
  auto rep = verify_against_oracle(f, a.cutoff);
  std::cout << "closed form " << rep.closed_dim << ", oracle " << rep.oracle_dim << ": "
            << (rep.agree ? "agree" : "DISAGREE " + rep.message) << '\n';
  write_json(a, to_json(rep));
  return rep.agree ? 0 : 1;
}

int run_gldim(const Args& a) {
  auto f = parse_family_spec(a.family);
  auto rep = gldim(build_R(f).algebra(), a.cutoff > 0 ? a.cutoff : default_gldim_cutoff(f));
  std::cout << "gldim = " << rep.gldim << ", loewy = " << rep.loewy << '\n';
  write_json(a, to_json(rep));
  return rep.euler_ok ? 0 : 1;
}

int factorize(const Args& a) {
  auto f = parse_family_spec(a.family);
  auto cert = factorize_R(f, chi_or_default(a, f));
  std::cout << cert.status() << ": " << cert.steps.size() << " peel steps, terminal " << cert.terminal << ", "
            << cert.elementary_steps() << " elementary steps\n";
  write_json(a, to_json(cert));
  return cert.passed ? 0 : 1;
}

int dcat_verify(const Args& a) {
  auto f = parse_family_spec(a.family);
  auto delta = parse_int_list(a.delta);
  if (delta.empty()) delta.assign(f.m(), 0);
  auto d = build_D(f, delta);
  auto table = hom_table(d);
  bool table_ok = std::all_of(table.begin(), table.end(), [](const HomTableEntry& e) { return e.ok(); });
  auto ex = exceptionality_suite(d);
  auto cmp = endomorphism_cohomology(d);
  std::cout << "dim D = " << d.dim() << "\n"
            << "Hom table: " << (table_ok ? "ok" : "FAIL") << "\n"
            << "exceptionality: " << (ex.passed() ? "ok" : "FAIL") << "\n"
            << "H*(End(P1+P2)) vs R_F(chi): " << (cmp.passed() ? "ok" : "FAIL " + cmp.note) << '\n';
  write_json(a, {{"delta", delta},
                 {"dimD", d.dim()},
                 {"hom_table", to_json(table)},
                 {"exceptionality", to_json(ex)},
                 {"endomorphism_cohomology", to_json(cmp)}});
  return table_ok && ex.passed() && cmp.passed() ? 0 : 1;
}

int curve(const Args& a) {
  auto f = parse_family_spec(a.family);
  auto rep = curve_report(f);
  auto red = spanning_forest_reduce(f);
  std::cout << "modest = " << (rep.modest ? "yes" : "no") << ", lambda rank = " << rep.lambda.rank << " of "
            << 2 * f.m() << " (d = " << rep.lambda.d << "), singular points = " << rep.singular_points
            << ", c = " << rep.distinct_points << '\n';
  auto j = to_json(rep);
  j["forest_reduction"] = {{"kept", red.kept}, {"dropped", red.dropped}};
  write_json(a, j);
  return rep.consistent ? 0 : 1;
}

int demo(const Args& a) {
  suite::Options o{a.seed, a.quick};
  auto results = suite::run_all(o);
  bool all = true;
  for (const auto& c : results) {
    std::cout << suite::summary_line(c) << '\n';
    all = all && c.passed;
  }
  write_json(a, suite::to_json(results, o));
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver algebras R_F: construction, verification, global dimension, factorization, Hom complexes, curves"};
  app.require_subcommand(1);
  Args args;

  auto add_family = [&](CLI::App* s) {
    s->add_option("--family", args.family, "family JSON file, green:l, kk:n, empty:n or random:n,m,(k1,..),seed")
        ->required();
  };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", args.out, "write the JSON report here"); };

  auto* cf = app.add_subcommand("check-family", "check dimensions and transversality");
  add_family(cf);
  add_out(cf);
  auto* ba = app.add_subcommand("build-algebra", "closed-form R_F with basis and structure constants");
  add_family(ba);
  ba->add_option("--chi", args.chi, "grading, m+1 comma-separated integers");
  add_out(ba);
  auto* vo = app.add_subcommand("verify-oracle", "compare R_F with the path-quotient oracle");
  add_family(vo);
  vo->add_option("--cutoff", args.cutoff, "path length cutoff");
  add_out(vo);
  auto* gd = app.add_subcommand("gldim", "global dimension and Loewy length");
  add_family(gd);
  gd->add_option("--cutoff", args.cutoff, "resolution length cutoff");
  add_out(gd);
  auto* fz = app.add_subcommand("factorize", "twisted tensor factorization certificate");
  add_family(fz);
  fz->add_option("--chi", args.chi, "grading, m+1 comma-separated integers");
  add_out(fz);
  auto* dv = app.add_subcommand("dcat-verify", "Hom complexes over the collection algebra");
  add_family(dv);
  dv->add_option("--delta", args.delta, "degrees delta_i, m comma-separated integers");
  add_out(dv);
  auto* cv = app.add_subcommand("curve", "gluing graph, modesty and the evaluation map");
  add_family(cv);
  add_out(cv);
  auto* dm = app.add_subcommand("demo", "run acceptance criteria 1-10");
  dm->add_flag("--quick", args.quick, "smaller family sets");
  dm->add_option("--seed", args.seed, "seed for the random families");
  add_out(dm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cf->parsed()) return check_family(args);
    if (ba->parsed()) return build_algebra(args);
    if (vo->parsed()) return verify_oracle(args);
    if (gd->parsed()) return run_gldim(args);
    if (fz->parsed()) return factorize(args);
    if (dv->parsed()) return dcat_verify(args);
    if (cv->parsed()) return curve(args);
    if (dm->parsed()) return demo(args);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const CutoffExceeded& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
