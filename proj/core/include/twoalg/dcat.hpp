#pragma once

// The algebra D_F(δ) of the graded quiver with vertices 1, 2, l_1..l_m,
// twisted complexes of its projectives Q_a = e_a D, Hom complexes between
// them, and the comparison of H*(End(P_1 ⊕ P_2)) with R_F(χ).
//
// Q[s] puts the generator of Q in degree -s. A component Q_a[s] -> Q_b[t]
// given by left multiplication with x in e_b D e_a has degree deg(x) + s - t.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoalg/algebra.hpp"
#include "twoalg/family.hpp"
#include "twoalg/quiverpath.hpp"

namespace twoalg {

class DAlgebra {
 public:
  const Family& family() const { return family_; }
  const std::vector<int>& delta() const { return delta_; }
  int k() const { return k_; }
  const QuotientOracle& oracle() const { return oracle_; }
  const GradedAlgebra& algebra() const { return algebra_; }
  int dim() const { return algebra_.dim(); }

  // 0-based vertex ids.
  static int vertex_one() { return 0; }
  static int vertex_two() { return 1; }
  static int vertex_l(int i) { return 1 + i; }  // i is 1-based
  std::string vertex_name(int v) const;

  // Arrow ids.
  int arrow_c(int l) const { return l; }  // 0-based coordinate
  int arrow_beta(int i) const;
  int arrow_phi(int i, int j) const;  // 1-based i, j

  // Elements of D.
  SparseVec c_element(const std::vector<Scalar>& c) const;
  SparseVec beta(int i) const;
  SparseVec phi(int i, int j) const;
  // φ_ij composed with the C-vector c.
  SparseVec phi_times(int i, int j, const std::vector<Scalar>& c) const;
  SparseVec idempotent(int v) const { return unit_vector(algebra_.idempotent(v)); }

 private:
  friend DAlgebra build_D(const Family& f, const std::vector<int>& delta);
  Family family_;
  std::vector<int> delta_;
  int k_ = 0;
  QuotientOracle oracle_;
  GradedAlgebra algebra_;
};

QuiverWithRelations d_presentation(const Family& f, const std::vector<int>& delta);
// Requires an equidimensional (G)-family with k >= 1 and |delta| = m.
DAlgebra build_D(const Family& f, const std::vector<int>& delta);

struct Summand {
  int vertex = 0;
  int shift = 0;
  std::string label;
};

// (target summand, source summand) -> element of D.
using HomMatrix = std::map<std::pair<int, int>, SparseVec>;

struct TwistedComplex {
  std::string name;
  std::vector<Summand> summands;
  HomMatrix differential;
};

HomMatrix compose(const GradedAlgebra& d, const HomMatrix& g, const HomMatrix& f);
HomMatrix add(const HomMatrix& a, const HomMatrix& b, const Scalar& coef = 1);
bool is_zero(const HomMatrix& m);

// d^2 = 0, entry degrees 1 + s_target - s_source, strictly lower triangular
// (entries go from later summands to earlier ones).
std::optional<std::string> find_complex_failure(const GradedAlgebra& d, const TwistedComplex& x);

std::vector<TwistedComplex> projectives(const DAlgebra& d);

struct PKComplexes {
  TwistedComplex P1;
  TwistedComplex P2;
  std::vector<TwistedComplex> K;
};

PKComplexes build_P1_P2_K(const DAlgebra& d);

class HomComplex {
 public:
  HomComplex(const GradedAlgebra& d, TwistedComplex x, TwistedComplex y);

  struct Entry {
    int target;  // summand of Y
    int source;  // summand of X
    int element;  // basis element of D
  };

  std::vector<int> degrees() const;
  int dim(int p) const;
  const std::vector<Entry>& basis(int p) const;
  SparseVec to_coords(int p, const HomMatrix& f) const;
  HomMatrix to_matrix(int p, const SparseVec& v) const;
  // D(f) = d_Y f - (-1)^p f d_X, in coordinates of degree p+1.
  SparseVec differential(int p, const SparseVec& v) const;
  std::vector<SparseVec> differential_rows(int p) const;
  int cohomology_dim(int p) const;
  std::map<int, int> complex_dims() const;
  std::map<int, int> cohomology_dims() const;
  // Whether v (degree p) is a cycle.
  bool is_cycle(int p, const SparseVec& v) const;
  // Rank of the given cycles modulo boundaries of degree p.
  int rank_modulo_boundaries(int p, const std::vector<SparseVec>& cycles) const;

  const TwistedComplex& source() const { return x_; }
  const TwistedComplex& target() const { return y_; }

 private:
  const GradedAlgebra* d_;
  TwistedComplex x_;
  TwistedComplex y_;
  std::map<int, std::vector<Entry>> basis_;
  std::map<std::tuple<int, int, int>, std::pair<int, int>> index_;  // (t, r, x) -> (p, position)
  static const std::vector<Entry> empty_;
};

using DegreeDims = std::map<int, int>;

struct HomTableEntry {
  int source;
  int target;
  DegreeDims expected;
  DegreeDims actual;
  bool ok() const { return expected == actual; }
};

// Hom(Q_a, Q_b) for all vertex pairs against the expected table.
std::vector<HomTableEntry> hom_table(const DAlgebra& d);

struct PairCheck {
  std::string name;
  DegreeDims cohomology;
  DegreeDims expected;
  bool euler_ok = true;
  bool ok() const { return euler_ok && cohomology == expected; }
};

struct ExceptionalityReport {
  std::vector<std::string> complex_failures;  // d^2 or degree-rule violations
  std::vector<PairCheck> checks;
  bool passed() const;
};

ExceptionalityReport exceptionality_suite(const DAlgebra& d);

struct CohomologyComparison {
  std::vector<int> chi;
  // (source block, target block) 1-based -> degree -> dim.
  std::map<std::pair<int, int>, DegreeDims> cohomology;
  std::map<std::pair<int, int>, DegreeDims> expected;
  bool cycles = false;
  bool multiplicative = false;
  bool relations = false;
  bool bijective = false;
  std::string note;
  bool passed() const { return cycles && multiplicative && relations && bijective && cohomology == expected; }
};

// χ = (0, 1 - δ_1, ..., 1 - δ_m).
std::vector<int> chi_for_delta(const std::vector<int>& delta);
CohomologyComparison endomorphism_cohomology(const DAlgebra& d);

nlohmann::json to_json(const std::vector<HomTableEntry>& t);
nlohmann::json to_json(const ExceptionalityReport& r);
nlohmann::json to_json(const CohomologyComparison& c);

}  // namespace twoalg
