#pragma once

// Closed-form construction of R_F = kQ_{n,m}/I_F: basis words of the form
// t b_{p_s} t ... t b_{p_1} t with decreasing b-indices, the C-letters taken
// from the complements T, and multiplication by concatenation followed by
// projecting each C-letter onto the complement its neighbours dictate.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoalg/algebra.hpp"
#include "twoalg/family.hpp"
#include "twoalg/quiverpath.hpp"

namespace twoalg {

enum class SummandTag { None = 0, LeftC = 1, RightC = 2 };

const char* tag_name(SummandTag t);

// A letter of a word: b_index when index > 0, otherwise the C-vector c.
struct Letter {
  int b = 0;
  std::vector<Scalar> c;

  static Letter arrow_b(int i) { return Letter{i, {}}; }
  static Letter vector_c(std::vector<Scalar> v) { return Letter{0, std::move(v)}; }
  bool is_b() const { return b > 0; }
};

using Word = std::vector<Letter>;

struct Component {
  std::vector<int> P;  // increasing, 1-based
  int u = 0;
  SummandTag tag = SummandTag::None;
  int offset = 0;
  int dim = 0;
};

class RAlgebra {
 public:
  const Family& family() const { return family_; }
  const ComplementData& complement_data() const { return complements_; }
  const GradedAlgebra& algebra() const { return algebra_; }
  int dim() const { return algebra_.dim(); }
  const std::vector<Component>& components() const { return components_; }

  // Basis word of an element; empty for the idempotents.
  const Word& word(int id) const { return words_[id]; }
  int u(int id) const { return algebra_.element(id).multidegree[0]; }
  std::vector<int> P(int id) const;
  SummandTag tag(int id) const { return static_cast<SummandTag>(algebra_.element(id).tag); }

  // Coordinates of an arbitrary word with C-letters in standard coordinates.
  SparseVec normalize(const Word& w) const;

 private:
  friend RAlgebra build_R(const Family& f);
  Family family_;
  ComplementData complements_;
  GradedAlgebra algebra_;
  std::vector<Component> components_;
  std::map<std::tuple<std::vector<int>, int, int>, int> component_index_;
  std::vector<Word> words_;
};

// Throws InputError when the family is not transversal.
RAlgebra build_R(const Family& f);

std::string c_letter_name(const std::vector<Scalar>& v);

// Component dimensions predicted by the product formulas, keyed by (P, u, tag).
std::map<std::tuple<std::vector<int>, int, int>, int> formula_dims(const Family& f);
// First component whose built dimension disagrees with the formula.
std::optional<std::string> find_formula_mismatch(const RAlgebra& r);

// Relations 1)-3) instantiated on the subspace bases.
QuiverWithRelations r_presentation(const Family& f);
int default_oracle_cutoff(const Family& f);

struct OracleReport {
  bool agree = false;
  int closed_dim = 0;
  int oracle_dim = 0;
  bool bijective = false;
  bool multiplicative = false;
  bool multidegrees_match = false;
  std::optional<std::pair<int, int>> first_failure;
  std::string message;
};

// Compares R with a quotient of Q_{n,m} by sending c_k and b_i to the
// corresponding arrows of the oracle's quiver.
OracleReport compare_with_oracle(const RAlgebra& r, const QuotientOracle& oracle);
OracleReport verify_against_oracle(const Family& f, int cutoff = -1);
nlohmann::json to_json(const OracleReport& rep);

// zdegree = sum_k chi[k] * multidegree[k]; chi has m+1 entries for R_F.
GradedAlgebra apply_grading(const GradedAlgebra& a, const std::vector<int>& chi);

std::vector<std::vector<int>> cartan_matrix(const GradedAlgebra& a);

// Basis table with (u, P, tag) and structure constants.
nlohmann::json to_json(const RAlgebra& r, const std::vector<int>& chi = {});

}  // namespace twoalg
