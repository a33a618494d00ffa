#pragma once

// Twisted tensor products A ⊗_R^τ B of finite-dimensional algebras over a
// common subalgebra R, the v-twist built from augmentations, the peeling
// factorization of R_F, and generalized Green algebras.
//
// A ⊗_R B is realized as the quotient of the span of composable pairs (a, b)
// (source(a) == target(b)) by a r ⊗ b - a ⊗ r b for r in the radical of R.

#include <array>
#include <cstdint>
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

struct RingOverR {
  GradedAlgebra base;
  GradedAlgebra total;
  std::vector<SparseVec> inclusion;                    // base basis -> total
  std::optional<std::vector<SparseVec>> augmentation;  // total basis -> base
  std::string name;
};

// Unital multiplicative inclusion, multiplicative augmentation, and
// augmentation ∘ inclusion = id.
std::optional<std::string> find_ring_failure(const RingOverR& r);

class TensorSpace {
 public:
  int dim() const { return static_cast<int>(basis_.size()); }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  const std::pair<int, int>& pair(int id) const { return pairs_[id]; }
  // Representative pair of a basis element of the quotient.
  const std::pair<int, int>& basis_pair(int q) const { return pairs_[basis_[q]]; }
  int pair_id(int a, int b) const;  // -1 when not composable

  // x ⊗ y in pair coordinates; non-composable terms vanish.
  SparseVec tensor(const SparseVec& x, const SparseVec& y) const;
  // Pair coordinates -> quotient coordinates.
  SparseVec project(const SparseVec& pairs) const;
  const std::vector<SparseVec>& relations() const { return relations_; }

 private:
  friend TensorSpace balanced_tensor(const RingOverR& a, const RingOverR& b);
  std::vector<int> left_source_;
  std::vector<int> right_target_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::pair<int, int>, int> index_;
  std::vector<SparseVec> relations_;
  RowEchelon echelon_{0};
  std::vector<int> basis_;
  std::vector<int> coordinate_;  // pair id -> basis position, -1 if eliminated
};

TensorSpace balanced_tensor(const RingOverR& a, const RingOverR& b);

struct TwistMap {
  TensorSpace domain;    // B ⊗_R A
  TensorSpace codomain;  // A ⊗_R B
  std::vector<SparseVec> images;  // per domain basis element
  bool fixsides = false;
  bool well_defined = false;

  // τ on an arbitrary element of B ⊗_k A given in domain pair coordinates.
  SparseVec apply(const SparseVec& domain_pairs) const;
};

// τ(b ⊗ a) = ε_A(π_B b) a ⊗ 1 + 1 ⊗ b ε_B(π_A a) - ε_A(π_B b) ⊗ ε_B(π_A a).
// Throws InputError when an augmentation is missing.
TwistMap v_twist(const RingOverR& a, const RingOverR& b);

struct TwistedProduct {
  TensorSpace space;
  GradedAlgebra algebra;  // basis element q is the class of space.basis_pair(q)
  std::optional<std::array<int, 3>> associativity_failure;
};

// Basis words, degrees and multidegrees of the pair (a, b) are concatenated.
TwistedProduct twisted_product(const RingOverR& a, const RingOverR& b, const TwistMap& tau);

// Small building blocks.
GradedAlgebra semisimple_algebra(int vertices);
// One arrow source -> target (0-based) of the given degree; letter is stored in letters.
GradedAlgebra one_arrow_algebra(int vertices, int source, int target, int zdegree, const std::string& name,
                                int letter);
// Kronecker algebra on two vertices with arrows the basis of V (1 -> 2), all in degree zdegree.
GradedAlgebra kronecker_on(const Subspace& V, int zdegree);
// Ring over the semisimple part: inclusion of idempotents, augmentation killing the radical.
RingOverR over_semisimple(GradedAlgebra total, std::string name);

struct FactorStep {
  std::string left;
  std::string base;
  std::string right;
  int left_dim = 0;
  int base_dim = 0;
  int right_dim = 0;
  int tensor_dim = 0;
  int target_dim = 0;
  bool ring_axioms = false;
  bool fixsides = false;
  bool well_defined = false;
  bool associative = false;
  bool left_factor_iso = true;  // the left factor is itself a verified twisted product
  // Comparison map into the target algebra; absent when the step has no external target.
  std::optional<bool> rho_bijective;
  std::optional<bool> rho_multiplicative;
  std::optional<bool> degrees_match;
  bool ideal_nilpotent = false;
  int nilpotency = 0;
  std::uint64_t checksum = 0;
  std::string note;

  bool passed() const {
    return ring_axioms && fixsides && well_defined && associative && left_factor_iso && rho_bijective.value_or(true) &&
           rho_multiplicative.value_or(true) && degrees_match.value_or(true) && ideal_nilpotent;
  }
};

struct FactorizationCertificate {
  std::vector<FactorStep> steps;
  std::string terminal;             // e.g. "K_3"
  std::vector<FactorStep> terminal_steps;  // K_n as iterated K_1 over S
  bool terminal_verified = false;          // the iterated product agrees with K_n
  std::vector<int> chi;
  bool passed = false;

  int elementary_steps() const;
  std::string status() const { return passed ? "CERTIFIED-BY-FACTORIZATION" : "FAILED"; }
};

// chi has m+1 entries, or is empty for the ungraded algebra.
FactorizationCertificate factorize_R(const Family& f, const std::vector<int>& chi = {});

struct ProjectivityReport {
  bool injective = false;
  int rank = 0;
  int columns = 0;
  int q1_copies = 0;
  int q2_copies = 0;
};

// V_m ⊗ e_1 R_G -> e_2 R_G, v ⊗ x ↦ v x; requires m >= 1.
ProjectivityReport left_projectivity_check(const Family& f);

struct GreenStep {
  int i = 0;  // 1-based vertices
  int j = 0;
  int d = 0;
};

struct GeneralizedGreen {
  GradedAlgebra algebra;  // letters are step indices
  FactorizationCertificate certificate;
};

GeneralizedGreen generalized_green(int vertices, const std::vector<GreenStep>& steps);
// Steps (1,2,0), (2,1,0), ... of length l, giving G_l.
std::vector<GreenStep> green_steps(int l);
// Compare an algebra whose letters are arrow ids of the oracle quiver with the oracle.
struct LetterComparison {
  bool bijective = false;
  bool multiplicative = false;
  bool agree() const { return bijective && multiplicative; }
};
LetterComparison compare_by_letters(const GradedAlgebra& a, const std::vector<int>& letter_to_arrow,
                                    const QuotientOracle& oracle);

nlohmann::json to_json(const FactorStep& s);
nlohmann::json to_json(const FactorizationCertificate& c);
nlohmann::json to_json(const ProjectivityReport& r);

}  // namespace twoalg
