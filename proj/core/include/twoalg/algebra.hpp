#pragma once

// Finite-dimensional basic algebras given by a basis and structure constants.
//
// Convention: a basis element with source s and target t lies in e_t A e_s,
// and x*y is nonzero only when source(x) == target(y) ("y first, then x").

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoalg/exactla.hpp"

namespace twoalg {

struct BasisElement {
  int source = 0;
  int target = 0;
  int weight = 0;  // radical layer; 0 exactly for vertex idempotents
  int zdegree = 0;
  std::vector<int> multidegree;
  int tag = 0;
  std::string word;
  std::vector<int> letters;  // arrow ids, leftmost letter first
};

class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  // table has dim*dim entries; entry i*dim+j is the product of basis i and j.
  GradedAlgebra(int vertex_count, std::vector<BasisElement> basis, std::vector<SparseVec> table);

  int vertex_count() const { return vertex_count_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& element(int i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const SparseVec& product(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim() + j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;

  int idempotent(int vertex) const { return idempotents_[vertex]; }
  SparseVec unit() const;
  std::vector<int> radical_basis() const;
  std::vector<int> elements_between(int source, int target) const;

  GradedAlgebra with_zdegrees(const std::vector<int>& zdegrees) const;

 private:
  int vertex_count_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<SparseVec> table_;
  std::vector<int> idempotents_;
};

SparseVec unit_vector(int i);

// First basis triple (x, y, z) with (xy)z != x(yz).
std::optional<std::array<int, 3>> find_associativity_failure(const GradedAlgebra& a);
// Checks idempotent action, composability and weight/zdegree additivity; returns a diagnostic.
std::optional<std::string> find_structure_failure(const GradedAlgebra& a);
// First basis pair (x, y) with f(xy) != f(x) f(y); images[i] is f(basis i) in b.
std::optional<std::pair<int, int>> find_map_failure(const GradedAlgebra& a, const GradedAlgebra& b,
                                                    const std::vector<SparseVec>& images);
bool is_bijective(const std::vector<SparseVec>& images, int target_dim);

// Least t with J^t = 0 for the span J of the generators, or nullopt past bound.
std::optional<int> nilpotency_index(const GradedAlgebra& a, const std::vector<SparseVec>& generators,
                                    int bound);

std::uint64_t fnv1a(const std::string& text);
// Hash of the structure-constant table in canonical (i, j, k) order.
std::uint64_t structure_checksum(const GradedAlgebra& a);

// Vertices are 1-based in serialized form.
nlohmann::json to_json(const GradedAlgebra& a);

}  // namespace twoalg
