#pragma once

// Right modules over a basic algebra: projectives P_i = e_i A (basis elements
// with target i), simples, minimal projective resolutions, global dimension
// and Loewy length.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoalg/algebra.hpp"
#include "twoalg/family.hpp"

namespace twoalg {

// A right module: action[r][i] is (basis i) * (algebra basis r).
struct FDModule {
  int dim = 0;
  std::vector<std::vector<SparseVec>> action;
};

FDModule projective_module(const GradedAlgebra& a, int vertex);
FDModule simple_module(const GradedAlgebra& a, int vertex);
// Unit acts as identity and (m x) y = m (x y) on all basis triples.
std::optional<std::string> find_module_failure(const GradedAlgebra& a, const FDModule& m);

struct ModuleCensus {
  std::vector<int> projective_dims;
  std::vector<int> simple_dims;
};

// Throws VerificationError when the side convention self-test fails.
ModuleCensus simples_and_projectives(const GradedAlgebra& a);

struct Resolution {
  int vertex = 0;
  // betti[t][v]: multiplicity of P_v in the t-th term; betti[0] is P_vertex.
  std::vector<std::vector<int>> betti;
  int length() const { return static_cast<int>(betti.size()) - 1; }
  bool minimal = true;  // every kernel lies in the radical of its free module
};

// Throws CutoffExceeded when the resolution has not stopped after cutoff steps.
Resolution minimal_resolution(const GradedAlgebra& a, int vertex, int cutoff);

// sum_t (-1)^t betti_t . dim P equals dim S = 1.
bool euler_consistent(const GradedAlgebra& a, const Resolution& r);

int loewy_length(const GradedAlgebra& a);

struct GldimReport {
  std::vector<Resolution> resolutions;
  int gldim = 0;
  int loewy = 0;
  bool euler_ok = true;
};

GldimReport gldim(const GradedAlgebra& a, int cutoff);
int default_gldim_cutoff(const Family& f);

nlohmann::json to_json(const GldimReport& r);

}  // namespace twoalg
