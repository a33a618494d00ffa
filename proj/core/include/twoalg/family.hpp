#pragma once

// Families {V_1, W_1; ...; V_m, W_m} of subspaces of C = Q^n, the
// transversality condition V_i ∩ W_j = 0 for i >= j, and the complements
// T_ij of U_ij = V_i + W_j with their projections.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoalg/exactla.hpp"

namespace twoalg {

struct SubspacePair {
  Subspace V;
  Subspace W;
};

class Family {
 public:
  Family() = default;
  // Validates dims (dim V_i + dim W_i = n) and that dim V_i is non-increasing.
  Family(int n, std::vector<SubspacePair> pairs);

  int n() const { return n_; }
  int m() const { return static_cast<int>(pairs_.size()); }
  // 1-based accessors.
  const Subspace& V(int i) const { return pairs_.at(i - 1).V; }
  const Subspace& W(int i) const { return pairs_.at(i - 1).W; }
  int k(int i) const { return V(i).dim(); }
  std::vector<int> kseq() const;
  const std::vector<SubspacePair>& pairs() const { return pairs_; }
  bool is_equidimensional() const;
  // First p pairs.
  Family prefix(int p) const;

  friend bool operator==(const Family& a, const Family& b) {
    if (a.n_ != b.n_ || a.pairs_.size() != b.pairs_.size()) return false;
    for (std::size_t i = 0; i < a.pairs_.size(); ++i)
      if (!(a.pairs_[i].V == b.pairs_[i].V) || !(a.pairs_[i].W == b.pairs_[i].W)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<SubspacePair> pairs_;
};

struct GCertificate {
  struct Entry {
    int i;
    int j;
    int intersection_dim;
  };
  std::vector<Entry> entries;  // all i >= j, 1-based
  bool passed = true;
  std::optional<std::pair<int, int>> first_failure;
};

GCertificate check_G(const Family& f);

// A complement together with the projection onto it (coordinates in its basis).
struct Projection {
  Subspace space;
  Matrix theta;  // dim space x n
};

struct ComplementData {
  std::map<std::pair<int, int>, Projection> middle;  // (i, j), i >= j: T_ij, kernel U_ij
  std::vector<Projection> left_end;                  // index i-1: V_i, kernel W_i
  std::vector<Projection> right_end;                 // index i-1: W_i, kernel V_i

  const Projection& T(int i, int j) const { return middle.at({i, j}); }
  const Projection& left(int i) const { return left_end.at(i - 1); }
  const Projection& right(int i) const { return right_end.at(i - 1); }
};

// Throws InputError when the transversality condition fails.
ComplementData complements(const Family& f);

Family empty_family(int n);
Family green_family(int l);
Family kk_family(int n);
Family random_family(int n, int m, const std::vector<int>& kseq, std::uint64_t seed);

nlohmann::json to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GCertificate& c);

}  // namespace twoalg
