#pragma once

// Quivers, path vectors and a path-length-truncated quotient oracle for
// kQ/I with I generated by length-homogeneous relations.
//
// Paths are written like products: the leftmost arrow is traversed last, so
// the word a_1 a_2 ... a_L is composable when source(a_i) == target(a_{i+1}).

#include <string>
#include <vector>

#include "twoalg/algebra.hpp"
#include "twoalg/exactla.hpp"

namespace twoalg {

struct Arrow {
  int source = 0;
  int target = 0;
  int zdegree = 0;
  std::string name;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

// Q_{n,m}: vertices 1, 2; arrows c_1..c_n : 1 -> 2 then b_1..b_m : 2 -> 1.
Quiver two_vertex_quiver(int n, int m);

struct Path {
  int vertex = 0;           // the vertex of an empty path
  std::vector<int> arrows;  // leftmost letter first

  static Path trivial(int v) { return Path{v, {}}; }
  static Path of(std::vector<int> arrows) { return Path{-1, std::move(arrows)}; }
  int length() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Path&, const Path&) = default;
};

int path_source(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);
bool is_composable(const Quiver& q, const Path& p);
std::string path_word(const Quiver& q, const Path& p);

struct PathTerm {
  Scalar coef;
  Path path;
};

struct PathVector {
  std::vector<PathTerm> terms;

  static PathVector single(Path p, Scalar coef = 1) { return PathVector{{PathTerm{std::move(coef), std::move(p)}}}; }
  PathVector& add(Path p, Scalar coef = 1) {
    terms.push_back(PathTerm{std::move(coef), std::move(p)});
    return *this;
  }
};

struct QuiverWithRelations {
  Quiver quiver;
  std::vector<PathVector> relations;
};

class QuotientOracle {
 public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<PathVector>& relations() const { return relations_; }
  int cutoff() const { return cutoff_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Path>& basis() const { return basis_; }
  // Dimension of the quotient in each path length 0, 1, ...
  std::vector<int> dims_by_length() const;
  int index_of(const Path& p) const;

  SparseVec reduce(const Path& p) const;
  SparseVec reduce(const PathVector& v) const;
  SparseVec right_multiply(const SparseVec& x, int arrow) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  PathVector multiply(const PathVector& x, const PathVector& y) const;
  PathVector to_path_vector(const SparseVec& v) const;

  // Basis and structure constants as an algebra; multidegree counts arrows.
  GradedAlgebra to_algebra() const;

 private:
  friend QuotientOracle build_oracle(const Quiver&, const std::vector<PathVector>&, int);
  Quiver quiver_;
  std::vector<PathVector> relations_;
  int cutoff_ = 0;
  std::vector<Path> basis_;
  std::vector<int> level_start_;
  // rmul_[i][a]: normal form of basis_i * arrow a.
  std::vector<std::vector<SparseVec>> rmul_;
};

// Throws CutoffExceeded when a normal form of length cutoff survives, and
// InputError on malformed relations.
QuotientOracle build_oracle(const Quiver& q, const std::vector<PathVector>& relations, int cutoff);

// Green algebra G_l: b_i c_j for i < j and c_j b_i for j <= i.
QuiverWithRelations green_quiver(int l);
// Kirkman-Kuzmanovich algebra KK_n, relation families i)-iv).
QuiverWithRelations kk_quiver(int n);

}  // namespace twoalg
