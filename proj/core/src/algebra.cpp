#include "twoalg/algebra.hpp"

#include <sstream>

#include "twoalg/errors.hpp"

namespace twoalg {

GradedAlgebra::GradedAlgebra(int vertex_count, std::vector<BasisElement> basis, std::vector<SparseVec> table)
    : vertex_count_(vertex_count), basis_(std::move(basis)), table_(std::move(table)),
      idempotents_(vertex_count, -1) {
  if (table_.size() != basis_.size() * basis_.size())
    throw InputError("structure table size does not match basis");
  for (int i = 0; i < dim(); ++i) {
    const auto& b = basis_[i];
    if (b.source < 0 || b.source >= vertex_count_ || b.target < 0 || b.target >= vertex_count_)
      throw InputError("basis element with vertex out of range");
    if (b.weight == 0) {
      if (b.source != b.target || idempotents_[b.source] >= 0)
        throw InputError("weight 0 is reserved for one idempotent per vertex");
      idempotents_[b.source] = i;
    }
  }
  for (int v = 0; v < vertex_count_; ++v)
    if (idempotents_[v] < 0) throw InputError("missing vertex idempotent");
}

SparseVec GradedAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseBuilder acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const auto& p = product(i, j);
      if (!p.empty()) acc.add(p, a * b);
    }
  return acc.take();
}

SparseVec GradedAlgebra::unit() const {
  SparseBuilder acc;
  for (int e : idempotents_) acc.add(e, 1);
  return acc.take();
}

std::vector<int> GradedAlgebra::radical_basis() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].weight > 0) out.push_back(i);
  return out;
}

std::vector<int> GradedAlgebra::elements_between(int source, int target) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].source == source && basis_[i].target == target) out.push_back(i);
  return out;
}

GradedAlgebra GradedAlgebra::with_zdegrees(const std::vector<int>& zdegrees) const {
  if (static_cast<int>(zdegrees.size()) != dim()) throw InputError("zdegree list length mismatch");
  GradedAlgebra out = *this;
  for (int i = 0; i < dim(); ++i) out.basis_[i].zdegree = zdegrees[i];
  return out;
}

SparseVec unit_vector(int i) { return SparseVec{{i, Scalar(1)}}; }

std::optional<std::array<int, 3>> find_associativity_failure(const GradedAlgebra& a) {
  int n = a.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.element(x).source != a.element(y).target) continue;
      const auto& xy = a.product(x, y);
      for (int z = 0; z < n; ++z) {
        if (a.element(y).source != a.element(z).target) continue;
        const auto& yz = a.product(y, z);
        if (xy.empty() && yz.empty()) continue;
        SparseBuilder lhs, rhs;
        for (const auto& [k, c] : xy) lhs.add(a.product(k, z), c);
        for (const auto& [k, c] : yz) rhs.add(a.product(x, k), c);
        if (lhs.take() != rhs.take()) return std::array<int, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

std::optional<std::string> find_structure_failure(const GradedAlgebra& a) {
  int n = a.dim();
  for (int v = 0; v < a.vertex_count(); ++v) {
    int e = a.idempotent(v);
    for (int x = 0; x < n; ++x) {
      const auto& bx = a.element(x);
      SparseVec left = bx.target == v ? unit_vector(x) : SparseVec{};
      SparseVec right = bx.source == v ? unit_vector(x) : SparseVec{};
      if (a.product(e, x) != left || a.product(x, e) != right)
        return "idempotent " + std::to_string(v + 1) + " acts wrongly on basis " + std::to_string(x);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& p = a.product(x, y);
      if (p.empty()) continue;
      const auto& bx = a.element(x);
      const auto& by = a.element(y);
      if (bx.source != by.target)
        return "nonzero product of non-composable pair " + std::to_string(x) + "," + std::to_string(y);
      for (const auto& [k, c] : p) {
        const auto& bk = a.element(k);
        if (bk.source != by.source || bk.target != bx.target)
          return "product leaves e_t A e_s at pair " + std::to_string(x) + "," + std::to_string(y);
        if (bk.weight != bx.weight + by.weight || bk.zdegree != bx.zdegree + by.zdegree)
          return "product not homogeneous at pair " + std::to_string(x) + "," + std::to_string(y);
      }
    }
  return std::nullopt;
}

std::optional<std::pair<int, int>> find_map_failure(const GradedAlgebra& a, const GradedAlgebra& b,
                                                    const std::vector<SparseVec>& images) {
  if (static_cast<int>(images.size()) != a.dim()) throw InputError("image list length mismatch");
  auto image_of = [&](const SparseVec& v) {
    SparseBuilder acc;
    for (const auto& [i, c] : v) acc.add(images[i], c);
    return acc.take();
  };
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < a.dim(); ++y) {
      SparseVec lhs = image_of(a.product(x, y));
      SparseVec rhs = b.multiply(images[x], images[y]);
      if (lhs != rhs) return std::pair{x, y};
    }
  return std::nullopt;
}

bool is_bijective(const std::vector<SparseVec>& images, int target_dim) {
  return static_cast<int>(images.size()) == target_dim && rank_of(images, target_dim) == target_dim;
}

std::optional<int> nilpotency_index(const GradedAlgebra& a, const std::vector<SparseVec>& generators,
                                    int bound) {
  auto basis_of = [&](const std::vector<SparseVec>& vs) {
    RowEchelon e(a.dim());
    std::vector<SparseVec> out;
    for (const auto& v : vs)
      if (e.insert(v)) out.push_back(v);
    return out;
  };
  std::vector<SparseVec> gens = basis_of(generators);
  std::vector<SparseVec> power = gens;
  for (int t = 1; t <= bound; ++t) {
    if (power.empty()) return t;
    std::vector<SparseVec> next;
    for (const auto& p : power)
      for (const auto& g : gens) {
        auto prod = a.multiply(p, g);
        if (!prod.empty()) next.push_back(std::move(prod));
      }
    power = basis_of(next);
  }
  return std::nullopt;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t structure_checksum(const GradedAlgebra& a) {
  std::ostringstream s;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      if (p.empty()) continue;
      s << i << ',' << j << ':';
      for (const auto& [k, c] : p) s << k << '=' << to_string(c) << ';';
      s << '\n';
    }
  return fnv1a(s.str());
}

nlohmann::json to_json(const GradedAlgebra& a) {
  nlohmann::json basis = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) {
    const auto& b = a.element(i);
    basis.push_back({{"id", i},
                     {"source", b.source + 1},
                     {"target", b.target + 1},
                     {"multidegree", b.multidegree},
                     {"zdegree", b.zdegree},
                     {"word", b.word}});
  }
  nlohmann::json table = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      if (p.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, c] : p) terms.push_back({k, to_string(c)});
      table.push_back({i, j, terms});
    }
  return {{"vertex_count", a.vertex_count()}, {"dim", a.dim()}, {"basis", basis}, {"structure_constants", table}};
}

}  // namespace twoalg
