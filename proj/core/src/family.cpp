#include "twoalg/family.hpp"

#include <random>

#include "twoalg/errors.hpp"

namespace twoalg {

Family::Family(int n, std::vector<SubspacePair> pairs) : n_(n), pairs_(std::move(pairs)) {
  if (n_ < 0) throw InputError("family: n must be nonnegative");
  int prev = n_;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    std::string at = " at pair " + std::to_string(i + 1);
    if (p.V.ambient() != n_ || p.W.ambient() != n_) throw InputError("family: ambient dimension mismatch" + at);
    if (p.V.dim() + p.W.dim() != n_) throw InputError("family: dim V + dim W != n" + at);
    if (p.V.dim() > prev) throw InputError("family: dimensions of V_i must be non-increasing" + at);
    prev = p.V.dim();
  }
}

std::vector<int> Family::kseq() const {
  std::vector<int> k;
  for (const auto& p : pairs_) k.push_back(p.V.dim());
  return k;
}

bool Family::is_equidimensional() const {
  for (const auto& p : pairs_)
    if (p.V.dim() != pairs_.front().V.dim()) return false;
  return true;
}

Family Family::prefix(int p) const {
  return Family(n_, std::vector<SubspacePair>(pairs_.begin(), pairs_.begin() + p));
}

GCertificate check_G(const Family& f) {
  GCertificate cert;
  for (int i = 1; i <= f.m(); ++i)
    for (int j = 1; j <= i; ++j) {
      int d = f.V(i).dim() + f.W(j).dim() - sum(f.V(i), f.W(j)).dim();
      cert.entries.push_back({i, j, d});
      if (d != 0 && cert.passed) {
        cert.passed = false;
        cert.first_failure = std::pair{i, j};
      }
    }
  return cert;
}

ComplementData complements(const Family& f) {
  auto cert = check_G(f);
  if (!cert.passed)
    throw InputError("transversality fails at (" + std::to_string(cert.first_failure->first) + "," +
                     std::to_string(cert.first_failure->second) + ")");
  ComplementData out;
  int n = f.n();
  for (int i = 1; i <= f.m(); ++i) {
    out.left_end.push_back({f.V(i), projection_along(f.W(i), f.V(i))});
    out.right_end.push_back({f.W(i), projection_along(f.V(i), f.W(i))});
  }
  for (int i = 1; i <= f.m(); ++i)
    for (int j = 1; j <= i; ++j) {
      Subspace u = sum(f.V(i), f.W(j));
      if (u.dim() != n + f.k(i) - f.k(j))
        throw InputError("unexpected dimension of V_" + std::to_string(i) + " + W_" + std::to_string(j));
      Subspace t = coordinate_complement(u);
      out.middle.emplace(std::pair{i, j}, Projection{t, projection_along(u, t)});
    }
  return out;
}

namespace {

std::vector<Scalar> unit(int n, int i) {
  std::vector<Scalar> e(n);
  e[i] = 1;
  return e;
}

}  // namespace

Family empty_family(int n) { return Family(n, {}); }

Family green_family(int l) {
  if (l < 2) throw InputError("green_family: l must be at least 2");
  int m = l / 2;
  int n = l - m;
  std::vector<SubspacePair> pairs;
  for (int i = 1; i <= m; ++i) {
    std::vector<std::vector<Scalar>> w, v;
    for (int c = 0; c < i; ++c) w.push_back(unit(n, c));
    for (int c = i; c < n; ++c) v.push_back(unit(n, c));
    pairs.push_back({Subspace::span(n, v), Subspace::span(n, w)});
  }
  return Family(n, std::move(pairs));
}

Family kk_family(int n) {
  if (n < 1) throw InputError("kk_family: n must be positive");
  std::vector<SubspacePair> pairs;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<Scalar>> w;
    for (int c = 0; c < i; ++c) w.push_back(unit(n, c));
    for (int c = i + 1; c < n; ++c) {
      auto d = unit(n, c);
      d[i] = -1;
      w.push_back(std::move(d));
    }
    pairs.push_back({Subspace::span(n, {unit(n, i)}), Subspace::span(n, w)});
  }
  return Family(n, std::move(pairs));
}

Family random_family(int n, int m, const std::vector<int>& kseq, std::uint64_t seed) {
  if (static_cast<int>(kseq.size()) != m) throw InputError("random_family: kseq length must equal m");
  for (int i = 0; i < m; ++i) {
    if (kseq[i] < 0 || kseq[i] > n) throw InputError("random_family: k_i outside [0, n]");
    if (i > 0 && kseq[i] > kseq[i - 1]) throw InputError("random_family: kseq must be non-increasing");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<SubspacePair> pairs;
    for (int i = 0; i < m; ++i) {
      Subspace v = random_subspace(n, kseq[i], rng);
      Subspace w = random_subspace(n, n - kseq[i], rng);
      pairs.push_back({std::move(v), std::move(w)});
    }
    Family f(n, std::move(pairs));
    if (check_G(f).passed) return f;
  }
  throw InputError("random_family: 100 consecutive draws violate transversality");
}

namespace {

nlohmann::json rows_json(const Subspace& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < s.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : s.basis_vector(r)) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return rows;
}

Subspace rows_from_json(const nlohmann::json& j, int n, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError(where + ": each row must have n entries");
    std::vector<Scalar> v;
    for (const auto& x : row) {
      if (x.is_string())
        v.push_back(parse_scalar(x.get<std::string>()));
      else if (x.is_number_integer())
        v.emplace_back(x.get<long>());
      else
        throw InputError(where + ": entries must be rational strings");
    }
    rows.push_back(std::move(v));
  }
  Subspace s = Subspace::span(n, rows);
  if (s.dim() != static_cast<int>(rows.size())) throw InputError(where + ": rows are linearly dependent");
  return s;
}

}  // namespace

nlohmann::json to_json(const Family& f) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : f.pairs()) pairs.push_back({{"V", rows_json(p.V)}, {"W", rows_json(p.W)}});
  return {{"n", f.n()}, {"m", f.m()}, {"pairs", pairs}};
}

Family family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs")) throw InputError("family JSON needs n and pairs");
  if (!j["n"].is_number_integer()) throw InputError("family JSON: n must be an integer");
  int n = j["n"].get<int>();
  const auto& arr = j["pairs"];
  if (!arr.is_array()) throw InputError("family JSON: pairs must be an array");
  if (j.contains("m") && (!j["m"].is_number_integer() || j["m"].get<int>() != static_cast<int>(arr.size())))
    throw InputError("family JSON: m does not match the number of pairs");
  std::vector<SubspacePair> pairs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string where = "pair " + std::to_string(i + 1);
    if (!arr[i].is_object() || !arr[i].contains("V") || !arr[i].contains("W"))
      throw InputError(where + ": needs V and W");
    pairs.push_back({rows_from_json(arr[i]["V"], n, where + " V"), rows_from_json(arr[i]["W"], n, where + " W")});
  }
  return Family(n, std::move(pairs));
}

nlohmann::json to_json(const GCertificate& c) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : c.entries) entries.push_back({{"i", e.i}, {"j", e.j}, {"intersection_dim", e.intersection_dim}});
  nlohmann::json out = {{"passed", c.passed}, {"pairs", entries}};
  if (c.first_failure) out["first_failure"] = {c.first_failure->first, c.first_failure->second};
  return out;
}

}  // namespace twoalg
