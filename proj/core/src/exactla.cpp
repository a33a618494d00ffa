#include "twoalg/exactla.hpp"

#include <algorithm>
#include <cctype>

#include "twoalg/errors.hpp"

namespace twoalg {

std::string to_string(const Scalar& q) {
  if (q.get_den() != 1 && gcd(q.get_num(), q.get_den()) != 1) {
    Scalar c = q;
    c.canonicalize();
    return to_string(c);
  }
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar parse_scalar(const std::string& text) {
  auto is_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](const std::string& s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational '" + text + "'");
  mpz_class n(strip_plus(num)), d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw InputError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Scalar> Matrix::row(int r) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
  return {first, first + cols_};
}

std::vector<std::vector<Scalar>> Matrix::to_rows() const {
  std::vector<std::vector<Scalar>> out;
  for (int r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return x == 0; });
}

void Matrix::push_row(const std::vector<Scalar>& row) {
  if (rows_ == 0 && entries_.empty()) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) throw InputError("row length mismatch");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch in product");
  Matrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return p;
}

std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& x) {
  if (static_cast<int>(x.size()) != m.cols()) throw InputError("vector length mismatch");
  std::vector<Scalar> y(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0 && x[c] != 0) y[r] += m.at(r, c) * x[c];
  return y;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.form;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < a.rows(); ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
    Scalar inv = 1 / a.at(row, col);
    for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      Scalar f = a.at(r, col);
      for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = red.form.at(r, n + c);
  return inv;
}

SparseVec sparse_from_dense(const std::vector<Scalar>& v) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

std::vector<Scalar> dense_from_sparse(const SparseVec& v, int size) {
  std::vector<Scalar> out(size);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return y;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar s = y[i].second + a * x[j].second;
      if (s != 0) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
  if (a == 0) return {};
  SparseVec out = x;
  for (auto& e : out) e.second *= a;
  return out;
}

Scalar coefficient(const SparseVec& v, int index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  return (it != v.end() && it->first == index) ? it->second : Scalar(0);
}

void SparseBuilder::add(int index, const Scalar& value) {
  if (value != 0) terms_.emplace_back(index, value);
}

void SparseBuilder::add(const SparseVec& v, const Scalar& coef) {
  if (coef == 0) return;
  for (const auto& [i, x] : v) terms_.emplace_back(i, coef * x);
}

SparseVec SparseBuilder::take() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, x] : terms_) {
    if (!out.empty() && out.back().first == i)
      out.back().second += x;
    else
      out.emplace_back(i, std::move(x));
    if (out.back().second == 0) out.pop_back();
  }
  terms_.clear();
  return out;
}

RowEchelon::RowEchelon(int cols, int pivot_limit)
    : cols_(cols), pivot_limit_(pivot_limit < 0 ? cols : pivot_limit), pivot_row_(pivot_limit_, -1) {}

SparseVec RowEchelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size() && v[pos].first < pivot_limit_) {
    int col = v[pos].first;
    int r = pivot_row_[col];
    if (r < 0) {
      ++pos;
      continue;
    }
    Scalar f = v[pos].second;
    // Rows have entries only at or after their pivot, so v[0..pos) is untouched.
    SparseVec tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
    tail = axpy(tail, -f, rows_[r]);
    v.resize(pos);
    v.insert(v.end(), tail.begin(), tail.end());
  }
  return v;
}

std::optional<SparseVec> RowEchelon::insert_or_remainder(const SparseVec& v) {
  SparseVec r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first < pivot_limit_; });
  if (it == r.end()) return r;
  int col = it->first;
  Scalar inv = 1 / it->second;
  for (auto& e : r) e.second *= inv;
  pivot_row_[col] = static_cast<int>(rows_.size());
  row_pivot_.push_back(col);
  rows_.push_back(std::move(r));
  return std::nullopt;
}

bool RowEchelon::insert(const SparseVec& v) { return !insert_or_remainder(v).has_value(); }

bool RowEchelon::contains(const SparseVec& v) const {
  SparseVec r = reduce(v);
  return std::none_of(r.begin(), r.end(), [&](const auto& e) { return e.first < pivot_limit_; });
}

std::vector<int> RowEchelon::pivot_columns() const {
  std::vector<int> cols = row_pivot_;
  std::sort(cols.begin(), cols.end());
  return cols;
}

void RowEchelon::make_reduced() {
  std::vector<int> order = pivot_columns();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SparseVec& row = rows_[pivot_row_[*it]];
    SparseVec tail(row.begin() + 1, row.end());
    tail = reduce(std::move(tail));
    row.resize(1);
    row.insert(row.end(), tail.begin(), tail.end());
  }
}

int rank_of(const std::vector<SparseVec>& rows, int cols) {
  RowEchelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<SparseVec> kernel_of_rows(const std::vector<SparseVec>& rows, int cols) {
  RowEchelon e(cols + static_cast<int>(rows.size()), cols);
  std::vector<SparseVec> kernel;
  for (int j = 0; j < static_cast<int>(rows.size()); ++j) {
    SparseVec aug = rows[j];
    aug.emplace_back(cols + j, Scalar(1));
    if (auto rem = e.insert_or_remainder(aug)) {
      SparseVec k;
      for (auto& [i, x] : *rem) k.emplace_back(i - cols, std::move(x));
      kernel.push_back(std::move(k));
    }
  }
  return kernel;
}

namespace {

Subspace from_echelon(int ambient, const Matrix& m) {
  auto red = rref(m);
  std::vector<std::vector<Scalar>> rows;
  for (int r = 0; r < red.rank; ++r) rows.push_back(red.form.row(r));
  return Subspace::span(ambient, rows);
}

}  // namespace

Subspace::Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(int ambient, const std::vector<std::vector<Scalar>>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  auto red = rref(Matrix::from_rows(vectors, ambient));
  Matrix b(red.rank, ambient);
  for (int r = 0; r < red.rank; ++r)
    for (int c = 0; c < ambient; ++c) b.at(r, c) = red.form.at(r, c);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw InputError("ambient mismatch");
  // Reduce against the echelon basis using its pivots.
  std::vector<Scalar> r = v;
  for (int i = 0; i < dim(); ++i) {
    Scalar f = r[pivots_[i]];
    if (f == 0) continue;
    for (int c = 0; c < ambient_; ++c) r[c] -= f * basis_.at(i, c);
  }
  return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x == 0; });
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw InputError("ambient mismatch in sum");
  auto rows = u.basis().to_rows();
  auto more = w.basis().to_rows();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace::span(u.ambient(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw InputError("ambient mismatch in intersect");
  int n = u.ambient();
  std::vector<SparseVec> stacked;
  for (int i = 0; i < u.dim(); ++i) stacked.push_back(sparse_from_dense(u.basis_vector(i)));
  for (int i = 0; i < w.dim(); ++i) stacked.push_back(sparse_from_dense(w.basis_vector(i)));
  // A relation a*U + b*W = 0 gives the common vector a*U.
  std::vector<std::vector<Scalar>> common;
  for (const auto& k : kernel_of_rows(stacked, n)) {
    std::vector<Scalar> v(n);
    for (const auto& [j, x] : k)
      if (j < u.dim())
        for (int c = 0; c < n; ++c) v[c] += x * u.basis().at(j, c);
    common.push_back(std::move(v));
  }
  return Subspace::span(n, common);
}

Subspace coordinate_complement(const Subspace& u) {
  std::vector<bool> is_pivot(u.ambient(), false);
  for (int p : u.pivots()) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> rows;
  for (int c = 0; c < u.ambient(); ++c)
    if (!is_pivot[c]) {
      std::vector<Scalar> e(u.ambient());
      e[c] = 1;
      rows.push_back(std::move(e));
    }
  return Subspace::span(u.ambient(), rows);
}

Matrix projection_along(const Subspace& u, const Subspace& t) {
  if (u.ambient() != t.ambient()) throw InputError("ambient mismatch in projection_along");
  int n = u.ambient();
  if (u.dim() + t.dim() != n) throw InputError("projection_along: U + T is not a direct sum decomposition");
  Matrix b(0, n);
  for (int i = 0; i < u.dim(); ++i) b.push_row(u.basis_vector(i));
  for (int i = 0; i < t.dim(); ++i) b.push_row(t.basis_vector(i));
  auto inv = inverse(b);
  if (!inv) throw InputError("projection_along: U + T is not a direct sum decomposition");
  // x = coeffs * B, so coeffs = x * B^{-1}; keep the T block.
  Matrix p(t.dim(), n);
  for (int j = 0; j < t.dim(); ++j)
    for (int c = 0; c < n; ++c) p.at(j, c) = inv->at(c, u.dim() + j);
  return p;
}

int random_entry(std::mt19937_64& rng) { return static_cast<int>(rng() % 19) - 9; }

Subspace random_subspace(int n, int d, std::mt19937_64& rng) {
  if (d < 0 || d > n) throw InputError("random_subspace: need 0 <= d <= n");
  if (d == 0) return Subspace(n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix m(d, n);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = random_entry(rng);
    Subspace s = from_echelon(n, m);
    if (s.dim() == d) return s;
  }
  throw InputError("random_subspace: 100 rank-deficient draws");
}

Subspace random_subspace(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_subspace(n, d, rng);
}

}  // namespace twoalg
