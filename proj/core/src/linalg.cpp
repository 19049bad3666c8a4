#include "jconf/linalg.hpp"

#include <algorithm>

namespace jconf {

Vec zero_vec(int n) { return Vec(n); }

Vec unit_vec(int n, int k) {
  Vec v(n);
  v[k] = Scalar(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& x, const Vec& y) {
  Vec r(x);
  for (size_t k = 0; k < r.size(); ++k) r[k] += y[k];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r(x);
  for (size_t k = 0; k < r.size(); ++k) r[k] -= y[k];
  return r;
}

Vec scale(const Scalar& t, const Vec& x) {
  Vec r(x);
  for (auto& v : r) v *= t;
  return r;
}

Vec& add_scaled(Vec& x, const Scalar& t, const Vec& y) {
  if (t.is_zero()) return x;
  for (size_t k = 0; k < x.size(); ++k)
    if (!y[k].is_zero()) x[k] += t * y[k];
  return x;
}

void clear_denominators(Vec& v) {
  mpz_class den = 1, num = 0;
  for (const auto& x : v) {
    for (const Rational* q : {&x.a(), &x.b(), &x.c(), &x.d()}) {
      if (*q == 0) continue;
      mpz_class g;
      mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), q->get_den().get_mpz_t());
      den = g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q->get_num().get_mpz_t());
      num = g;
    }
  }
  if (num == 0) return;
  Rational f(den, num);
  f.canonicalize();
  Scalar t{f};
  for (auto& x : v) x *= t;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (int k = 0; k < int(v.size()); ++k)
    if (!v[k].is_zero()) s.push_back({k, v[k]});
  return s;
}

Vec to_dense(const SparseVec& v, int n) {
  Vec r(n);
  for (const auto& e : v) r[e.idx] = e.val;
  return r;
}

SparseVec sparse_add(const SparseVec& x, const SparseVec& y) {
  SparseVec r;
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].idx < y[j].idx)) {
      r.push_back(x[i++]);
    } else if (i == x.size() || y[j].idx < x[i].idx) {
      r.push_back(y[j++]);
    } else {
      Scalar v = x[i].val + y[j].val;
      if (!v.is_zero()) r.push_back({x[i].idx, v});
      ++i, ++j;
    }
  }
  return r;
}

SparseVec sparse_scale(const Scalar& t, const SparseVec& x) {
  if (t.is_zero()) return {};
  SparseVec r(x);
  for (auto& e : r) e.val *= t;
  return r;
}

void sparse_accumulate(Vec& acc, const Scalar& t, const SparseVec& x) {
  if (t.is_zero()) return;
  for (const auto& e : x) acc[e.idx] += t * e.val;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols())
      throw LinalgError("ragged rows in Mat::from_rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  Mat m(*this);
  for (size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  Mat m(*this);
  for (size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw LinalgError("matrix product shape mismatch");
  Mat m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) m.at(i, j) += a * b;
      }
    }
  return m;
}

Mat Mat::scaled(const Scalar& t) const {
  Mat m(*this);
  for (auto& x : m.data_) x *= t;
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw LinalgError("matrix apply shape mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Scalar Mat::trace() const {
  Scalar t;
  for (int k = 0; k < std::min(rows_, cols_); ++k) t += at(k, k);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void Mat::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = int(v.size());
  if (int(v.size()) != cols_) throw LinalgError("appending row of wrong width");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

void SparseMat::set(int i, int j, const Scalar& v) {
  auto& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const SparseEntry& e, int col) { return e.idx < col; });
  if (it != r.end() && it->idx == j) {
    if (v.is_zero())
      r.erase(it);
    else
      it->val = v;
  } else if (!v.is_zero()) {
    r.insert(it, {j, v});
  }
}

Vec SparseMat::apply(const Vec& v) const {
  Vec r(rows());
  for (int i = 0; i < rows(); ++i)
    for (const auto& e : rows_[i])
      if (!v[e.idx].is_zero()) r[i] += e.val * v[e.idx];
  return r;
}

Mat SparseMat::to_dense() const {
  Mat m(rows(), cols_);
  for (int i = 0; i < rows(); ++i)
    for (const auto& e : rows_[i]) m.at(i, e.idx) = e.val;
  return m;
}

SparseMat SparseMat::from_dense(const Mat& m) {
  SparseMat s(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) s.row(i).push_back({j, m.at(i, j)});
  return s;
}

std::vector<int> rref(Mat& m, bool trim) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inv();
    for (int j = col; j < m.cols(); ++j)
      if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (trim && row < m.rows()) {
    Mat t(row, m.cols());
    for (int i = 0; i < row; ++i)
      for (int j = 0; j < m.cols(); ++j) t.at(i, j) = m.at(i, j);
    m = t;
  }
  return pivots;
}

int rank(Mat m) { return int(rref(m).size()); }

Mat kernel_basis(const Mat& m) {
  Mat r(m);
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  Mat out(0, m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols());
    v[c] = Scalar(1);
    for (int i = 0; i < int(pivots.size()); ++i)
      if (pivots[i] < c) v[pivots[i]] = -r.at(i, c);
    out.append_row(v);
  }
  return out;
}

Scalar determinant(Mat m) {
  if (m.rows() != m.cols()) throw LinalgError("determinant of non-square matrix");
  Scalar det(1);
  int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Scalar inv = m.at(col, col).inv();
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j)
        if (!m.at(col, j).is_zero()) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw LinalgError("inverse of non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  std::vector<int> pivots = rref(aug, false);
  if (int(pivots.size()) != n || pivots.back() >= n)
    throw LinalgError("matrix is singular");
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

Subspace Subspace::span(Mat rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  s.pivots_ = rref(rows);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::span_rows(const std::vector<Vec>& rows) {
  return span(Mat::from_rows(rows));
}

Subspace Subspace::full(int ambient) { return span(Mat::identity(ambient)); }

Vec Subspace::reduce(Vec v) const {
  for (int i = 0; i < dim(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) v[j] -= f * basis_.at(i, j);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (int i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec w(v), coords(dim());
  for (int i = 0; i < dim(); ++i) {
    Scalar c = w[pivots_[i]];
    coords[i] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) w[j] -= c * basis_.at(i, j);
  }
  if (!is_zero_vec(w)) throw LinalgError("vector outside subspace in coordinates()");
  return coords;
}

Subspace Subspace::sum(const Subspace& o) const {
  Mat m(basis_);
  for (int i = 0; i < o.dim(); ++i) m.append_row(o.basis_.row(i));
  return span(std::move(m));
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Rows of [A; B] kernel vectors (x, y) with x A = -y B give x A in both.
  if (ambient_ != o.ambient_) throw LinalgError("ambient mismatch in intersect");
  Mat stacked(dim() + o.dim(), ambient_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (int i = 0; i < o.dim(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(dim() + i, j) = o.basis_.at(i, j);
  Mat ker = kernel_basis(stacked.transpose());
  Mat result(0, ambient_);
  for (int k = 0; k < ker.rows(); ++k) {
    Vec v(ambient_);
    for (int i = 0; i < dim(); ++i)
      if (!ker.at(k, i).is_zero())
        for (int j = 0; j < ambient_; ++j)
          if (!basis_.at(i, j).is_zero()) v[j] += ker.at(k, i) * basis_.at(i, j);
    result.append_row(v);
  }
  return span(std::move(result));
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Mat gram_matrix(const std::vector<Vec>& basis, const BilinearForm& form) {
  Mat g(int(basis.size()), int(basis.size()));
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) g.at(i, j) = form(basis[i], basis[j]);
  return g;
}

namespace {
bool definite_with_sign(const Mat& gram, int want) {
  if (gram.rows() != gram.cols()) throw LinalgError("gram matrix not square");
  for (int k = 1; k <= gram.rows(); ++k) {
    Mat minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = gram.at(i, j);
    int s = determinant(std::move(minor)).sign();
    int expect = (want < 0 && k % 2 == 1) ? -1 : 1;
    if (s != expect) return false;
  }
  return true;
}
}  // namespace

bool positive_definite(const Mat& gram) { return definite_with_sign(gram, +1); }
bool negative_definite(const Mat& gram) { return definite_with_sign(gram, -1); }

std::vector<Vec> orthogonal_basis(std::vector<Vec> basis, const BilinearForm& form) {
  std::vector<Vec> out;
  while (!basis.empty()) {
    int pick = -1;
    for (int i = 0; i < int(basis.size()); ++i)
      if (!form(basis[i], basis[i]).is_zero()) {
        pick = i;
        break;
      }
    if (pick < 0) {
      // All vectors isotropic; repair with a crossing pair (char 0).
      bool repaired = false;
      for (int i = 0; i < int(basis.size()) && !repaired; ++i)
        for (int j = i + 1; j < int(basis.size()) && !repaired; ++j)
          if (!form(basis[i], basis[j]).is_zero()) {
            basis[i] = add(basis[i], basis[j]);
            pick = i;
            repaired = true;
          }
      if (!repaired)
        throw LinalgError("form degenerate on span in orthogonal_basis");
    }
    Vec v = basis[pick];
    basis.erase(basis.begin() + pick);
    clear_denominators(v);
    Scalar vv = form(v, v);
    for (auto& w : basis) {
      Scalar c = form(w, v) / vv;
      if (!c.is_zero()) add_scaled(w, -c, v);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace jconf
