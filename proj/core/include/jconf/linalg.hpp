#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jconf/scalar.hpp"

namespace jconf {

using Vec = std::vector<Scalar>;

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- dense vectors -----------------------------------------------------

Vec zero_vec(int n);
Vec unit_vec(int n, int k);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const Scalar& t, const Vec& x);
Vec& add_scaled(Vec& x, const Scalar& t, const Vec& y);  // x += t*y
// Multiply through by the lcm of all rational denominators (and divide by the
// gcd of numerators) so integer-primitive data stays integer-primitive.
void clear_denominators(Vec& v);

// --- sparse vectors ----------------------------------------------------

struct SparseEntry {
  int idx;
  Scalar val;
};
// Sorted by idx, no explicit zeros.
using SparseVec = std::vector<SparseEntry>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int n);
SparseVec sparse_add(const SparseVec& x, const SparseVec& y);
SparseVec sparse_scale(const Scalar& t, const SparseVec& x);
void sparse_accumulate(Vec& acc, const Scalar& t, const SparseVec& x);

// --- dense matrices ----------------------------------------------------

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }
  Vec row(int i) const;

  Mat transpose() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Scalar& t) const;
  Vec apply(const Vec& v) const;
  Scalar trace() const;
  bool is_zero() const;
  bool operator==(const Mat& o) const;

  void append_row(const Vec& v);

 private:
  int rows_, cols_;
  std::vector<Scalar> data_;
};

Mat commutator(const Mat& a, const Mat& b);

// --- sparse matrices (row-major) ----------------------------------------

class SparseMat {
 public:
  SparseMat() : cols_(0) {}
  SparseMat(int rows, int cols) : cols_(cols), rows_(rows) {}
  int rows() const { return int(rows_.size()); }
  int cols() const { return cols_; }
  SparseVec& row(int i) { return rows_[i]; }
  const SparseVec& row(int i) const { return rows_[i]; }
  void set(int i, int j, const Scalar& v);
  Vec apply(const Vec& v) const;
  Mat to_dense() const;
  static SparseMat from_dense(const Mat& m);

 private:
  int cols_;
  std::vector<SparseVec> rows_;
};

// --- elimination --------------------------------------------------------

// In-place reduced row echelon form; returns pivot column indices in order.
// Zero rows are moved to the bottom (and truncated if trim is true).
std::vector<int> rref(Mat& m, bool trim = true);
int rank(Mat m);
// Basis (as rows) of the right kernel {x : m x = 0}.
Mat kernel_basis(const Mat& m);
Scalar determinant(Mat m);
Mat inverse(const Mat& m);  // throws LinalgError if singular
// Solve m x = b; nullopt if inconsistent (least-norm not attempted).
std::optional<Vec> solve(const Mat& m, const Vec& b);

// --- canonical subspaces -------------------------------------------------

// A subspace of the row space, held in canonical RREF form so that equality
// and containment are plain structural comparisons.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace span(Mat rows);
  static Subspace span_rows(const std::vector<Vec>& rows);
  static Subspace full(int ambient);

  int dim() const { return basis_.rows(); }
  int ambient() const { return ambient_; }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residual of v after eliminating along pivot columns.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // Coefficients of v against the canonical basis; throws if v is outside.
  Vec coordinates(const Vec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_;
  Mat basis_;
  std::vector<int> pivots_;
};

// --- bilinear form helpers ----------------------------------------------

using BilinearForm = std::function<Scalar(const Vec&, const Vec&)>;

// Gram matrix of a form on a list of vectors.
Mat gram_matrix(const std::vector<Vec>& basis, const BilinearForm& form);

// All leading principal minors positive (symmetric positive definiteness
// certificate over an ordered real field).
bool positive_definite(const Mat& gram);
bool negative_definite(const Mat& gram);

// Orthogonalize (no normalization) a basis against a symmetric bilinear form,
// clearing denominators as it goes. Requires the form to be nondegenerate on
// the span; throws LinalgError otherwise. Isotropic pivots are repaired by
// adding a partner vector (possible in characteristic 0).
std::vector<Vec> orthogonal_basis(std::vector<Vec> basis, const BilinearForm& form);

}  // namespace jconf
