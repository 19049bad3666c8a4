#include "jconf/liealg.hpp"

#include <algorithm>
#include <set>

namespace jconf {

void LieAlgebra::set_bracket(int a, int b, const SparseVec& v) {
  if (a == b) {
    if (!v.empty()) throw LieError("nonzero bracket [x,x]");
    return;
  }
  table_[a][b] = v;
  table_[b][a] = sparse_scale(Scalar(-1), v);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (int a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b].is_zero() || table_[a][b].empty()) continue;
      sparse_accumulate(out, x[a] * y[b], table_[a][b]);
    }
  }
  return out;
}

SparseMat LieAlgebra::ad_sparse(const Vec& x) const {
  SparseMat m(dim, dim);
  for (int b = 0; b < dim; ++b) {
    Vec col(dim);
    bool nz = false;
    for (int a = 0; a < dim; ++a) {
      if (x[a].is_zero() || table_[a][b].empty()) continue;
      sparse_accumulate(col, x[a], table_[a][b]);
      nz = true;
    }
    if (!nz) continue;
    for (int d = 0; d < dim; ++d)
      if (!col[d].is_zero()) m.row(d).push_back({b, col[d]});
  }
  // rows built column-by-column are already sorted by column index
  return m;
}

Mat LieAlgebra::ad_dense(const Vec& x) const {
  Mat m(dim, dim);
  for (int b = 0; b < dim; ++b)
    for (int a = 0; a < dim; ++a) {
      if (x[a].is_zero() || table_[a][b].empty()) continue;
      for (const auto& e : table_[a][b]) m.at(e.idx, b) += x[a] * e.val;
    }
  return m;
}

Vec LieAlgebra::jacobi_defect_basis(int a, int b, int c) const {
  Vec out(dim);
  auto acc = [&](const SparseVec& inner, int outer) {
    // [inner, e_outer]
    for (const auto& e : inner)
      if (!table_[e.idx][outer].empty())
        sparse_accumulate(out, e.val, table_[e.idx][outer]);
  };
  acc(table_[a][b], c);
  acc(table_[b][c], a);
  acc(table_[c][a], b);
  return out;
}

bool LieAlgebra::jacobi_exhaustive() const {
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int c = b + 1; c < dim; ++c)
        if (!is_zero_vec(jacobi_defect_basis(a, b, c))) return false;
  return true;
}

bool LieAlgebra::jacobi_sampled(Rng& rng, int triples) const {
  for (int t = 0; t < triples; ++t) {
    int a = rng.uniform(0, dim - 1);
    int b = rng.uniform(0, dim - 1);
    int c = rng.uniform(0, dim - 1);
    if (!is_zero_vec(jacobi_defect_basis(a, b, c))) return false;
  }
  return true;
}

bool LieAlgebra::antisymmetric_table() const {
  for (int a = 0; a < dim; ++a) {
    if (!table_[a][a].empty()) return false;
    for (int b = a + 1; b < dim; ++b) {
      SparseVec s = sparse_add(table_[a][b], table_[b][a]);
      if (!s.empty()) return false;
    }
  }
  return true;
}

namespace {
Scalar sparse_trace_product(const SparseMat& A, const SparseMat& B) {
  // tr(AB) = sum_{d,c} A_{dc} B_{cd}
  Scalar t;
  for (int d = 0; d < A.rows(); ++d)
    for (const auto& e : A.row(d)) {
      const SparseVec& row = B.row(e.idx);
      auto it = std::lower_bound(
          row.begin(), row.end(), d,
          [](const SparseEntry& x, int col) { return x.idx < col; });
      if (it != row.end() && it->idx == d) t += e.val * it->val;
    }
  return t;
}
}  // namespace

Scalar LieAlgebra::killing_pair(const Vec& x, const Vec& y) const {
  return sparse_trace_product(ad_sparse(x), ad_sparse(y));
}

Scalar LieAlgebra::killing_basis_pair(int a, int b) const {
  Scalar t;
  for (int c = 0; c < dim; ++c)
    for (const auto& e : table_[a][c]) {
      // f_{ac}^d * f_{bd}^c with d = e.idx
      const SparseVec& row = table_[b][e.idx];
      auto it = std::lower_bound(
          row.begin(), row.end(), c,
          [](const SparseEntry& s, int idx) { return s.idx < idx; });
      if (it != row.end() && it->idx == c) t += e.val * it->val;
    }
  return t;
}

Mat LieAlgebra::killing_gram() const {
  Mat g(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      Scalar t = killing_basis_pair(a, b);
      g.at(a, b) = t;
      g.at(b, a) = t;
    }
  return g;
}

LieAlgebra LieAlgebra::realify() const {
  if (!complex_basis) return *this;
  LieAlgebra R(2 * dim);
  R.labels.reserve(2 * dim);
  for (const auto& l : labels) R.labels.push_back(l);
  for (const auto& l : labels) R.labels.push_back("i*" + l);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      if (a == b) continue;
      SparseVec re_part, im_part;
      for (const auto& e : table_[a][b]) {
        Scalar re = e.val.re(), im = e.val.im();
        if (!re.is_zero()) re_part.push_back({e.idx, re});
        if (!im.is_zero()) im_part.push_back({e.idx, im});
      }
      auto shift = [&](const SparseVec& v) {
        SparseVec s(v);
        for (auto& e : s) e.idx += dim;
        return s;
      };
      // [a, b] = re + i im
      SparseVec v = sparse_add(re_part, shift(im_part));
      R.table_[a][b] = v;
      // [a, ib] = i(re + i im) = -im + i re
      SparseVec v2 = sparse_add(sparse_scale(Scalar(-1), im_part), shift(re_part));
      R.table_[a][dim + b] = v2;
      R.table_[dim + a][b] = v2;
      // [ia, ib] = -(re + i im)
      R.table_[dim + a][dim + b] = sparse_scale(Scalar(-1), v);
    }
  return R;
}

ClosedSubalgebra close_under_bracket(const std::vector<Vec>& generators,
                                     const AmbientBracket& bracket, int max_dim) {
  if (generators.empty()) throw LieError("bracket closure of an empty set");
  int ambient = int(generators.front().size());
  // `members` spans the same space as S and only keeps independent vectors;
  // closure on member pairs implies closure on the span by bilinearity.
  std::vector<Vec> members;
  Subspace S = Subspace::span(Mat(0, ambient));
  auto absorb = [&](Vec v) {
    Vec r = S.reduce(std::move(v));
    if (is_zero_vec(r)) return;
    if (S.dim() + 1 > max_dim) throw LieError("bracket closure exceeded max dimension");
    Mat rows(S.basis());
    rows.append_row(r);
    S = Subspace::span(std::move(rows));
    members.push_back(std::move(r));
  };
  for (const auto& g : generators) absorb(g);
  for (size_t i = 1; i < members.size(); ++i)
    for (size_t j = 0; j < i; ++j) absorb(bracket(members[i], members[j]));
  ClosedSubalgebra out;
  out.algebra = subalgebra_on(S, bracket);
  out.space = std::move(S);
  return out;
}

LieAlgebra subalgebra_on(const Subspace& space, const AmbientBracket& bracket) {
  int m = space.dim();
  LieAlgebra L(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vec br = bracket(space.basis().row(i), space.basis().row(j));
      Vec coords;
      try {
        coords = space.coordinates(br);
      } catch (const LinalgError&) {
        throw LieError("subspace is not closed under the bracket");
      }
      L.set_bracket(i, j, to_sparse(coords));
    }
  return L;
}

Subspace centralizer(const LieAlgebra& L, const std::vector<Vec>& gens) {
  Subspace S = Subspace::full(L.dim);
  for (const auto& g : gens) {
    if (S.dim() == 0) break;
    // rows R_k = [g, s_k]; kernel of R^T gives the coefficient space.
    Mat R(S.dim(), L.dim);
    for (int k = 0; k < S.dim(); ++k) {
      Vec br = L.bracket(g, S.basis().row(k));
      for (int j = 0; j < L.dim; ++j) R.at(k, j) = std::move(br[j]);
    }
    Mat coeffs = kernel_basis(R.transpose());
    Mat rows(0, L.dim);
    for (int k = 0; k < coeffs.rows(); ++k) {
      Vec v(L.dim);
      for (int i = 0; i < S.dim(); ++i)
        if (!coeffs.at(k, i).is_zero())
          for (int j = 0; j < L.dim; ++j)
            if (!S.basis().at(i, j).is_zero())
              v[j] += coeffs.at(k, i) * S.basis().at(i, j);
      rows.append_row(v);
    }
    S = Subspace::span(std::move(rows));
  }
  return S;
}

NormalizedForm normalized_form(
    const LieAlgebra& L,
    const std::vector<std::pair<std::pair<Vec, Vec>, Scalar>>& anchors) {
  if (anchors.empty()) throw LieError("normalized form needs at least one anchor");
  Scalar ratio;
  bool have = false;
  for (const auto& [pair, expected] : anchors) {
    Scalar kappa = L.killing_pair(pair.first, pair.second);
    if (kappa.is_zero() || expected.is_zero())
      throw LieError("normalization anchor pairs against zero");
    Scalar s = expected / kappa;
    if (!have) {
      ratio = s;
      have = true;
    } else if (s != ratio) {
      throw LieError("inconsistent normalization anchors: " + ratio.str() +
                     " vs " + s.str());
    }
  }
  return NormalizedForm{ratio, &L};
}

CasimirPairs casimir_pairs(const LieAlgebra& L, const NormalizedForm& B) {
  Mat gram = L.killing_gram().scaled(B.ratio);
  Mat ginv = inverse(gram);  // throws if degenerate
  CasimirPairs out;
  for (int k = 0; k < L.dim; ++k) {
    out.basis.push_back(unit_vec(L.dim, k));
    out.dual.push_back(ginv.row(k));
  }
  return out;
}

EigenDecomposition eigen_decompose(const Mat& M, std::vector<Scalar> candidates,
                                   Rng& rng) {
  if (M.rows() != M.cols()) throw LieError("eigen decomposition of non-square matrix");
  int n = M.rows();
  EigenDecomposition out;
  std::set<std::string> seen;
  auto add_kernels = [&](const std::vector<Scalar>& vals) {
    for (const auto& lam : vals) {
      if (!seen.insert(lam.str()).second) continue;
      Mat shifted(M);
      for (int k = 0; k < n; ++k) shifted.at(k, k) -= lam;
      Subspace ker = Subspace::span(kernel_basis(shifted));
      if (ker.dim() > 0) out.spaces.push_back({lam, std::move(ker)});
    }
  };
  add_kernels(candidates);
  auto total = [&] {
    int t = 0;
    for (const auto& [lam, sp] : out.spaces) t += sp.dim();
    return t;
  };
  if (total() == n) {
    out.complete = true;
    return out;
  }
  // Discover eigenvalues from the minimal polynomial.
  RootSplit rs;
  try {
    rs = unipoly_rational_roots(min_poly_candidate(M, rng));
  } catch (const std::runtime_error& e) {
    out.complete = false;
    out.failure = std::string("eigenvalue discovery failed: ") + e.what();
    return out;
  }
  std::vector<Scalar> extra;
  for (const auto& root : rs.roots) extra.push_back(Scalar(root));
  add_kernels(extra);
  if (total() == n) {
    out.complete = true;
    return out;
  }
  out.complete = false;
  if (rs.cofactor.size() > 1)
    out.failure = "non-rational factor of the minimal polynomial: " +
                  unipoly_str(rs.cofactor);
  else
    out.failure = "matrix is not diagonalizable over the scalar field";
  return out;
}

}  // namespace jconf
