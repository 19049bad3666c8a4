#include "jconf/jordan.hpp"

#include <algorithm>

namespace jconf {

void JordanAlgebra::finalize() {
  delta = field == Field::C ? 2 : 1;
  if (int(product.size()) != n || int(labels.size()) != n || int(unit.size()) != n)
    throw JordanError(name + ": inconsistent construction shapes");
  // Imported algebras may arrive frameless; frame-dependent decompositions
  // reject them explicitly.
  if (!frame.empty() && int(frame.size()) != r)
    throw JordanError(name + ": frame size != rank");

  // tau_F(x, y) = (r/n) tr L(x·y): the associative trace form, normalized so
  // that tau(e,e) = r. Associativity makes L(x) self-adjoint and D skew.
  Vec trL(n);  // trL[a] = tr L(b_a)
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      for (const auto& e : product[a][k])
        if (e.idx == k) trL[a] += e.val;
  Scalar norm = Scalar(Rational(r, n));
  trace_gram_ = Mat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Scalar t;
      for (const auto& e : product[a][b])
        if (!trL[e.idx].is_zero()) t += e.val * trL[e.idx];
      t *= norm;
      trace_gram_.at(a, b) = t;
      trace_gram_.at(b, a) = t;
    }

  // Realified structure constants on the basis {b_1..b_n, i b_1..i b_n}.
  int NN = N();
  product_R_.assign(NN, std::vector<SparseVec>(NN));
  auto put = [&](int a, int b, int k, const Scalar& v) {
    if (!v.is_zero()) product_R_[a][b].push_back({k, v});
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& e : product[a][b]) {
        Scalar re = e.val.re(), im = e.val.im();
        // (b_a)(b_b) = sum (re + i im) b_k
        put(a, b, e.idx, re);
        if (field == Field::C) {
          put(a, b, n + e.idx, im);
          // (b_a)(i b_b) = i (b_a b_b)
          put(a, n + b, e.idx, -im);
          put(a, n + b, n + e.idx, re);
          put(n + a, b, e.idx, -im);
          put(n + a, b, n + e.idx, re);
          // (i b_a)(i b_b) = -(b_a b_b)
          put(n + a, n + b, e.idx, -re);
          put(n + a, n + b, n + e.idx, -im);
        }
      }
  for (auto& row : product_R_)
    for (auto& sv : row)
      std::sort(sv.begin(), sv.end(),
                [](const SparseEntry& x, const SparseEntry& y) { return x.idx < y.idx; });

  // Real trace form tau = Re tau_F on realified coordinates.
  tau_R_gram_ = Mat(NN, NN);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Scalar re = trace_gram_.at(a, b).re(), im = trace_gram_.at(a, b).im();
      tau_R_gram_.at(a, b) = re;
      if (field == Field::C) {
        // tau(b_a, i b_b) = Re(i tau_F) = -Im tau_F; tau(i b_a, i b_b) = -Re tau_F.
        tau_R_gram_.at(a, n + b) = -im;
        tau_R_gram_.at(n + a, b) = -im;
        tau_R_gram_.at(n + a, n + b) = -re;
      }
    }

  // theta on realified coordinates (antilinear for F = C: conj then cartan0).
  theta_R_ = Mat(NN, NN);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& m = cartan0.at(a, b);
      if (m.is_zero()) continue;
      Scalar re = m.re(), im = m.im();
      theta_R_.at(a, b) = re;
      if (field == Field::C) {
        theta_R_.at(n + a, b) = im;
        // theta(i b_b) = -i theta(b_b)
        theta_R_.at(a, n + b) = im;
        theta_R_.at(n + a, n + b) = -re;
      }
    }

  unit_R = realify(unit);
  frame_R.clear();
  for (const auto& c : frame) frame_R.push_back(realify(c));
}

Vec JordanAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out(n);
  for (int a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (y[b].is_zero()) continue;
      sparse_accumulate(out, x[a] * y[b], product[a][b]);
    }
  }
  return out;
}

Mat JordanAlgebra::Lmat(const Vec& x) const {
  Mat m(n, n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (x[a].is_zero()) continue;
      for (const auto& e : product[a][b]) m.at(e.idx, b) += x[a] * e.val;
    }
  }
  return m;
}

Vec JordanAlgebra::conj_coords(const Vec& x) const {
  Vec out(x);
  for (auto& v : out) v = v.conj();
  return out;
}

Vec JordanAlgebra::apply_theta(const Vec& x) const {
  return cartan0.apply(field == Field::C ? conj_coords(x) : x);
}

Scalar JordanAlgebra::trace_form(const Vec& x, const Vec& y) const {
  Scalar t;
  for (int a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < n; ++b)
      if (!trace_gram_.at(a, b).is_zero() && !y[b].is_zero())
        t += x[a] * trace_gram_.at(a, b) * y[b];
  }
  return t;
}

Mat JordanAlgebra::quad_rep(const Vec& x) const {
  Mat lx = Lmat(x);
  return lx * lx + lx * lx - Lmat(mul(x, x));
}

Mat JordanAlgebra::quad_rep2(const Vec& x, const Vec& y) const {
  Mat lx = Lmat(x), ly = Lmat(y);
  return lx * ly + ly * lx - Lmat(mul(x, y));
}

bool JordanAlgebra::is_invertible(const Vec& x) const {
  return !determinant(quad_rep(x)).is_zero();
}

Vec JordanAlgebra::mul_R(const Vec& u, const Vec& v) const {
  Vec out(N());
  for (int a = 0; a < N(); ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < N(); ++b) {
      if (v[b].is_zero()) continue;
      sparse_accumulate(out, u[a] * v[b], product_R_[a][b]);
    }
  }
  return out;
}

Mat JordanAlgebra::Lmat_R(const Vec& u) const {
  Mat m(N(), N());
  for (int b = 0; b < N(); ++b)
    for (int a = 0; a < N(); ++a) {
      if (u[a].is_zero()) continue;
      for (const auto& e : product_R_[a][b]) m.at(e.idx, b) += u[a] * e.val;
    }
  return m;
}

Vec JordanAlgebra::mul_i_R(const Vec& u) const {
  if (field == Field::R) throw JordanError("complex unit action on a real model");
  Vec out(N());
  for (int k = 0; k < n; ++k) {
    out[n + k] = u[k];
    out[k] = -u[n + k];
  }
  return out;
}

Scalar JordanAlgebra::tau_R(const Vec& u, const Vec& v) const {
  Scalar t;
  for (int a = 0; a < N(); ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < N(); ++b)
      if (!tau_R_gram_.at(a, b).is_zero() && !v[b].is_zero())
        t += u[a] * tau_R_gram_.at(a, b) * v[b];
  }
  return t;
}

Scalar JordanAlgebra::inner_R(const Vec& u, const Vec& v) const {
  return tau_R(u, theta_R_.apply(v));
}

Vec JordanAlgebra::realify(const Vec& x) const {
  if (field == Field::R) return x;
  Vec out(N());
  for (int k = 0; k < n; ++k) {
    out[k] = x[k].re();
    Scalar im = x[k].im();
    out[n + k] = im;
  }
  return out;
}

Vec JordanAlgebra::complexify(const Vec& u) const {
  if (field == Field::R) return u;
  Vec out(n);
  for (int k = 0; k < n; ++k) out[k] = u[k] + Scalar::i() * u[n + k];
  return out;
}

namespace {
Subspace eigenspace_of(const Mat& m, const Scalar& lambda) {
  Mat shifted(m);
  for (int k = 0; k < m.rows(); ++k) shifted.at(k, k) -= lambda;
  return Subspace::span(kernel_basis(shifted));
}
}  // namespace

Subspace realify_subspace(const JordanAlgebra& A, const Subspace& S) {
  if (A.field == Field::R) return S;
  std::vector<Vec> rows;
  for (int i = 0; i < S.dim(); ++i) {
    Vec v = S.basis().row(i);
    rows.push_back(A.realify(v));
    Vec iv(v);
    for (auto& x : iv) x *= Scalar::i();
    rows.push_back(A.realify(iv));
  }
  return Subspace::span_rows(rows);
}

PeirceData peirce_decompose(const JordanAlgebra& A) {
  if (int(A.frame.size()) != A.r)
    throw JordanError(A.name + ": no frame attached");
  PeirceData P;
  const Scalar half(Rational(1, 2));
  std::vector<Mat> lc(A.r);
  std::vector<Subspace> half_spaces(A.r);
  for (int i = 0; i < A.r; ++i) {
    lc[i] = A.Lmat(A.frame[i]);
    P.diag.push_back(eigenspace_of(lc[i], Scalar(1)));
    half_spaces[i] = eigenspace_of(lc[i], half);
  }
  Subspace theta_plus, theta_minus;
  {
    Mat tp(A.theta_R()), tm(A.theta_R());
    for (int k = 0; k < A.N(); ++k) {
      tp.at(k, k) -= Scalar(1);
      tm.at(k, k) += Scalar(1);
    }
    theta_plus = Subspace::span(kernel_basis(tp));
    theta_minus = Subspace::span(kernel_basis(tm));
  }
  for (int i = 0; i < A.r; ++i)
    for (int j = i + 1; j < A.r; ++j) {
      Subspace vij = half_spaces[i].intersect(half_spaces[j]);
      auto key = std::make_pair(i, j);
      Subspace vij_R = realify_subspace(A, vij);
      P.off_plus[key] = vij_R.intersect(theta_plus);
      P.off_minus[key] = vij_R.intersect(theta_minus);
      P.off[key] = std::move(vij);
    }
  {
    Subspace h = P.off[{0, 1}];
    for (int j = 2; j < A.r; ++j) h = h.sum(P.off[{0, j}]);
    P.half_F = h;
    P.half_R = realify_subspace(A, h);
  }
  return P;
}

Vec random_invertible(const JordanAlgebra& A, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec a(A.n);
    for (auto& v : a) v = rng.scalar(A.field == Field::C);
    if (A.is_invertible(a)) return a;
  }
  throw JordanError(A.name + ": no invertible sample found");
}

Vec rank_one_point(const JordanAlgebra& A, Rng& rng) {
  Vec a = random_invertible(A, rng);
  return A.quad_rep(a).apply(A.frame[0]);
}

Vec jordan_defect(const JordanAlgebra& A, const Vec& x, const Vec& y) {
  Vec x2 = A.mul(x, x);
  return sub(A.mul(x2, A.mul(x, y)), A.mul(x, A.mul(x2, y)));
}

}  // namespace jconf
