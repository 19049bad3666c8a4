#include "jconf/conformal.hpp"

#include <algorithm>

namespace jconf {

Vec flatten_mat(const Mat& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Mat unflatten_mat(const Vec& v, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[size_t(i) * n + j];
  return m;
}

Mat inner_derivation(const JordanAlgebra& V, const Vec& a, const Vec& b) {
  return commutator(V.Lmat(a), V.Lmat(b));
}

namespace {

Mat conj_mat(const Mat& m) {
  Mat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).conj();
  return out;
}

}  // namespace

Vec DerivationAlgebra::coordinates(const Mat& D) const {
  return space.coordinates(flatten_mat(D));
}

Mat DerivationAlgebra::matrix(const Vec& coords) const {
  int n = mats.empty() ? 0 : mats.front().rows();
  Mat out(n, n);
  for (size_t k = 0; k < mats.size(); ++k)
    if (!coords[k].is_zero()) out = out + mats[k].scaled(coords[k]);
  return out;
}

DerivationAlgebra derivation_algebra(const JordanAlgebra& V) {
  int n = V.n;
  AmbientBracket br = [n](const Vec& x, const Vec& y) {
    return flatten_mat(commutator(unflatten_mat(x, n), unflatten_mat(y, n)));
  };
  std::vector<Vec> gens;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      gens.push_back(flatten_mat(
          inner_derivation(V, unit_vec(n, a), unit_vec(n, b))));
  ClosedSubalgebra closed = close_under_bracket(gens, br);
  DerivationAlgebra out;
  out.space = std::move(closed.space);
  out.algebra = std::move(closed.algebra);
  out.algebra.complex_basis = (V.field == Field::C);
  for (int k = 0; k < out.space.dim(); ++k) {
    out.mats.push_back(unflatten_mat(out.space.basis().row(k), n));
    out.algebra.labels.push_back("D" + std::to_string(k));
  }
  return out;
}

ConformalAlgebra::ConformalAlgebra(const JordanAlgebra& model)
    : V_(model), der_(derivation_algebra(V_)) {
  build_table();
}

void ConformalAlgebra::build_table() {
  const int n = V_.n, m = da(), N = 3 * n + m;
  co_ = LieAlgebra(N);
  co_.complex_basis = (V_.field == Field::C);
  co_.labels.resize(N);
  for (int a = 0; a < n; ++a) {
    co_.labels[u_slot(a)] = "u:" + V_.labels[a];
    co_.labels[x_slot(a)] = "x:" + V_.labels[a];
    co_.labels[v_slot(a)] = "v:" + V_.labels[a];
  }
  for (int k = 0; k < m; ++k) co_.labels[d_slot(k)] = "D" + std::to_string(k);

  // coordinates of [L(e_a), L(e_b)] in der(V), a < b
  std::vector<std::vector<Vec>> ll(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      ll[a].push_back(der_.coordinates(
          inner_derivation(V_, unit_vec(n, a), unit_vec(n, b))));

  auto set = [&](int sa, int sb, const Vec& dense) {
    co_.set_bracket(sa, sb, to_sparse(dense));
  };

  // [(e_a,0,0), (0,0,e_b)] = (0, 2 e_a e_b + 2 [L(e_a),L(e_b)], 0)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec dense(N);
      for (const auto& e : V_.product[a][b])
        dense[x_slot(e.idx)] = e.val + e.val;
      if (a != b) {
        const Vec& c = a < b ? ll[a][b - a - 1] : ll[b][a - b - 1];
        Scalar sgn(a < b ? 2 : -2);
        for (int k = 0; k < m; ++k)
          if (!c[k].is_zero()) dense[d_slot(k)] = sgn * c[k];
      }
      set(u_slot(a), v_slot(b), dense);
    }

  // [(0,L(e_c),0), (e_a,0,0)] = (e_c e_a, 0, 0)
  // [(0,L(e_c),0), (0,0,e_a)] = (0, 0, -e_c e_a)
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a) {
      Vec du(N), dv(N);
      for (const auto& e : V_.product[c][a]) {
        du[u_slot(e.idx)] = e.val;
        dv[v_slot(e.idx)] = -e.val;
      }
      set(x_slot(c), u_slot(a), du);
      set(x_slot(c), v_slot(a), dv);
    }

  // [(0,L(e_c),0), (0,L(e_d),0)] = (0, [L(e_c),L(e_d)], 0)
  for (int c = 0; c < n; ++c)
    for (int d = c + 1; d < n; ++d) {
      Vec dense(N);
      const Vec& coords = ll[c][d - c - 1];
      for (int k = 0; k < m; ++k)
        if (!coords[k].is_zero()) dense[d_slot(k)] = coords[k];
      set(x_slot(c), x_slot(d), dense);
    }

  // [(0,D,0), ±slots]: D acts on u and x, and by +D on v (since D^# = -D)
  for (int k = 0; k < m; ++k) {
    const Mat& D = der_.mats[k];
    for (int a = 0; a < n; ++a) {
      Vec du(N), dx(N), dv(N);
      for (int i = 0; i < n; ++i) {
        const Scalar& val = D.at(i, a);
        if (val.is_zero()) continue;
        du[u_slot(i)] = val;
        dx[x_slot(i)] = val;
        dv[v_slot(i)] = val;
      }
      set(d_slot(k), u_slot(a), du);
      set(d_slot(k), x_slot(a), dx);
      set(d_slot(k), v_slot(a), dv);
    }
    for (int l = k + 1; l < m; ++l) {
      SparseVec shifted = der_.algebra.bracket_basis(k, l);
      for (auto& e : shifted) e.idx = d_slot(e.idx);
      co_.set_bracket(d_slot(k), d_slot(l), shifted);
    }
  }

  theta_der_.clear();
  Mat th0c = conj_mat(V_.cartan0);
  for (int k = 0; k < m; ++k)
    theta_der_.push_back(
        der_.coordinates(V_.cartan0 * conj_mat(der_.mats[k]) * th0c));
}

Vec ConformalAlgebra::element(const Vec& u, const Vec& x, const Vec& dcoords,
                              const Vec& v) const {
  Vec out(dim());
  for (int a = 0; a < V_.n; ++a) {
    out[u_slot(a)] = u[a];
    out[x_slot(a)] = x[a];
    out[v_slot(a)] = v[a];
  }
  for (int k = 0; k < da(); ++k) out[d_slot(k)] = dcoords[k];
  return out;
}

Vec ConformalAlgebra::u_part(const Vec& X) const {
  Vec out(V_.n);
  for (int a = 0; a < V_.n; ++a) out[a] = X[u_slot(a)];
  return out;
}

Vec ConformalAlgebra::x_part(const Vec& X) const {
  Vec out(V_.n);
  for (int a = 0; a < V_.n; ++a) out[a] = X[x_slot(a)];
  return out;
}

Vec ConformalAlgebra::d_part(const Vec& X) const {
  Vec out(da());
  for (int k = 0; k < da(); ++k) out[k] = X[d_slot(k)];
  return out;
}

Vec ConformalAlgebra::v_part(const Vec& X) const {
  Vec out(V_.n);
  for (int a = 0; a < V_.n; ++a) out[a] = X[v_slot(a)];
  return out;
}

Vec ConformalAlgebra::sl2_E() const {
  return element(V_.unit, zero_vec(V_.n), zero_vec(da()), zero_vec(V_.n));
}

Vec ConformalAlgebra::sl2_H() const {
  return element(zero_vec(V_.n), scale(Scalar(2), V_.unit), zero_vec(da()),
                 zero_vec(V_.n));
}

Vec ConformalAlgebra::sl2_F() const {
  return element(zero_vec(V_.n), zero_vec(V_.n), zero_vec(da()), V_.unit);
}

Subspace ConformalAlgebra::sl2_span() const {
  return Subspace::span_rows({sl2_E(), sl2_H(), sl2_F()});
}

namespace {
Subspace slot_span(int dim, const std::vector<int>& slots) {
  Mat rows(0, dim);
  for (int s : slots) rows.append_row(unit_vec(dim, s));
  return Subspace::span(std::move(rows));
}
}  // namespace

Subspace ConformalAlgebra::grade_slice() const {
  std::vector<int> slots;
  for (int a = 0; a < V_.n; ++a) slots.push_back(u_slot(a));
  for (int a = 0; a < V_.n; ++a) slots.push_back(v_slot(a));
  return slot_span(dim(), slots);
}

Subspace ConformalAlgebra::str_slice() const {
  std::vector<int> slots;
  for (int a = 0; a < V_.n; ++a) slots.push_back(x_slot(a));
  for (int k = 0; k < da(); ++k) slots.push_back(d_slot(k));
  return slot_span(dim(), slots);
}

Subspace ConformalAlgebra::der_embedded() const {
  std::vector<int> slots;
  for (int k = 0; k < da(); ++k) slots.push_back(d_slot(k));
  return slot_span(dim(), slots);
}

Vec ConformalAlgebra::cartan(const Vec& X) const {
  Vec c = X;
  if (V_.field == Field::C)
    for (auto& s : c) s = s.conj();
  Vec u = u_part(c), x = x_part(c), dc = d_part(c), v = v_part(c);
  Vec d2(da());
  for (int k = 0; k < da(); ++k)
    if (!dc[k].is_zero()) add_scaled(d2, dc[k], theta_der_[k]);
  return element(scale(Scalar(-1), V_.cartan0.apply(v)),
                 scale(Scalar(-1), V_.cartan0.apply(x)), d2,
                 scale(Scalar(-1), V_.cartan0.apply(u)));
}

DualPairData dual_pair(const ConformalAlgebra& C) {
  DualPairData out;
  out.sl2_centralizer =
      centralizer(C.co(), {C.sl2_E(), C.sl2_H(), C.sl2_F()});
  std::vector<Vec> dgens;
  for (int k = 0; k < C.da(); ++k)
    dgens.push_back(unit_vec(C.dim(), C.d_slot(k)));
  out.der_centralizer = centralizer(C.co(), dgens);
  out.mutual = out.sl2_centralizer == C.der_embedded() &&
               out.der_centralizer == C.sl2_span();
  return out;
}

CartanSplit cartan_split(const ConformalAlgebra& C, int pair_budget) {
  LieAlgebra realified;
  const LieAlgebra* L = &C.co();
  int N = C.dim();
  Mat theta(0, 0);
  if (C.V().field == Field::R) {
    theta = Mat(N, N);
    for (int k = 0; k < N; ++k) {
      Vec col = C.cartan(unit_vec(N, k));
      for (int i = 0; i < N; ++i) theta.at(i, k) = std::move(col[i]);
    }
  } else {
    realified = C.co().realify();
    L = &realified;
    theta = Mat(2 * N, 2 * N);
    for (int k = 0; k < N; ++k) {
      Vec col = C.cartan(unit_vec(N, k));
      for (int i = 0; i < N; ++i) {
        // theta(X_k) = p + i q ; theta(i X_k) = -i theta(X_k) = q - i p
        theta.at(i, k) = col[i].re();
        theta.at(N + i, k) = col[i].im();
        theta.at(i, N + k) = col[i].im();
        theta.at(N + i, N + k) = -col[i].re();
      }
    }
  }
  int M = theta.rows();
  Mat minus(theta), plus(theta);
  for (int i = 0; i < M; ++i) {
    minus.at(i, i) -= Scalar(1);
    plus.at(i, i) += Scalar(1);
  }
  CartanSplit out;
  out.k = Subspace::span(kernel_basis(minus));
  out.p = Subspace::span(kernel_basis(plus));
  if (out.k.dim() + out.p.dim() != M) return out;

  Rng rng(kDefaultSeed);
  auto check = [&](const Subspace& A, const Subspace& B, const Subspace& target) {
    long total = long(A.dim()) * B.dim();
    if (total <= pair_budget) {
      for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j)
          if (!target.contains(L->bracket(A.basis().row(i), B.basis().row(j))))
            return false;
      return true;
    }
    for (int t = 0; t < pair_budget; ++t) {
      int i = rng.uniform(0, A.dim() - 1), j = rng.uniform(0, B.dim() - 1);
      if (!target.contains(L->bracket(A.basis().row(i), B.basis().row(j))))
        return false;
    }
    return true;
  };
  out.brackets_ok = check(out.k, out.k, out.k) && check(out.k, out.p, out.p) &&
                    check(out.p, out.p, out.k);
  return out;
}

FrameDecomposition frame_decomposition(const JordanAlgebra& V,
                                       const DerivationAlgebra& der) {
  const int n = V.n, m = int(der.mats.size()), r = V.r;
  FrameDecomposition out;
  Mat A(m, r * n);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < r; ++i) {
      Vec w = der.mats[k].apply(V.frame[i]);
      for (int j = 0; j < n; ++j) A.at(k, i * n + j) = std::move(w[j]);
    }
  out.g0 = Subspace::span(kernel_basis(A.transpose()));

  PeirceData peirce = peirce_decompose(V);
  int total = out.g0.dim();
  Mat all(out.g0.basis());
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const Subspace& vij = peirce.off.at({i, j});
      Mat rows(0, m);
      for (int t = 0; t < vij.dim(); ++t)
        rows.append_row(der.coordinates(
            inner_derivation(V, V.frame[i], vij.basis().row(t))));
      Subspace gij = Subspace::span(std::move(rows));
      total += gij.dim();
      for (int t = 0; t < gij.dim(); ++t) all.append_row(gij.basis().row(t));
      out.gij[{i, j}] = std::move(gij);
    }
  out.direct_sum = (total == m) && (Subspace::span(std::move(all)).dim() == m);

  out.composition_rule = true;
  auto piece = [&](int i, int j) -> const Subspace& {
    return out.gij.at({std::min(i, j), std::max(i, j)});
  };
  for (int i = 0; i < r && out.composition_rule; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        if (i == j || j == k || i == k) continue;
        const Subspace &gij = piece(i, j), &gjk = piece(j, k), &gik = piece(i, k);
        for (int s = 0; s < gij.dim(); ++s)
          for (int t = 0; t < gjk.dim(); ++t)
            if (!gik.contains(
                    der.algebra.bracket(gij.basis().row(s), gjk.basis().row(t))))
              out.composition_rule = false;
      }
  return out;
}

SymmetricPairData symmetric_pair(const JordanAlgebra& V,
                                 const DerivationAlgebra& der,
                                 const FrameDecomposition& dec) {
  const int n = V.n, m = int(der.mats.size()), r = V.r;
  SymmetricPairData out;
  Mat plus_rows(dec.g0.basis());
  Mat minus_rows(0, m);
  for (const auto& [key, sub] : dec.gij) {
    Mat& target = (key.first == 0) ? minus_rows : plus_rows;
    for (int t = 0; t < sub.dim(); ++t) target.append_row(sub.basis().row(t));
  }
  out.plus = Subspace::span(std::move(plus_rows));
  out.minus = Subspace::span(std::move(minus_rows));

  // stabilizer of c_1
  Mat A(m, n);
  for (int k = 0; k < m; ++k) {
    Vec w = der.mats[k].apply(V.frame[0]);
    for (int j = 0; j < n; ++j) A.at(k, j) = std::move(w[j]);
  }
  out.plus_is_stabilizer = out.plus == Subspace::span(kernel_basis(A.transpose()));

  PeirceData peirce = peirce_decompose(V);
  Mat half_rows(0, m);
  for (int t = 0; t < peirce.half_F.dim(); ++t)
    half_rows.append_row(der.coordinates(
        inner_derivation(V, V.frame[0], peirce.half_F.basis().row(t))));
  out.minus_is_half_bracket = out.minus == Subspace::span(std::move(half_rows));

  auto closed_in = [&](const Subspace& a, const Subspace& b, const Subspace& target) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j)
        if (!target.contains(
                der.algebra.bracket(a.basis().row(i), b.basis().row(j))))
          return false;
    return true;
  };
  out.brackets_ok = closed_in(out.plus, out.plus, out.plus) &&
                    closed_in(out.plus, out.minus, out.minus) &&
                    closed_in(out.minus, out.minus, out.plus);
  return out;
}

namespace {

// Common scaffolding for the two root data: partner selection in V_12 with
// prescribed trace square, root vectors, and eigenvalue multiplicities.
RootDatum root_datum_impl(const JordanAlgebra& V, const DerivationAlgebra& der,
                          bool compact) {
  RootDatum out;
  out.compact = compact;
  if (compact && V.field != Field::R) {
    out.reason = "compact datum is defined over real-based models only";
    return out;
  }
  PeirceData peirce = peirce_decompose(V);
  const Subspace& sgn_space =
      compact ? peirce.off_plus.at({0, 1}) : peirce.off_minus.at({0, 1});
  if (sgn_space.dim() == 0) {
    out.reason = compact ? "V_12 has no theta-fixed direction"
                         : "V_12 has no theta-flipped direction";
    return out;
  }
  Vec y0 = sgn_space.basis().row(0);
  if (V.field == Field::C) y0 = V.complexify(y0);
  Scalar q = V.trace_form(y0, y0);
  if (!q.is_rational() || q.is_zero() ||
      (compact ? q.sign() < 0 : q.sign() > 0)) {
    out.reason = "degenerate trace square on the chosen direction";
    return out;
  }
  Rational target(compact ? 32 : -32);
  Vec partner = scale(Scalar::sqrt_of(Rational(target / q.rational())), y0);
  out.partner = partner;
  out.defined = true;

  const int n = V.n, r = V.r, d = V.d;
  const Vec &c1 = V.frame[0], &c2 = V.frame[1];
  if (V.trace_form(partner, partner) != Scalar(target)) {
    out.detail = "partner normalization failed";
    return out;
  }
  out.H0 = der.coordinates(inner_derivation(V, c1, partner));

  Scalar unit = compact ? Scalar::i() : Scalar(1);
  // In the compact case the positive-root functional takes the value 1 on
  // i*H0, so the eigenvalue of ad(H0) on the positive root vectors is -i.
  Scalar ev = compact ? -unit : unit;
  bool ok = true;
  auto fail = [&](const std::string& what) {
    ok = false;
    if (out.detail.empty()) out.detail = what;
  };
  Mat plus_rows(0, int(der.mats.size())), minus_rows(0, int(der.mats.size()));
  for (int j = 2; j < r; ++j) {
    const Subspace& v1j = peirce.off.at({0, j});
    for (int t = 0; t < v1j.dim(); ++t) {
      Vec y = v1j.basis().row(t);
      Vec a = der.coordinates(inner_derivation(V, c1, y));
      Vec b = der.coordinates(inner_derivation(V, c2, V.mul(partner, y)));
      Vec xp = sub(a, scale(unit * Scalar(Rational(1, 2)), b));
      Vec xm = add(a, scale(unit * Scalar(Rational(1, 2)), b));
      if (der.algebra.bracket(out.H0, xp) != scale(ev, xp))
        fail("short root vector (+) has wrong eigenvalue");
      if (der.algebra.bracket(out.H0, xm) != scale(-ev, xm))
        fail("short root vector (-) has wrong eigenvalue");
      plus_rows.append_row(xp);
      minus_rows.append_row(xm);
    }
  }
  Subspace plus_a = Subspace::span(std::move(plus_rows));
  Subspace minus_a = Subspace::span(std::move(minus_rows));
  if (plus_a.dim() != (r - 2) * d || minus_a.dim() != (r - 2) * d)
    fail("short root multiplicity mismatch");
  out.mult_alpha = plus_a.dim();

  // y in V_12 with tau(partner, y) = 0
  const Subspace& v12 = peirce.off.at({0, 1});
  Mat cond(1, v12.dim());
  for (int t = 0; t < v12.dim(); ++t)
    cond.at(0, t) = V.trace_form(partner, v12.basis().row(t));
  Mat coeffs = kernel_basis(cond);
  Mat plus2_rows(0, int(der.mats.size())), minus2_rows(0, int(der.mats.size()));
  for (int s = 0; s < coeffs.rows(); ++s) {
    Vec y(n);
    for (int t = 0; t < v12.dim(); ++t)
      if (!coeffs.at(s, t).is_zero())
        add_scaled(y, coeffs.at(s, t), v12.basis().row(t));
    Vec a = der.coordinates(inner_derivation(V, c1, y));
    Vec b = der.coordinates(inner_derivation(V, partner, y));
    Vec xp = sub(a, scale(unit * Scalar(Rational(1, 8)), b));
    Vec xm = add(a, scale(unit * Scalar(Rational(1, 8)), b));
    if (der.algebra.bracket(out.H0, xp) != scale(Scalar(2) * ev, xp))
      fail("long root vector (+) has wrong eigenvalue");
    if (der.algebra.bracket(out.H0, xm) != scale(Scalar(-2) * ev, xm))
      fail("long root vector (-) has wrong eigenvalue");
    plus2_rows.append_row(xp);
    minus2_rows.append_row(xm);
  }
  Subspace plus_2a = Subspace::span(std::move(plus2_rows));
  Subspace minus_2a = Subspace::span(std::move(minus2_rows));
  if (plus_2a.dim() != d - 1 || minus_2a.dim() != d - 1)
    fail("long root multiplicity mismatch");
  out.mult_2alpha = plus_2a.dim();

  // multiplicities from the squared adjoint action
  Mat adH = der.algebra.ad_dense(out.H0);
  Mat ad2 = adH * adH;
  Scalar lam1 = compact ? Scalar(-1) : Scalar(1);
  Scalar lam4 = compact ? Scalar(-4) : Scalar(4);
  Rng rng(kDefaultSeed);
  EigenDecomposition eig = eigen_decompose(ad2, {Scalar(0), lam1, lam4}, rng);
  if (!eig.complete) fail("adjoint square not diagonalizable: " + eig.failure);
  for (const auto& [lam, sp] : eig.spaces) {
    if (lam == lam1) {
      if (sp.dim() != 2 * (r - 2) * d || !(sp == plus_a.sum(minus_a)))
        fail("short eigenspace of the adjoint square mismatch");
    } else if (lam == lam4) {
      if (sp.dim() != 2 * (d - 1) || !(sp == plus_2a.sum(minus_2a)))
        fail("long eigenspace of the adjoint square mismatch");
    } else if (!lam.is_zero()) {
      fail("unexpected eigenvalue of the adjoint square: " + lam.str());
    }
  }

  int delta = compact ? 1 : V.delta;
  Rational half_alpha(out.mult_alpha, 2);
  half_alpha.canonicalize();
  out.rho_coeff = Rational(delta) * (half_alpha + Rational(out.mult_2alpha));
  Rational expected(r * d - 2, 2);
  expected.canonicalize();
  if (out.rho_coeff != Rational(delta) * expected)
    fail("half sum coefficient mismatch");
  out.verified = ok;
  return out;
}

}  // namespace

RootDatum split_root_datum(const JordanAlgebra& V, const DerivationAlgebra& der) {
  return root_datum_impl(V, der, false);
}

RootDatum compact_root_datum(const JordanAlgebra& V,
                             const DerivationAlgebra& der) {
  return root_datum_impl(V, der, true);
}

RotationData rotation_half_space(const ConformalAlgebra& C) {
  const JordanAlgebra& V = C.V();
  const int n = V.n, N = C.dim();
  RotationData out;
  Vec w = C.element(V.frame[0], zero_vec(n), zero_vec(C.da()),
                    scale(Scalar(-1), V.frame[0]));
  Mat ad = C.co().ad_dense(w);
  Mat ad2 = ad * ad;

  std::vector<int> slice;
  for (int a = 0; a < n; ++a) slice.push_back(C.u_slot(a));
  for (int a = 0; a < n; ++a) slice.push_back(C.v_slot(a));
  // the slice must be invariant
  for (int q = 0; q < 2 * n; ++q)
    for (int i = 0; i < N; ++i) {
      if (ad2.at(i, slice[q]).is_zero()) continue;
      if (std::find(slice.begin(), slice.end(), i) == slice.end()) return out;
    }
  Mat R(2 * n, 2 * n);
  for (int p = 0; p < 2 * n; ++p)
    for (int q = 0; q < 2 * n; ++q) R.at(p, q) = ad2.at(slice[p], slice[q]);

  Rng rng(kDefaultSeed);
  EigenDecomposition eig =
      eigen_decompose(R, {Scalar(0), Scalar(-1), Scalar(-4)}, rng);
  out.complete = eig.complete;
  if (!eig.complete) return out;
  Mat urows(0, n);
  for (const auto& [lam, sp] : eig.spaces) {
    out.mults[lam.rational()] = sp.dim();
    if (lam == Scalar(-1))
      for (int t = 0; t < sp.dim(); ++t) {
        Vec u(n);
        for (int a = 0; a < n; ++a) u[a] = sp.basis().at(t, a);
        urows.append_row(u);
      }
  }
  out.recovered_half = Subspace::span(std::move(urows));
  out.matches_half = out.recovered_half == peirce_decompose(V).half_F;
  return out;
}

std::vector<std::pair<std::pair<Vec, Vec>, Scalar>> invariant_form_anchors(
    const JordanAlgebra& V, const DerivationAlgebra& der) {
  PeirceData peirce = peirce_decompose(V);
  const Subspace& half = peirce.half_F;
  std::vector<std::pair<std::pair<Vec, Vec>, Scalar>> out;
  for (int i = 0; i < half.dim() && out.size() < 6; ++i)
    for (int j = i; j < half.dim() && out.size() < 6; ++j) {
      Vec v = half.basis().row(i), w = half.basis().row(j);
      Scalar t = V.trace_form(v, w);
      if (t.is_zero()) continue;
      out.push_back({{der.coordinates(inner_derivation(V, V.frame[0], v)),
                      der.coordinates(inner_derivation(V, V.frame[0], w))},
                     t});
    }
  return out;
}

}  // namespace jconf
