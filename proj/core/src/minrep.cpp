#include "jconf/minrep.hpp"

#include <utility>

namespace jconf {

namespace {

Scalar half() { return Scalar(Rational(1, 2)); }

Rational canon(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// u box v = L(uv) + [L(u), L(v)] as a matrix on the realified algebra.
Mat box_mat(const JordanAlgebra& V, const Vec& u, const Vec& v) {
  return V.Lmat_R(V.mul_R(u, v)) + commutator(V.Lmat_R(u), V.Lmat_R(v));
}

}  // namespace

CoElement co_zero(const JordanAlgebra& V) {
  int N = V.N();
  return CoElement{zero_vec(N), Mat(N, N), zero_vec(N)};
}

CoElement co_E(const JordanAlgebra& V) {
  CoElement X = co_zero(V);
  X.u = V.unit_R;
  return X;
}

CoElement co_H(const JordanAlgebra& V) {
  CoElement X = co_zero(V);
  X.T = V.Lmat_R(V.unit_R).scaled(Scalar(2));
  return X;
}

CoElement co_F(const JordanAlgebra& V) {
  CoElement X = co_zero(V);
  X.v = V.unit_R;
  return X;
}

Mat tau_sharp(const JordanAlgebra& V, const Mat& T) {
  const Mat& G = V.tau_R_gram();
  return inverse(G) * T.transpose() * G;
}

CoElement co_bracket(const JordanAlgebra& V, const CoElement& X,
                     const CoElement& Y) {
  CoElement Z = co_zero(V);
  Z.u = sub(X.T.apply(Y.u), Y.T.apply(X.u));
  Mat T = commutator(X.T, Y.T);
  T = T + box_mat(V, X.u, Y.v).scaled(Scalar(2));
  T = T - box_mat(V, Y.u, X.v).scaled(Scalar(2));
  Z.T = std::move(T);
  Z.v = sub(tau_sharp(V, Y.T).apply(X.v), tau_sharp(V, X.T).apply(Y.v));
  return Z;
}

MinRepAction::MinRepAction(const JordanAlgebra& V) : V_(&V) {
  const int N = V.N();
  std::vector<std::string> names;
  names.reserve(N);
  for (int k = 0; k < V.n; ++k) names.push_back(V.labels[k]);
  if (V.field == Field::C)
    for (int k = 0; k < V.n; ++k) names.push_back("i*" + V.labels[k]);
  ctx_ = make_diff_ctx(N, N, std::move(names));
  Mat ginv;
  try {
    ginv = inverse(V.tau_R_gram());
  } catch (const LinalgError&) {
    throw JordanError("trace pairing is degenerate; no dual basis");
  }
  dual_.reserve(N);
  for (int a = 0; a < N; ++a) dual_.push_back(ginv.row(a));
}

PolyDiffOp MinRepAction::mult_op(const Vec& v) const {
  Vec w = V_->tau_R_gram().apply(v);  // coefficient of x_a is tau(b_a, v)
  return PolyDiffOp::mult(
      ctx_, Poly::linear(ctx_.nvars, w).scaled(-Scalar::i()));
}

PolyDiffOp MinRepAction::str_op(const Mat& T) const {
  const int N = ctx_.nvars;
  PolyDiffOp op(ctx_);
  for (int g = 0; g < N; ++g) {
    Vec row = T.row(g);  // (Tx)_g = sum_d T_{g d} x_d
    if (is_zero_vec(row)) continue;
    Exps e(N, 0);
    e[g] = 1;
    op.add_term(e, {Poly::linear(N, row).scaled(Scalar(-1)), 0});
  }
  Scalar weight = Scalar(canon(V_->r * V_->d, 4 * V_->n)) * T.trace();
  if (!weight.is_zero())
    op += PolyDiffOp::mult(ctx_, Poly::constant(N, -weight));
  return op;
}

PolyDiffOp MinRepAction::bessel_paired(const Vec& u) const {
  const JordanAlgebra& V = *V_;
  const int N = ctx_.nvars;
  PolyDiffOp op(ctx_);
  if (is_zero_vec(u)) return op;
  const Mat& G = V.tau_R_gram();
  const Scalar minus_i = -Scalar::i();
  std::vector<Vec> du;  // e^a . u
  du.reserve(N);
  for (int a = 0; a < N; ++a) du.push_back(V.mul_R(dual_[a], u));
  for (int a = 0; a < N; ++a) {
    for (int b = a; b < N; ++b) {
      // P(e^a, e^b) u = e^a (e^b u) + e^b (e^a u) - (e^a e^b) u
      Vec w = add(V.mul_R(dual_[a], du[b]), V.mul_R(dual_[b], du[a]));
      w = sub(w, V.mul_R(V.mul_R(dual_[a], dual_[b]), u));
      if (is_zero_vec(w)) continue;
      Poly p = Poly::linear(N, G.apply(w)).scaled(minus_i);
      if (b > a) p = p.scaled(Scalar(2));  // unordered pair counted twice
      Exps e(N, 0);
      ++e[a];
      ++e[b];
      op.add_term(e, {std::move(p), 0});
    }
  }
  const Scalar shift = Scalar(canon(V.delta * V.d, 2)) * minus_i;
  for (int a = 0; a < N; ++a) {
    Scalar cfa = V.tau_R(dual_[a], u);
    if (cfa.is_zero()) continue;
    Exps e(N, 0);
    e[a] = 1;
    op.add_term(e, {Poly::constant(N, shift * cfa), 0});
  }
  return op;
}

PolyDiffOp MinRepAction::bessel_component(int gamma) const {
  return bessel_paired(dual_[gamma]).scaled(Scalar::i());
}

PolyDiffOp MinRepAction::bessel_paired_in_basis(const Vec& u,
                                                const Mat& M) const {
  const JordanAlgebra& V = *V_;
  const int N = ctx_.nvars;
  const Mat& G = V.tau_R_gram();
  Mat dualp = inverse(M * G * M.transpose()) * M;  // dual rows for rows of M
  const Scalar minus_i = -Scalar::i();
  PolyDiffOp op(ctx_);
  std::vector<Vec> du;
  du.reserve(N);
  for (int a = 0; a < N; ++a) du.push_back(V.mul_R(dualp.row(a), u));
  for (int a = 0; a < N; ++a) {
    Vec ea = dualp.row(a);
    for (int b = 0; b < N; ++b) {
      Vec w = add(V.mul_R(ea, du[b]), V.mul_R(dualp.row(b), du[a]));
      w = sub(w, V.mul_R(V.mul_R(ea, dualp.row(b)), u));
      if (is_zero_vec(w)) continue;
      Poly p = Poly::linear(N, G.apply(w)).scaled(minus_i);
      for (int g = 0; g < N; ++g) {
        const Scalar& mg = M.at(a, g);
        if (mg.is_zero()) continue;
        for (int dlt = 0; dlt < N; ++dlt) {
          Scalar s = mg * M.at(b, dlt);
          if (s.is_zero()) continue;
          Exps e(N, 0);
          ++e[g];
          ++e[dlt];
          op.add_term(e, {p.scaled(s), 0});
        }
      }
    }
  }
  const Scalar shift = Scalar(canon(V.delta * V.d, 2)) * minus_i;
  for (int a = 0; a < N; ++a) {
    Scalar cfa = V.tau_R(dualp.row(a), u) * shift;
    if (cfa.is_zero()) continue;
    for (int g = 0; g < N; ++g) {
      const Scalar& mg = M.at(a, g);
      if (mg.is_zero()) continue;
      Exps e(N, 0);
      e[g] = 1;
      op.add_term(e, {Poly::constant(N, cfa * mg), 0});
    }
  }
  return op;
}

PolyDiffOp MinRepAction::dpi(const CoElement& X) const {
  PolyDiffOp op = bessel_paired(X.u);
  if (!X.T.is_zero()) op += str_op(X.T);
  if (!is_zero_vec(X.v)) op += mult_op(X.v);
  return op;
}

PolyDiffOp rep_defect(const MinRepAction& act, const CoElement& X,
                      const CoElement& Y) {
  return commutator(act.dpi(X), act.dpi(Y)) -
         act.dpi(co_bracket(act.model(), X, Y));
}

RepCheckReport rep_relation_check(const MinRepAction& act, const CoElement& X,
                                  const CoElement& Y, int degree_bound,
                                  const std::vector<Vec>& points) {
  RepCheckReport rep;
  PolyDiffOp defect = rep_defect(act, X, Y);
  rep.ambient_zero = defect.is_zero();
  const int N = act.ctx().nvars;
  std::vector<Exps> monos = monomials_up_to(N, degree_bound);
  rep.monomials = int(monos.size());
  rep.points = int(points.size());
  rep.tangential_zero = true;
  for (const Exps& e : monos) {
    Poly f(N);
    f.add_term(e, Scalar(1));
    LocalizedPoly df = defect.apply(f);
    if (df.is_zero()) continue;
    for (const Vec& pt : points) {
      Scalar val = df.num.eval(pt);
      if (val.is_zero()) continue;
      rep.tangential_zero = false;
      if (rep.counterexample.empty())
        rep.counterexample =
            "monomial " + f.str(act.ctx().names) + " -> " + val.str();
    }
  }
  return rep;
}

Poly cone_ideal_poly(const MinRepAction& act, const Vec& w) {
  const JordanAlgebra& V = act.model();
  const int N = V.N();
  Poly p(N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      Scalar cf = V.tau_R(V.mul_R(unit_vec(N, a), unit_vec(N, b)), w);
      if (b > a) cf += cf;
      if (cf.is_zero()) continue;
      Exps e(N, 0);
      ++e[a];
      ++e[b];
      p.add_term(e, cf);
    }
  Poly lin_e = Poly::linear(N, V.tau_R_gram().apply(V.unit_R));
  Poly lin_w = Poly::linear(N, V.tau_R_gram().apply(w));
  p -= lin_e * lin_w;
  if (V.field == Field::C) {
    // over C the eigenvalue tau(x,e) of a rank-one x is complex; the
    // imaginary part enters through multiplication by i
    Vec ce(N), cw(N);
    for (int a = 0; a < N; ++a) {
      Vec ib = V.mul_i_R(unit_vec(N, a));
      ce[a] = V.tau_R(ib, V.unit_R);
      cw[a] = V.tau_R(ib, w);
    }
    p += Poly::linear(N, ce) * Poly::linear(N, cw);
  }
  return p;
}

TangentialityReport tangentiality_check(const MinRepAction& act,
                                        const CoElement& X, const Poly& f,
                                        const std::vector<Vec>& cone_points,
                                        const Vec& probe) {
  TangentialityReport rep;
  rep.cut_zero_on_cone = true;
  for (const Vec& pt : cone_points) {
    Scalar val = f.eval(pt);
    if (val.is_zero()) continue;
    rep.cut_zero_on_cone = false;
    rep.detail = "cut function nonzero at a cone point: " + val.str();
    return rep;
  }
  rep.cut_nonzero_at_probe = !f.eval(probe).is_zero();
  if (!rep.cut_nonzero_at_probe) {
    rep.detail = "cut function vanishes at the probe point";
    return rep;
  }
  LocalizedPoly img = act.dpi(X).apply(f);
  rep.image_zero_on_cone = true;
  for (const Vec& pt : cone_points) {
    Scalar val = img.num.eval(pt);
    if (val.is_zero()) continue;
    rep.image_zero_on_cone = false;
    rep.detail = "image nonzero at a cone point: " + val.str();
    break;
  }
  rep.image_nonzero_at_probe = !img.num.eval(probe).is_zero();
  if (!rep.image_nonzero_at_probe && rep.detail.empty())
    rep.detail = "image vanishes at the probe point";
  return rep;
}

KeyLemmaReport key_lemma_at_c(const JordanAlgebra& V, int degree_bound) {
  MinRepAction act(V);
  const DiffCtx& ctx = act.ctx();
  const int N = V.N();
  const bool cx = V.field == Field::C;
  KeyLemmaReport rep;

  const Vec c = V.frame_R[0];
  PeirceData peirce = peirce_decompose(V);
  const int h = peirce.half_R.dim();
  std::vector<Vec> f;
  f.reserve(h);
  for (int a = 0; a < h; ++a) f.push_back(peirce.half_R.basis().row(a));
  Mat gram(h, h);
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) gram.at(a, b) = V.tau_R(f[a], f[b]);
  Mat hinv = inverse(gram);

  auto dir = [&](const Vec& w) { return PolyDiffOp::directional(ctx, w); };
  const Scalar dd2(canon(V.delta * V.d, 2));

  // Second-order normal form of the paired operator at the base idempotent.
  PolyDiffOp lhs_a = act.bessel_paired(V.unit_R).scaled(Scalar::i());
  PolyDiffOp at_c = lhs_a.at_point(c);
  PolyDiffOp rhs_a(ctx);
  rhs_a += compose(dir(c), dir(c));
  Vec ic;
  if (cx) {
    ic = V.mul_i_R(c);
    rhs_a -= compose(dir(ic), dir(ic));
  }
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      const Scalar& s = hinv.at(a, b);
      if (s.is_zero()) continue;
      rhs_a += compose(dir(f[a]), dir(f[b])).scaled(s * half());
    }
  for (int j = 0; j < V.r; ++j) rhs_a += dir(V.frame_R[j]).scaled(dd2);
  rep.bessel_at_c = (at_c == rhs_a);
  if (!rep.bessel_at_c && rep.mismatch.empty())
    rep.mismatch = "second-order normal form:\n" + (at_c - rhs_a).str();

  // Quadratic invariant built from the derivations D_a = [L(c), L(f_a)],
  // composed as first-order operators and frozen at the base point.
  std::vector<Mat> D;
  D.reserve(h);
  for (int a = 0; a < h; ++a)
    D.push_back(commutator(V.Lmat_R(c), V.Lmat_R(f[a])));
  std::vector<Vec> Dc;
  Dc.reserve(h);
  for (int a = 0; a < h; ++a) Dc.push_back(D[a].apply(c));
  PolyDiffOp lhs_b(ctx);
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      const Scalar& s = hinv.at(a, b);
      if (s.is_zero()) continue;
      lhs_b += dir(D[b].apply(Dc[a])).scaled(s);
      lhs_b += compose(dir(Dc[a]), dir(Dc[b])).scaled(s);
    }
  PolyDiffOp rhs_b(ctx);
  const Scalar s16(Rational(1, 16));
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      const Scalar& s = hinv.at(a, b);
      if (s.is_zero()) continue;
      rhs_b += compose(dir(f[a]), dir(f[b])).scaled(s * s16);
    }
  const Scalar dd16(canon(V.delta * V.d, 16));
  for (int j = 1; j < V.r; ++j)
    rhs_b -= dir(sub(V.frame_R[0], V.frame_R[j])).scaled(dd16);
  rep.casimir_at_c = (lhs_b == rhs_b);
  if (!rep.casimir_at_c && rep.mismatch.empty())
    rep.mismatch = "quadratic invariant:\n" + (lhs_b - rhs_b).str();

  // For small models cross-check the frozen composition against the full
  // operator product of the derivation actions.
  if (N <= 12) {
    PolyDiffOp full(ctx);
    std::vector<PolyDiffOp> dops;
    dops.reserve(h);
    for (int a = 0; a < h; ++a) dops.push_back(act.str_op(D[a]));
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b) {
        const Scalar& s = hinv.at(a, b);
        if (s.is_zero()) continue;
        full += compose(dops[a], dops[b]).scaled(s);
      }
    rep.composition_checked = (full.at_point(c) == lhs_b);
    if (!rep.composition_checked) {
      rep.casimir_at_c = false;
      if (rep.mismatch.empty())
        rep.mismatch = "composition cross-check:\n" +
                       (full.at_point(c) - lhs_b).str();
    }
  }

  // Radial identity: the paired operator at c equals the flat second-order
  // part plus the first-order drift plus eight times the invariant.
  const Scalar drd2(canon(V.delta * V.r * V.d, 2));
  PolyDiffOp rhs_c(ctx);
  rhs_c += compose(dir(c), dir(c));
  if (cx) rhs_c -= compose(dir(ic), dir(ic));
  rhs_c += dir(c).scaled(drd2);
  rhs_c += lhs_b.scaled(Scalar(8));
  rep.assembled = (at_c == rhs_c);
  if (!rep.assembled && rep.mismatch.empty())
    rep.mismatch = "radial identity:\n" + (at_c - rhs_c).str();

  // Over C the pairing with ie gives a companion set of identities.
  PolyDiffOp lhs_a2(ctx), rhs_c2(ctx), at_c2(ctx);
  if (cx) {
    lhs_a2 = act.bessel_paired(V.mul_i_R(V.unit_R)).scaled(Scalar::i());
    at_c2 = lhs_a2.at_point(c);
    PolyDiffOp rhs_a2(ctx);
    rhs_a2 += compose(dir(c), dir(ic)).scaled(Scalar(2));
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b) {
        const Scalar& s = hinv.at(a, b);
        if (s.is_zero()) continue;
        rhs_a2 += compose(dir(f[a]), dir(V.mul_i_R(f[b]))).scaled(s * half());
      }
    for (int j = 0; j < V.r; ++j)
      rhs_a2 += dir(V.mul_i_R(V.frame_R[j])).scaled(dd2);
    bool pair_a = (at_c2 == rhs_a2);

    std::vector<Mat> Di;
    Di.reserve(h);
    for (int b = 0; b < h; ++b)
      Di.push_back(commutator(V.Lmat_R(c), V.Lmat_R(V.mul_i_R(f[b]))));
    PolyDiffOp lhs_b2(ctx);
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b) {
        const Scalar& s = hinv.at(a, b);
        if (s.is_zero()) continue;
        lhs_b2 += dir(Di[b].apply(Dc[a])).scaled(s);
        lhs_b2 += compose(dir(Dc[a]), dir(Di[b].apply(c))).scaled(s);
      }
    PolyDiffOp rhs_b2(ctx);
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b) {
        const Scalar& s = hinv.at(a, b);
        if (s.is_zero()) continue;
        rhs_b2 += compose(dir(f[a]), dir(V.mul_i_R(f[b]))).scaled(s * s16);
      }
    for (int j = 1; j < V.r; ++j)
      rhs_b2 -=
          dir(V.mul_i_R(sub(V.frame_R[0], V.frame_R[j]))).scaled(dd16);
    bool pair_b = (lhs_b2 == rhs_b2);

    rhs_c2 += compose(dir(c), dir(ic)).scaled(Scalar(2));
    rhs_c2 += dir(ic).scaled(drd2);
    rhs_c2 += lhs_b2.scaled(Scalar(8));
    bool pair_c = (at_c2 == rhs_c2);

    rep.complex_pair = pair_a && pair_b && pair_c;
    if (!rep.complex_pair && rep.mismatch.empty())
      rep.mismatch = "companion identities over C";
  }

  // Independent confirmation on monomials: apply the ambient operators and
  // compare values at the base point.
  std::vector<Exps> monos = monomials_up_to(N, degree_bound);
  rep.monomials = int(monos.size());
  for (const Exps& e : monos) {
    Poly fm(N);
    fm.add_term(e, Scalar(1));
    Scalar lv = lhs_a.apply(fm).num.eval(c);
    if (lv != rhs_a.apply(fm).num.eval(c)) {
      rep.bessel_at_c = false;
      if (rep.mismatch.empty())
        rep.mismatch = "monomial check (normal form) at " + fm.str(ctx.names);
    }
    if (lhs_b.apply(fm).num.eval(c) != rhs_b.apply(fm).num.eval(c)) {
      rep.casimir_at_c = false;
      if (rep.mismatch.empty())
        rep.mismatch = "monomial check (invariant) at " + fm.str(ctx.names);
    }
    if (lv != rhs_c.apply(fm).num.eval(c)) {
      rep.assembled = false;
      if (rep.mismatch.empty())
        rep.mismatch = "monomial check (radial) at " + fm.str(ctx.names);
    }
    if (cx && lhs_a2.apply(fm).num.eval(c) != rhs_c2.apply(fm).num.eval(c)) {
      rep.complex_pair = false;
      if (rep.mismatch.empty())
        rep.mismatch = "monomial check (companion) at " + fm.str(ctx.names);
    }
  }
  return rep;
}

namespace {

// The operators on functions of xi (and eta over C); nu and m may be
// constants or variable polynomials of the same context.
Sl2Ops build_sl2(DiffCtx ctx, const Poly& nu, const Poly& m, int r, int d,
                 int delta) {
  Sl2Ops s;
  s.complex_case = (delta == 2);
  const int nv = ctx.nvars;
  const Scalar minus_i = -Scalar::i();
  const Poly xi = Poly::variable(nv, 0);
  if (!s.complex_case) {
    // i E = xi dxi^2 + (rd/2) dxi + (((rd-2)/4)^2 - nu^2) / xi
    PolyDiffOp Ed(ctx);
    Ed.add_term(Exps{2}, {xi, 0});
    Ed.add_term(Exps{1},
                {Poly::constant(nv, Scalar(canon(r * d, 2))), 0});
    Poly pot = Poly::constant(nv, Scalar(canon((r * d - 2) * (r * d - 2), 16)));
    pot -= nu * nu;
    Ed.add_term(Exps{0}, {pot, 1});
    s.E = Ed.scaled(minus_i);
    PolyDiffOp H(ctx);
    H.add_term(Exps{1}, {xi.scaled(Scalar(-2)), 0});
    H.add_term(Exps{0},
               {Poly::constant(nv, -Scalar(canon(delta * r * d, 2))), 0});
    s.H = H;
    s.F = PolyDiffOp::mult(ctx, xi.scaled(minus_i));
    s.ctx = std::move(ctx);
    return s;
  }
  const Poly eta = Poly::variable(nv, 1);
  const Scalar q2(canon((r * d - 2) * (r * d - 2), 4));
  Poly pots = Poly::constant(nv, q2) - nu * nu - m * m;  // q^2 - nu^2 - m^2
  Poly cross = (m * nu).scaled(Scalar(2) * Scalar::i());  // 2 i m nu
  // i E = xi (dxi^2 - deta^2) + 2 eta dxi deta + rd dxi
  //       + [(q^2 - nu^2 - m^2) xi + 2 i m nu eta] / (xi^2 + eta^2)
  PolyDiffOp Ed(ctx);
  Ed.add_term(Exps{2, 0}, {xi, 0});
  Ed.add_term(Exps{0, 2}, {xi.scaled(Scalar(-1)), 0});
  Ed.add_term(Exps{1, 1}, {eta.scaled(Scalar(2)), 0});
  Ed.add_term(Exps{1, 0}, {Poly::constant(nv, Scalar(r * d)), 0});
  Ed.add_term(Exps{0, 0}, {pots * xi + cross * eta, 1});
  s.E = Ed.scaled(minus_i);
  // i (iE) = 2 xi dxi deta - eta (dxi^2 - deta^2) + rd deta
  //          + [(q^2 - nu^2 - m^2) eta - 2 i m nu xi] / (xi^2 + eta^2)
  PolyDiffOp iEd(ctx);
  iEd.add_term(Exps{1, 1}, {xi.scaled(Scalar(2)), 0});
  iEd.add_term(Exps{2, 0}, {eta.scaled(Scalar(-1)), 0});
  iEd.add_term(Exps{0, 2}, {eta, 0});
  iEd.add_term(Exps{0, 1}, {Poly::constant(nv, Scalar(r * d)), 0});
  iEd.add_term(Exps{0, 0}, {pots * eta - cross * xi, 1});
  s.iE = iEd.scaled(minus_i);
  PolyDiffOp H(ctx);
  H.add_term(Exps{1, 0}, {xi.scaled(Scalar(-2)), 0});
  H.add_term(Exps{0, 1}, {eta.scaled(Scalar(-2)), 0});
  H.add_term(Exps{0, 0}, {Poly::constant(nv, Scalar(-r * d)), 0});
  s.H = H;
  PolyDiffOp iH(ctx);
  iH.add_term(Exps{1, 0}, {eta.scaled(Scalar(2)), 0});
  iH.add_term(Exps{0, 1}, {xi.scaled(Scalar(-2)), 0});
  s.iH = iH;
  s.F = PolyDiffOp::mult(ctx, xi.scaled(minus_i));
  s.iF = PolyDiffOp::mult(ctx, eta.scaled(Scalar::i()));
  s.ctx = std::move(ctx);
  return s;
}

}  // namespace

Sl2Ops sl2_model_ops(int m, const Scalar& nu, int r, int d, int delta) {
  if (delta == 1) {
    DiffCtx ctx = make_diff_ctx(1, 1, Poly::variable(1, 0), {"xi"});
    return build_sl2(std::move(ctx), Poly::constant(1, nu), Poly(1), r, d,
                     delta);
  }
  Poly den = Poly::variable(2, 0) * Poly::variable(2, 0) +
             Poly::variable(2, 1) * Poly::variable(2, 1);
  DiffCtx ctx = make_diff_ctx(2, 2, std::move(den), {"xi", "eta"});
  return build_sl2(std::move(ctx), Poly::constant(2, nu),
                   Poly::constant(2, Scalar(m)), r, d, delta);
}

Sl2Ops sl2_model_ops_symbolic(int r, int d, int delta) {
  if (delta == 1) {
    DiffCtx ctx = make_diff_ctx(2, 1, Poly::variable(2, 0), {"xi", "nu"});
    return build_sl2(std::move(ctx), Poly::variable(2, 1), Poly(2), r, d,
                     delta);
  }
  Poly den = Poly::variable(4, 0) * Poly::variable(4, 0) +
             Poly::variable(4, 1) * Poly::variable(4, 1);
  DiffCtx ctx =
      make_diff_ctx(4, 2, std::move(den), {"xi", "eta", "nu", "m"});
  return build_sl2(std::move(ctx), Poly::variable(4, 2), Poly::variable(4, 3),
                   r, d, delta);
}

bool sl2_relations_ok(const Sl2Ops& s) {
  auto br = [](const PolyDiffOp& a, const PolyDiffOp& b) {
    return commutator(a, b);
  };
  bool ok = br(s.H, s.E) == s.E.scaled(Scalar(2)) &&
            br(s.H, s.F) == s.F.scaled(Scalar(-2)) && br(s.E, s.F) == s.H;
  if (!s.complex_case) return ok;
  return ok && br(s.H, s.iE) == s.iE.scaled(Scalar(2)) &&
         br(s.H, s.iF) == s.iF.scaled(Scalar(-2)) &&
         br(s.iH, s.E) == s.iE.scaled(Scalar(2)) &&
         br(s.iH, s.iE) == s.E.scaled(Scalar(-2)) &&
         br(s.iH, s.F) == s.iF.scaled(Scalar(-2)) &&
         br(s.iH, s.iF) == s.F.scaled(Scalar(2)) &&
         br(s.iE, s.F) == s.iH && br(s.E, s.iF) == s.iH &&
         br(s.iE, s.iF) == s.H.scaled(Scalar(-1)) &&
         br(s.H, s.iH).is_zero() && br(s.E, s.iE).is_zero() &&
         br(s.F, s.iF).is_zero();
}

Sl2MatchReport keylemma_vs_sl2_match(int r, int d, int delta) {
  Sl2Ops s = sl2_model_ops_symbolic(r, d, delta);
  const DiffCtx& ctx = s.ctx;
  const int nv = ctx.nvars;
  Sl2MatchReport rep;
  const Scalar q2(canon((r * d - 2) * (r * d - 2), 4));  // ((rd-2)/2)^2
  const Poly xi = Poly::variable(nv, 0);
  if (delta == 1) {
    const Poly nu = Poly::variable(nv, 1);
    // Casimir scalar -(1/32)(4 nu^2 - q^2); the radial identity carries it
    // with weight eight over xi.
    Poly cas = (nu * nu).scaled(Scalar(4)) - Poly::constant(nv, q2);
    cas = cas.scaled(-Scalar(canon(1, 32)));
    PolyDiffOp radial(ctx);
    radial.add_term(Exps{2}, {xi, 0});
    radial.add_term(Exps{1},
                    {Poly::constant(nv, Scalar(canon(r * d, 2))), 0});
    radial.add_term(Exps{0}, {cas.scaled(Scalar(8)), 1});
    rep.ok = (radial == s.E.scaled(Scalar::i()));
    if (!rep.ok) rep.difference = (radial - s.E.scaled(Scalar::i())).str();
    return rep;
  }
  const Poly eta = Poly::variable(nv, 1);
  const Poly nu = Poly::variable(nv, 2);
  const Poly m = Poly::variable(nv, 3);
  // Casimir scalars -(1/8)(nu^2 + m^2 - q^2) and -(1/4) i m nu.
  Poly cas = (nu * nu + m * m - Poly::constant(nv, q2))
                 .scaled(-Scalar(canon(1, 8)));
  Poly casi = (m * nu).scaled(-Scalar::i() * Scalar(canon(1, 4)));
  PolyDiffOp re(ctx);
  re.add_term(Exps{2, 0}, {xi, 0});
  re.add_term(Exps{0, 2}, {xi.scaled(Scalar(-1)), 0});
  re.add_term(Exps{1, 1}, {eta.scaled(Scalar(2)), 0});
  re.add_term(Exps{1, 0}, {Poly::constant(nv, Scalar(r * d)), 0});
  re.add_term(Exps{0, 0},
              {cas.scaled(Scalar(8)) * xi - casi.scaled(Scalar(8)) * eta, 1});
  PolyDiffOp rie(ctx);
  rie.add_term(Exps{1, 1}, {xi.scaled(Scalar(2)), 0});
  rie.add_term(Exps{2, 0}, {eta.scaled(Scalar(-1)), 0});
  rie.add_term(Exps{0, 2}, {eta, 0});
  rie.add_term(Exps{0, 1}, {Poly::constant(nv, Scalar(r * d)), 0});
  rie.add_term(Exps{0, 0},
               {cas.scaled(Scalar(8)) * eta + casi.scaled(Scalar(8)) * xi, 1});
  bool ok_e = (re == s.E.scaled(Scalar::i()));
  bool ok_ie = (rie == s.iE.scaled(Scalar::i()));
  rep.ok = ok_e && ok_ie;
  if (!ok_e)
    rep.difference = (re - s.E.scaled(Scalar::i())).str();
  else if (!ok_ie)
    rep.difference = (rie - s.iE.scaled(Scalar::i())).str();
  return rep;
}

}  // namespace jconf
