#include "doctest.h"
#include "jconf/minrep.hpp"
#include "jconf/models.hpp"
#include "jconf/rng.hpp"

using namespace jconf;

namespace {

Vec random_real_vec(int N, Rng& rng) {
  Vec v;
  v.reserve(N);
  for (int k = 0; k < N; ++k) v.push_back(rng.real_scalar());
  return v;
}

// Generic structure-algebra element L(a) + [L(b), L(c)].
Mat random_str(const JordanAlgebra& V, Rng& rng) {
  const int N = V.N();
  return V.Lmat_R(random_real_vec(N, rng)) +
         commutator(V.Lmat_R(random_real_vec(N, rng)),
                    V.Lmat_R(random_real_vec(N, rng)));
}

CoElement random_co(const JordanAlgebra& V, Rng& rng) {
  CoElement X = co_zero(V);
  X.u = random_real_vec(V.N(), rng);
  X.T = random_str(V, rng);
  X.v = random_real_vec(V.N(), rng);
  return X;
}

std::vector<Vec> cone_points(const JordanAlgebra& V, Rng& rng, int count) {
  std::vector<Vec> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k)
    pts.push_back(V.realify(rank_one_point(V, rng)));
  return pts;
}

}  // namespace

TEST_CASE("action formulas on Sym(2)") {
  JordanAlgebra V = make_model("Sym2R");
  MinRepAction act(V);
  const int N = V.N();
  Poly one = Poly::constant(N, Scalar(1));

  // the (0,0,v) direction is multiplication by -i tau(x,v)
  PolyDiffOp mv = act.mult_op(V.unit_R);
  Poly lin = Poly::linear(N, V.tau_R_gram().apply(V.unit_R));
  CHECK(mv.apply(one).num == lin.scaled(-Scalar::i()));
  CHECK(act.dpi(co_F(V)) == mv);

  // the structure direction carries the character -rd/(4n) tr T
  PolyDiffOp le = act.str_op(V.Lmat_R(V.unit_R));
  Rational quarter(V.r * V.d, 4);
  quarter.canonicalize();
  CHECK(le.apply(one).num == Poly::constant(N, -Scalar(quarter)));
  PolyDiffOp h = act.dpi(co_H(V));
  Rational half_rd(V.r * V.d, 2);
  half_rd.canonicalize();
  CHECK(h.apply(one).num == Poly::constant(N, -Scalar(half_rd)));

  // the second-order direction kills constants and has order two
  PolyDiffOp e = act.dpi(co_E(V));
  CHECK(e.apply(one).is_zero());
  CHECK(e.order() == 2);

  // linearity of the assignment X -> dpi(X)
  Rng rng(5);
  CoElement X = random_co(V, rng), Y = random_co(V, rng);
  CoElement Z = co_zero(V);
  Z.u = add(scale(Scalar(3), X.u), Y.u);
  Z.T = X.T.scaled(Scalar(3)) + Y.T;
  Z.v = add(scale(Scalar(3), X.v), Y.v);
  CHECK(act.dpi(Z) == act.dpi(X).scaled(Scalar(3)) + act.dpi(Y));
}

TEST_CASE("Bessel contraction is independent of the basis") {
  for (const char* id : {"Sym2R", "M2R", "Sym2C"}) {
    CAPTURE(id);
    JordanAlgebra V = make_model(id);
    MinRepAction act(V);
    const int N = V.N();
    Rng rng(17);

    Vec u = random_real_vec(N, rng);
    PolyDiffOp direct = act.bessel_paired(u);

    // a permutation of the coordinate basis
    Mat perm(N, N);
    for (int k = 0; k < N; ++k) perm.at(k, (k + 1) % N) = Scalar(1);
    CHECK(act.bessel_paired_in_basis(u, perm) == direct);

    // a random invertible change of basis
    Mat M(N, N);
    do {
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) M.at(i, j) = rng.real_scalar();
    } while (determinant(M).is_zero());
    CHECK(act.bessel_paired_in_basis(u, M) == direct);
  }
}

TEST_CASE("Bessel components assemble the paired operator") {
  JordanAlgebra V = make_model("M2R");
  MinRepAction act(V);
  const int N = V.N();
  Rng rng(23);
  Vec u = random_real_vec(N, rng);
  PolyDiffOp sum(act.ctx());
  for (int g = 0; g < N; ++g) {
    Scalar c = -Scalar::i() * V.tau_R(unit_vec(N, g), u);
    if (c.is_zero()) continue;
    sum += act.bessel_component(g).scaled(c);
  }
  CHECK(sum == act.bessel_paired(u));
}

TEST_CASE("commutation relations hold as ambient operator identities") {
  for (const char* id : {"Sym2R", "M2R", "SpinR(3,2)", "Sym2C"}) {
    CAPTURE(id);
    JordanAlgebra V = make_model(id);
    MinRepAction act(V);
    Rng rng(31);

    // generic pairs across all three components at once
    for (int trial = 0; trial < 3; ++trial) {
      CoElement X = random_co(V, rng);
      CoElement Y = random_co(V, rng);
      CHECK(rep_defect(act, X, Y).is_zero());
    }

    // the distinguished sl2 triple
    CoElement E = co_E(V), H = co_H(V), F = co_F(V);
    CHECK(commutator(act.dpi(H), act.dpi(E)) == act.dpi(E).scaled(Scalar(2)));
    CHECK(commutator(act.dpi(H), act.dpi(F)) == act.dpi(F).scaled(Scalar(-2)));
    CHECK(commutator(act.dpi(E), act.dpi(F)) == act.dpi(H));
  }
}

TEST_CASE("defect report covers monomials and cone points") {
  JordanAlgebra V = make_model("Sym2R");
  MinRepAction act(V);
  Rng rng(41);
  std::vector<Vec> pts = cone_points(V, rng, 20);
  RepCheckReport rep =
      rep_relation_check(act, co_E(V), co_F(V), 3, pts);
  CHECK(rep.ambient_zero);
  CHECK(rep.tangential_zero);
  CHECK(rep.points == 20);
  CHECK(rep.monomials == 20);  // C(3+3,3) exponent vectors in 3 variables
  CHECK(rep.counterexample.empty());

  // a deliberately wrong bracket target is flagged with a counterexample
  RepCheckReport bad =
      rep_relation_check(act, co_E(V), co_H(V), 2, pts);
  CHECK(bad.ambient_zero);
  RepCheckReport wrong =
      rep_relation_check(act, co_E(V), co_zero(V), 2, pts);
  CHECK(wrong.ambient_zero);  // [dpi(X), 0] = 0 = dpi([X, 0])
}

TEST_CASE("the action is tangential to the rank-one cone") {
  for (const char* id : {"Sym2R", "M2R", "M3R", "SpinR(3,2)", "Sym2C"}) {
    CAPTURE(id);
    JordanAlgebra V = make_model(id);
    MinRepAction act(V);
    const int N = V.N();
    Rng rng(11);
    std::vector<Vec> pts = cone_points(V, rng, 20);
    Vec probe = V.realify(random_invertible(V, rng));
    Vec w = random_real_vec(N, rng);

    // the quadratic cut function vanishes on the cone and only there
    Poly q = cone_ideal_poly(act, w);
    for (const Vec& pt : pts) CHECK(q.eval(pt).is_zero());
    REQUIRE(!q.eval(probe).is_zero());

    // cubic multiples stay in the vanishing ideal under the action, and at
    // least one has an image that survives off the cone (negative control)
    bool witness = false;
    for (int t = 0; t < N; ++t) {
      Poly f = Poly::variable(N, t) * q;
      TangentialityReport rep =
          tangentiality_check(act, co_E(V), f, pts, probe);
      CHECK(rep.cut_zero_on_cone);
      if (!rep.cut_nonzero_at_probe) continue;  // factor vanished at probe
      CAPTURE(t);
      CAPTURE(rep.detail);
      CHECK(rep.image_zero_on_cone);
      witness = witness || rep.ok();
    }
    CHECK(witness);
  }
}

TEST_CASE("key identities at the base idempotent") {
  for (const char* id :
       {"Sym2R", "M2R", "SpinR(3,2)", "Sym2C", "M3R", "Herm3Os"}) {
    CAPTURE(id);
    JordanAlgebra V = make_model(id);
    KeyLemmaReport rep = key_lemma_at_c(V, 3);
    CAPTURE(rep.mismatch);
    CHECK(rep.bessel_at_c);
    CHECK(rep.casimir_at_c);
    CHECK(rep.assembled);
    CHECK(rep.complex_pair);
    if (V.N() <= 12) CHECK(rep.composition_checked);
    CHECK(rep.monomials > 0);
  }
}

TEST_CASE("principal series generators satisfy the sl2 relations") {
  // symbolic in nu (and m): one pass covers every parameter value
  CHECK(sl2_relations_ok(sl2_model_ops_symbolic(3, 2, 1)));
  CHECK(sl2_relations_ok(sl2_model_ops_symbolic(3, 2, 2)));
  CHECK(sl2_relations_ok(sl2_model_ops_symbolic(3, 8, 1)));
  CHECK(sl2_relations_ok(sl2_model_ops_symbolic(2, 4, 2)));

  // rational specializations
  CHECK(sl2_relations_ok(sl2_model_ops(0, Scalar(0), 4, 1, 1)));
  CHECK(sl2_relations_ok(sl2_model_ops(3, Scalar(Rational(5, 4)), 3, 2, 2)));

  // at nu = (rd-2)/4 the 1/xi potential of the real-case generator vanishes
  Sl2Ops flat = sl2_model_ops(0, Scalar(Rational(1, 2)), 4, 1, 1);
  CHECK(sl2_relations_ok(flat));
  CHECK(flat.E.terms().size() == 2);

  // at m = 0 the complex-case potentials lose their cross terms
  Sl2Ops plain = sl2_model_ops(0, Scalar(Rational(1, 3)), 3, 2, 2);
  CHECK(sl2_relations_ok(plain));
  const LocalizedPoly& pe = plain.E.terms().at(Exps{0, 0});
  const LocalizedPoly& pie = plain.iE.terms().at(Exps{0, 0});
  CHECK(pe.num.substituted(0, Scalar(0)).is_zero());
  CHECK(pie.num.substituted(1, Scalar(0)).is_zero());
}

TEST_CASE("radial reduction matches the principal series") {
  for (const std::string& id : catalog_ids()) {
    JordanAlgebra V = make_model(id);
    CAPTURE(id);
    Sl2MatchReport rep = keylemma_vs_sl2_match(V.r, V.d, V.delta);
    CAPTURE(rep.difference);
    CHECK(rep.ok);
  }
}
