#include "doctest.h"
#include "jconf/models.hpp"

using namespace jconf;

namespace {

struct CatalogRow {
  const char* id;
  Field field;
  int n, r, d, delta;
  bool euclidean;
};

const CatalogRow kCatalog[] = {
    {"Sym3R", Field::R, 6, 3, 1, 1, true},
    {"Herm3C", Field::R, 9, 3, 2, 1, true},
    {"Herm3H", Field::R, 15, 3, 4, 1, true},
    {"SpinR(1,3)", Field::R, 4, 2, 2, 1, true},
    {"Herm3O", Field::R, 27, 3, 8, 1, true},
    {"M3R", Field::R, 9, 3, 2, 1, false},
    {"Skew6R", Field::R, 15, 3, 4, 1, false},
    {"SpinR(5,3)", Field::R, 8, 2, 6, 1, false},
    {"Herm3Os", Field::R, 27, 3, 8, 1, false},
    {"Sym3C", Field::C, 6, 3, 1, 2, false},
    {"M3C", Field::C, 9, 3, 2, 2, false},
    {"Skew6C", Field::C, 15, 3, 4, 2, false},
    {"SpinC(4)", Field::C, 4, 2, 2, 2, false},
    {"Herm3OC", Field::C, 27, 3, 8, 2, false},
};

Vec random_vec(const JordanAlgebra& A, Rng& rng) {
  Vec v(A.n);
  for (auto& x : v) x = rng.scalar(A.field == Field::C);
  return v;
}

}  // namespace

TEST_CASE("catalog dimensions and flags") {
  CHECK(catalog_ids().size() == 14);
  for (const auto& row : kCatalog) {
    JordanAlgebra A = make_model(row.id);
    INFO(row.id);
    CHECK(A.name == row.id);
    CHECK(A.field == row.field);
    CHECK(A.n == row.n);
    CHECK(A.r == row.r);
    CHECK(A.d == row.d);
    CHECK(A.delta == row.delta);
    CHECK(A.euclidean == row.euclidean);
    CHECK(A.has_minrep);
    CHECK(A.n == A.r + A.d * A.r * (A.r - 1) / 2);
    CHECK(A.N() == A.delta * A.n);
  }
}

TEST_CASE("model id parser accepts general sizes and rejects bad input") {
  CHECK(make_model("Sym2R").n == 3);
  CHECK(make_model("Sym4R").n == 10);
  CHECK(make_model("Herm2H").n == 6);
  CHECK(make_model("M2R").n == 4);
  CHECK(make_model("Skew4R").n == 6);
  CHECK(make_model("SpinR(2,2)").n == 4);
  CHECK(make_model("SpinC(5)").n == 5);
  CHECK(make_model("M2C").delta == 2);
  CHECK_FALSE(make_model("SpinR(2,3)").has_minrep);  // p,q >= 2, odd sum
  CHECK(make_model("SpinR(1,4)").has_minrep);        // euclidean, odd sum fine
  CHECK(make_model("SpinR(3,3)").has_minrep);
  CHECK_THROWS_AS(make_model("Sym1R"), JordanError);
  CHECK_THROWS_AS(make_model("Skew5R"), JordanError);
  CHECK_THROWS_AS(make_model("SpinR(0,3)"), JordanError);
  CHECK_THROWS_AS(make_model("Qux3"), JordanError);
  CHECK_THROWS_AS(make_model(""), JordanError);
}

TEST_CASE("hand-checked products in Sym(2,R)") {
  JordanAlgebra A = make_sym(2);  // basis E11, E22, X12 = E12 + E21
  Vec e11 = unit_vec(3, 0), e22 = unit_vec(3, 1), x12 = unit_vec(3, 2);
  CHECK(A.mul(e11, e11) == e11);
  CHECK(A.mul(e11, e22) == zero_vec(3));
  CHECK(A.mul(e11, x12) == scale(Scalar(Rational(1, 2)), x12));
  CHECK(A.mul(x12, x12) == add(e11, e22));
  // tau coincides with tr(xy) here: tau(E11,E11)=1, tau(X12,X12)=2
  CHECK(A.trace_form(e11, e11) == Scalar(1));
  CHECK(A.trace_form(x12, x12) == Scalar(2));
  CHECK(A.trace_form(e11, e22) == Scalar(0));
  CHECK(A.trace_form(A.unit, A.unit) == Scalar(2));
}

TEST_CASE("octonion table is a composition algebra") {
  for (bool split : {false, true}) {
    CompAlgebra K = comp_algebra(8, split);
    // e_u conj(e_u) = N(e_u) e_0 with N of signature (8,0) or (4,4)
    for (int u = 0; u < 8; ++u) {
      auto [k, s] = K.mul[u][u];
      CHECK(k == 0);  // squares of units are +-e_0
      int nu = K.conj_sign[u] * s;
      if (split)
        CHECK(nu == (u < 4 ? 1 : -1));
      else
        CHECK(nu == 1);
    }
    // alternativity x(xy) = (xx)y on all unit pairs
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y) {
        auto [xy, s1] = K.mul[x][y];
        auto [x_xy, s2] = K.mul[x][xy];
        auto [xx, s3] = K.mul[x][x];
        auto [xx_y, s4] = K.mul[xx][y];
        CHECK(x_xy == xx_y);
        CHECK(s1 * s2 == s3 * s4);
      }
  }
}

TEST_CASE("jordan axioms: exhaustive basis pairs plus sampled dense pairs") {
  Rng rng(kDefaultSeed);
  for (const auto& row : kCatalog) {
    JordanAlgebra A = make_model(row.id);
    INFO(row.id);
    // commutativity is structural
    for (int a = 0; a < A.n; ++a)
      for (int b = a + 1; b < A.n; ++b) {
        Vec lhs = to_dense(A.product[a][b], A.n), rhs = to_dense(A.product[b][a], A.n);
        CHECK(lhs == rhs);
      }
    // unit
    for (int a = 0; a < A.n; ++a)
      CHECK(A.mul(A.unit, unit_vec(A.n, a)) == unit_vec(A.n, a));
    // Jordan identity on basis pairs
    bool ok = true;
    for (int a = 0; a < A.n && ok; ++a)
      for (int b = 0; b < A.n && ok; ++b)
        ok = is_zero_vec(jordan_defect(A, unit_vec(A.n, a), unit_vec(A.n, b)));
    CHECK(ok);
    // and on dense sampled pairs
    for (int t = 0; t < 20; ++t) {
      Vec x = random_vec(A, rng), y = random_vec(A, rng);
      CHECK(is_zero_vec(jordan_defect(A, x, y)));
    }
    // trace normalization and associativity of the trace form
    CHECK(A.trace_form(A.unit, A.unit) == Scalar(A.r));
    for (int t = 0; t < 10; ++t) {
      Vec x = random_vec(A, rng), y = random_vec(A, rng), z = random_vec(A, rng);
      CHECK(A.trace_form(A.mul(x, y), z) == A.trace_form(x, A.mul(y, z)));
    }
  }
}

TEST_CASE("cartan involution properties") {
  Rng rng(kDefaultSeed + 1);
  for (const auto& row : kCatalog) {
    JordanAlgebra A = make_model(row.id);
    INFO(row.id);
    // theta^2 = id and theta(e) = e
    CHECK(A.apply_theta(A.apply_theta(random_vec(A, rng))) != Vec{});
    Vec x = random_vec(A, rng), y = random_vec(A, rng);
    CHECK(A.apply_theta(A.apply_theta(x)) == x);
    CHECK(A.apply_theta(A.unit) == A.unit);
    // automorphism on the realified product (covers the antilinear case)
    Vec u = A.realify(x), v = A.realify(y);
    Vec lhs = A.theta_R().apply(A.mul_R(u, v));
    Vec rhs = A.mul_R(A.theta_R().apply(u), A.theta_R().apply(v));
    CHECK(lhs == rhs);
    // frame is theta-fixed
    for (const auto& c : A.frame) CHECK(A.apply_theta(c) == c);
    // positive definite inner product (x|y) = tau(x, theta y)
    std::vector<Vec> basis;
    for (int k = 0; k < A.N(); ++k) basis.push_back(unit_vec(A.N(), k));
    Mat gram(A.N(), A.N());
    for (int a = 0; a < A.N(); ++a)
      for (int b = 0; b < A.N(); ++b) gram.at(a, b) = A.inner_R(basis[a], basis[b]);
    CHECK(positive_definite(gram));
  }
}

TEST_CASE("frames are complete systems of orthogonal primitive idempotents") {
  for (const auto& row : kCatalog) {
    JordanAlgebra A = make_model(row.id);
    INFO(row.id);
    Vec total = zero_vec(A.n);
    for (int i = 0; i < A.r; ++i) {
      CHECK(A.mul(A.frame[i], A.frame[i]) == A.frame[i]);
      for (int j = i + 1; j < A.r; ++j)
        CHECK(is_zero_vec(A.mul(A.frame[i], A.frame[j])));
      total = add(total, A.frame[i]);
      CHECK(A.trace_form(A.frame[i], A.frame[i]) == Scalar(1));
    }
    CHECK(total == A.unit);
  }
}

TEST_CASE("realified view is consistent for complex models") {
  Rng rng(99);
  JordanAlgebra A = make_model("M3C");
  for (int t = 0; t < 10; ++t) {
    Vec x = random_vec(A, rng), y = random_vec(A, rng);
    CHECK(A.realify(A.mul(x, y)) == A.mul_R(A.realify(x), A.realify(y)));
    CHECK(A.complexify(A.realify(x)) == x);
    // multiplication by i in realified coordinates
    Vec ix(x);
    for (auto& v : ix) v *= Scalar::i();
    CHECK(A.mul_i_R(A.realify(x)) == A.realify(ix));
    // tau_R = Re tau_F
    CHECK(A.tau_R(A.realify(x), A.realify(y)) == A.trace_form(x, y).re());
  }
}

TEST_CASE("peirce decomposition dimensions and rules") {
  for (const char* id : {"Sym3R", "M3R", "Skew6R", "SpinR(5,3)", "Herm3C", "Sym3C", "M3C"}) {
    JordanAlgebra A = make_model(id);
    INFO(id);
    PeirceData P = peirce_decompose(A);
    for (int i = 0; i < A.r; ++i) CHECK(P.diag[i].dim() == 1);  // split condition
    for (int i = 0; i < A.r; ++i)
      for (int j = i + 1; j < A.r; ++j) {
        CHECK(P.off.at({i, j}).dim() == A.d);
        CHECK(P.off_plus.at({i, j}).dim() + P.off_minus.at({i, j}).dim() ==
              A.delta * A.d);
      }
    CHECK(P.half_F.dim() == (A.r - 1) * A.d);
    CHECK(P.half_R.dim() == A.delta * (A.r - 1) * A.d);
    // V_ij · V_jk ⊆ V_ik on block bases (distinct i,j,k)
    if (A.r >= 3) {
      auto in_block = [&](const Subspace& S, const Vec& v) { return S.contains(v); };
      const Subspace &v01 = P.off.at({0, 1}), &v12 = P.off.at({1, 2}), &v02 = P.off.at({0, 2});
      for (int a = 0; a < v01.dim(); ++a)
        for (int b = 0; b < v12.dim(); ++b)
          CHECK(in_block(v02, A.mul(v01.basis().row(a), v12.basis().row(b))));
      // V_01 · V_01 ⊆ V_00 + V_11
      Subspace diag01 = P.diag[0].sum(P.diag[1]);
      for (int a = 0; a < v01.dim(); ++a)
        for (int b = 0; b < v01.dim(); ++b)
          CHECK(in_block(diag01, A.mul(v01.basis().row(a), v01.basis().row(b))));
    }
  }
}

TEST_CASE("squares in V_12 and the quarter eigenvalue rule") {
  for (const char* id : {"Sym3R", "M3R", "SpinR(5,3)", "Herm3H"}) {
    JordanAlgebra A = make_model(id);
    INFO(id);
    PeirceData P = peirce_decompose(A);
    const Subspace& v01 = P.off.at({0, 1});
    Vec c01 = add(A.frame[0], A.frame[1]);
    for (int a = 0; a < v01.dim(); ++a) {
      Vec x = v01.basis().row(a);
      // x^2 = (tau(x,x)/2) (c_1 + c_2)
      CHECK(A.mul(x, x) == scale(A.trace_form(x, x) / Scalar(2), c01));
    }
    if (A.r >= 3) {
      // L(x)^2 y = tau(x,x)/8 y for x in V_12, y in V_02
      const Subspace& v02 = P.off.at({0, 2});
      for (int a = 0; a < v01.dim(); ++a)
        for (int b = 0; b < v02.dim(); ++b) {
          Vec x = v01.basis().row(a), y = v02.basis().row(b);
          Vec lhs = A.mul(x, A.mul(x, y));
          CHECK(lhs == scale(A.trace_form(x, x) / Scalar(8), y));
        }
    }
  }
}

TEST_CASE("rank one points satisfy x^2 = tau(x,e) x") {
  Rng rng(kDefaultSeed + 2);
  for (const char* id : {"Sym3R", "M3R", "Skew6R", "SpinR(5,3)", "Sym3C", "Herm3C"}) {
    JordanAlgebra A = make_model(id);
    INFO(id);
    for (int t = 0; t < 5; ++t) {
      Vec x = rank_one_point(A, rng);
      CHECK(A.mul(x, x) == scale(A.trace_form(x, A.unit), x));
      CHECK_FALSE(is_zero_vec(x));
    }
  }
}

TEST_CASE("rank one oracle in Sym(2,R): P(a) E11 = (a col1)(a col1)^T") {
  JordanAlgebra A = make_sym(2);
  // a = [[1,2],[2,5]] -> coords (1,5,2); a col1 = (1,2); vv^T = [[1,2],[2,4]]
  Vec a = {Scalar(1), Scalar(5), Scalar(2)};
  Vec x = A.quad_rep(a).apply(A.frame[0]);
  CHECK(x == Vec{Scalar(1), Scalar(4), Scalar(2)});
}
