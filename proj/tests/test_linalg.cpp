#include "doctest.h"
#include "jconf/linalg.hpp"
#include "jconf/rng.hpp"

using namespace jconf;

namespace {
Mat random_mat(Rng& rng, int r, int c, bool complex = false) {
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rng.scalar(complex);
  return m;
}
}  // namespace

TEST_CASE("rref produces canonical form") {
  Mat m(3, 4);
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = Scalar(vals[i][j]);
  auto piv = rref(m);
  CHECK(piv == std::vector<int>{0, 1});
  CHECK(m.rows() == 2);
  CHECK(m.at(0, 0) == Scalar(1));
  CHECK(m.at(0, 1) == Scalar(0));
  CHECK(m.at(1, 1) == Scalar(1));
}

TEST_CASE("kernel, inverse, solve, determinant agree") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_mat(rng, 5, 5, t % 2 == 1);
    Scalar det = determinant(m);
    if (det.is_zero()) {
      Mat k = kernel_basis(m);
      CHECK(k.rows() > 0);
      for (int i = 0; i < k.rows(); ++i) CHECK(is_zero_vec(m.apply(k.row(i))));
      continue;
    }
    Mat mi = inverse(m);
    CHECK(m * mi == Mat::identity(5));
    Vec b(5);
    for (auto& x : b) x = rng.scalar(false);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("inconsistent systems report no solution") {
  Mat m(2, 2);
  m.at(0, 0) = Scalar(1);
  m.at(1, 0) = Scalar(1);
  Vec b = {Scalar(1), Scalar(2)};
  CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("subspace canonical equality and operations") {
  // span{(1,0,1),(0,1,1)} == span{(1,1,2),(1,-1,0)}
  Subspace a = Subspace::span_rows({{Scalar(1), Scalar(0), Scalar(1)},
                                    {Scalar(0), Scalar(1), Scalar(1)}});
  Subspace b = Subspace::span_rows({{Scalar(1), Scalar(1), Scalar(2)},
                                    {Scalar(1), Scalar(-1), Scalar(0)}});
  CHECK(a == b);
  CHECK(a.contains(Vec{Scalar(2), Scalar(3), Scalar(5)}));
  CHECK_FALSE(a.contains(Vec{Scalar(0), Scalar(0), Scalar(1)}));

  Subspace c = Subspace::span_rows({{Scalar(1), Scalar(0), Scalar(0)}});
  Subspace sum = a.sum(c);
  CHECK(sum.dim() == 3);
  Subspace inter = a.intersect(c);
  CHECK(inter.dim() == 0);

  Subspace d = Subspace::span_rows({{Scalar(1), Scalar(0), Scalar(1)},
                                    {Scalar(1), Scalar(1), Scalar(0)}});
  Subspace ad = a.intersect(d);
  CHECK(ad.dim() == 1);
  CHECK(a.contains(ad));
  CHECK(d.contains(ad));

  Vec coords = a.coordinates(Vec{Scalar(2), Scalar(3), Scalar(5)});
  CHECK(coords == Vec{Scalar(2), Scalar(3)});
  CHECK_THROWS_AS(a.coordinates(Vec{Scalar(0), Scalar(0), Scalar(1)}), LinalgError);
}

TEST_CASE("intersection and sum of random subspaces satisfy dimension formula") {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    Subspace a = Subspace::span(random_mat(rng, 3, 6));
    Subspace b = Subspace::span(random_mat(rng, 3, 6));
    Subspace s = a.sum(b), i = a.intersect(b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));
  }
}

TEST_CASE("definiteness via leading minors") {
  Mat g(2, 2);
  g.at(0, 0) = Scalar(2);
  g.at(0, 1) = g.at(1, 0) = Scalar(1);
  g.at(1, 1) = Scalar(2);
  CHECK(positive_definite(g));
  CHECK_FALSE(negative_definite(g));
  Mat h = g.scaled(Scalar(-1));
  CHECK(negative_definite(h));
  Mat ind(2, 2);
  ind.at(0, 0) = Scalar(1);
  ind.at(1, 1) = Scalar(-1);
  CHECK_FALSE(positive_definite(ind));
  CHECK_FALSE(negative_definite(ind));
}

TEST_CASE("orthogonal basis against an indefinite form") {
  // Hyperbolic plane: all basis vectors isotropic; repair path must trigger.
  Mat g(2, 2);
  g.at(0, 1) = g.at(1, 0) = Scalar(1);
  BilinearForm form = [&](const Vec& x, const Vec& y) {
    Scalar t;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) t += x[i] * g.at(i, j) * y[j];
    return t;
  };
  auto ob = orthogonal_basis({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}, form);
  REQUIRE(ob.size() == 2);
  CHECK(form(ob[0], ob[1]).is_zero());
  CHECK_FALSE(form(ob[0], ob[0]).is_zero());
  CHECK_FALSE(form(ob[1], ob[1]).is_zero());
}

TEST_CASE("sparse helpers") {
  Vec v = {Scalar(0), Scalar(2), Scalar(0), Scalar(-1)};
  SparseVec s = to_sparse(v);
  CHECK(s.size() == 2);
  CHECK(to_dense(s, 4) == v);
  SparseVec sum = sparse_add(s, sparse_scale(Scalar(-1), s));
  CHECK(sum.empty());
  Vec acc(4);
  sparse_accumulate(acc, Scalar(3), s);
  CHECK(acc[1] == Scalar(6));
  CHECK(acc[3] == Scalar(-3));
}

TEST_CASE("clear_denominators yields primitive integer vectors") {
  Vec v = {Scalar(Rational(1, 2)), Scalar(Rational(3, 4)), Scalar(0)};
  clear_denominators(v);
  CHECK(v == Vec{Scalar(2), Scalar(3), Scalar(0)});
  Vec w = {Scalar(4), Scalar(6)};
  clear_denominators(w);
  CHECK(w == Vec{Scalar(2), Scalar(3)});
}
