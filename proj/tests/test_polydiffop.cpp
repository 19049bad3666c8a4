#include "doctest.h"
#include "jconf/polydiffop.hpp"
#include "jconf/rng.hpp"

using namespace jconf;

namespace {

Poly mono(int nvars, const Exps& e, const Scalar& c = Scalar(1)) {
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

// Small random operator: order <= 2, coefficients of degree <= 2.
PolyDiffOp random_op(const DiffCtx& ctx, Rng& rng) {
  PolyDiffOp op(ctx);
  for (const Exps& didx : monomials_up_to(ctx.nderiv, 2)) {
    Poly coeff(ctx.nvars);
    for (const Exps& e : monomials_up_to(ctx.nvars, 2))
      if (rng.uniform(0, 3) == 0) coeff.add_term(e, rng.real_scalar());
    if (!coeff.is_zero()) op.add_term(didx, {coeff, 0});
  }
  return op;
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
  const int n = 2;
  Poly x = Poly::variable(n, 0);
  Poly y = Poly::variable(n, 1);

  Poly sq = (x + y) * (x + y);
  Poly expect(n);
  expect.add_term({2, 0}, Scalar(1));
  expect.add_term({1, 1}, Scalar(2));
  expect.add_term({0, 2}, Scalar(1));
  CHECK(sq == expect);
  CHECK(sq.degree() == 2);
  CHECK((x - y) * (x + y) == x * x - y * y);

  CHECK(sq.diff(0) == (x + y).scaled(Scalar(2)));
  CHECK(sq.eval({Scalar(3), Scalar(-1)}) == Scalar(4));
  CHECK(sq.substituted(1, Scalar(0)) == x * x);
  CHECK((sq - sq).is_zero());
  CHECK(Poly(n).degree() == -1);

  Poly c = Poly::constant(n, Scalar(5));
  CHECK(c.is_constant());
  CHECK(c.constant_value() == Scalar(5));
  CHECK(Poly::linear(n, {Scalar(2), Scalar(-3)}) ==
        x.scaled(Scalar(2)) - y.scaled(Scalar(3)));

  // coefficients that cancel are dropped from the term map
  Poly z = x;
  z.add_term({1, 0}, Scalar(-1));
  CHECK(z.is_zero());
  CHECK(z.terms.empty());
}

TEST_CASE("monomial enumeration and exact division") {
  CHECK(monomials_up_to(3, 2).size() == 10);
  CHECK(monomials_up_to(2, 3).size() == 10);
  CHECK(monomials_up_to(1, 4).size() == 5);
  CHECK(monomials_up_to(4, 0).size() == 1);

  // graded, duplicate-free
  std::vector<Exps> ms = monomials_up_to(3, 3);
  CHECK(ms.size() == 20);
  int last_total = 0;
  for (const Exps& e : ms) {
    int t = 0;
    for (int k : e) t += k;
    CHECK(t >= last_total);
    CHECK(t <= 3);
    last_total = t;
  }
  std::sort(ms.begin(), ms.end());
  CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());

  const int n = 2;
  Poly x = Poly::variable(n, 0);
  Poly y = Poly::variable(n, 1);
  auto q = divide_exact(x * x - y * y, x - y);
  REQUIRE(q.has_value());
  CHECK(*q == x + y);
  CHECK(!divide_exact(x * x + y, x - y).has_value());
  CHECK(!divide_exact(Poly::constant(n, Scalar(1)), x).has_value());
}

TEST_CASE("localized coefficients over a fixed denominator") {
  const int n = 1;
  Poly xi = Poly::variable(n, 0);
  Poly one = Poly::constant(n, Scalar(1));

  // 1/xi + (xi - 1)/xi^2 = (2 xi - 1)/xi^2
  LocalizedPoly a(one, 1);
  LocalizedPoly b(xi - one, 2);
  LocalizedPoly sum = loc_add(a, b, xi);
  CHECK(loc_eq(sum, {xi.scaled(Scalar(2)) - one, 2}, xi));

  // derivative of 1/xi is -1/xi^2
  CHECK(loc_eq(loc_diff(a, 0, xi), {one.scaled(Scalar(-1)), 2}, xi));

  // products multiply numerators and add powers
  CHECK(loc_eq(loc_mul(a, b, xi), {xi - one, 3}, xi));

  // normalization cancels common denominator factors
  CHECK(loc_eq(LocalizedPoly(xi * xi, 3), a, xi));
  LocalizedPoly canc = loc_normalize({xi * xi * xi, 2}, xi);
  CHECK(canc.pow == 0);
  CHECK(canc.num == xi);

  // constant denominators fold into the numerator
  Poly two = Poly::constant(n, Scalar(2));
  LocalizedPoly folded = loc_normalize({xi, 1}, two);
  CHECK(folded.pow == 0);
  CHECK(folded.num == xi.scaled(Scalar(Rational(1, 2))));
}

TEST_CASE("operator composition follows the Leibniz rule") {
  DiffCtx ctx = make_diff_ctx(1, 1, {"x"});
  Poly x = Poly::variable(1, 0);
  PolyDiffOp d = PolyDiffOp::partial(ctx, 0);
  PolyDiffOp mx = PolyDiffOp::mult(ctx, x);
  PolyDiffOp euler = compose(mx, d);  // x d/dx

  // [d, x] = 1 and [d, x d] = d
  CHECK(commutator(d, mx) ==
        PolyDiffOp::mult(ctx, Poly::constant(1, Scalar(1))));
  CHECK(commutator(d, euler) == d);

  // x d/dx rescales monomials by their degree
  Poly x3 = mono(1, {3});
  CHECK(euler.apply(x3).num == x3.scaled(Scalar(3)));
  CHECK(euler.apply(Poly::constant(1, Scalar(7))).is_zero());

  // composition is associative
  PolyDiffOp a = compose(mx, compose(mx, compose(d, d)));
  PolyDiffOp b = euler + PolyDiffOp::mult(ctx, Poly::constant(1, Scalar(1)));
  PolyDiffOp c = compose(d, d);
  CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));

  // order and scaling
  CHECK(a.order() == 2);
  CHECK(a.scaled(Scalar(-1)) + a == PolyDiffOp(ctx));
}

TEST_CASE("directional derivatives and pointwise freezing") {
  DiffCtx ctx = make_diff_ctx(2, 2, {"x", "y"});
  PolyDiffOp dir = PolyDiffOp::directional(ctx, {Scalar(1), Scalar(2)});
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  CHECK(dir.apply(x * x * y).num == (x * x + x * y).scaled(Scalar(2)));

  // freezing coefficients at a point turns x d/dy into 3 d/dy
  PolyDiffOp op(ctx);
  op.add_term({0, 1}, {x, 0});
  PolyDiffOp frozen = op.at_point({Scalar(3), Scalar(-2)});
  PolyDiffOp expect(ctx);
  expect.add_term({0, 1}, {Poly::constant(2, Scalar(3)), 0});
  CHECK(frozen == expect);
}

TEST_CASE("operator Jacobi identity on sampled triples") {
  DiffCtx ctx = make_diff_ctx(2, 2, {"x", "y"});
  Rng rng(2024);
  for (int trial = 0; trial < 6; ++trial) {
    PolyDiffOp a = random_op(ctx, rng);
    PolyDiffOp b = random_op(ctx, rng);
    PolyDiffOp c = random_op(ctx, rng);
    PolyDiffOp jac = commutator(commutator(a, b), c) +
                     commutator(commutator(b, c), a) +
                     commutator(commutator(c, a), b);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("localized operators compose like rational coefficients") {
  Poly xi = Poly::variable(1, 0);
  DiffCtx ctx = make_diff_ctx(1, 1, xi, {"xi"});
  PolyDiffOp d = PolyDiffOp::partial(ctx, 0);
  PolyDiffOp inv = PolyDiffOp::mult(ctx, LocalizedPoly(Poly::constant(1, Scalar(1)), 1));

  // [d, 1/xi] = -1/xi^2
  PolyDiffOp expect = PolyDiffOp::mult(
      ctx, LocalizedPoly(Poly::constant(1, Scalar(-1)), 2));
  CHECK(commutator(d, inv) == expect);

  // (1/xi) (xi d) = d after cancellation
  PolyDiffOp euler = compose(PolyDiffOp::mult(ctx, xi), d);
  CHECK(compose(inv, euler) == d);
}
