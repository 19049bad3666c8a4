#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jconf/linalg.hpp"
#include "jconf/scalar.hpp"

namespace jconf {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent vector; one entry per variable.
using Exps = std::vector<int>;

// Sparse multivariate polynomial with Scalar coefficients.
struct Poly {
  int nvars = 0;
  std::map<Exps, Scalar> terms;  // only nonzero coefficients are stored

  Poly() = default;
  explicit Poly(int nv) : nvars(nv) {}

  static Poly constant(int nvars, const Scalar& c);
  static Poly variable(int nvars, int k);
  // Linear form sum_k w[k] x_k.
  static Poly linear(int nvars, const Vec& w);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // coefficient of the empty monomial
  int degree() const;             // total degree; -1 for the zero polynomial

  void add_term(const Exps& e, const Scalar& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& t) const;
  Poly diff(int var) const;
  Scalar eval(const Vec& point) const;
  // Substitute a value for one variable (the variable keeps its slot).
  Poly substituted(int var, const Scalar& value) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names) const;
};

// All exponent vectors of total degree <= deg, graded lexicographic.
std::vector<Exps> monomials_up_to(int nvars, int deg);

// Quotient f/g when g divides f exactly, std::nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

// num / den^pow for a fixed denominator polynomial supplied by the context.
struct LocalizedPoly {
  Poly num;
  int pow = 0;

  LocalizedPoly() = default;
  LocalizedPoly(Poly n, int p) : num(std::move(n)), pow(p) {}

  bool is_zero() const { return num.is_zero(); }
};

LocalizedPoly loc_normalize(LocalizedPoly a, const Poly& den);
LocalizedPoly loc_add(const LocalizedPoly& a, const LocalizedPoly& b,
                      const Poly& den);
LocalizedPoly loc_sub(const LocalizedPoly& a, const LocalizedPoly& b,
                      const Poly& den);
LocalizedPoly loc_mul(const LocalizedPoly& a, const LocalizedPoly& b,
                      const Poly& den);
LocalizedPoly loc_scale(const Scalar& t, const LocalizedPoly& a);
LocalizedPoly loc_diff(const LocalizedPoly& a, int var, const Poly& den);
bool loc_eq(const LocalizedPoly& a, const LocalizedPoly& b, const Poly& den);

// Variable layout for an operator algebra: the first nderiv variables are
// differentiation variables, the rest are inert parameters. Coefficients may
// be localized at powers of denom (denom = 1 disables localization).
struct DiffCtx {
  int nvars = 0;
  int nderiv = 0;
  Poly denom;
  std::vector<std::string> names;

  friend bool operator==(const DiffCtx& a, const DiffCtx& b) {
    return a.nvars == b.nvars && a.nderiv == b.nderiv && a.denom == b.denom;
  }
};

DiffCtx make_diff_ctx(int nvars, int nderiv,
                      std::vector<std::string> names = {});
DiffCtx make_diff_ctx(int nvars, int nderiv, Poly denom,
                      std::vector<std::string> names = {});

// Differential operator sum_a coeff_a(x) d^a with polynomial (optionally
// localized) coefficients; multi-indices run over the nderiv variables.
class PolyDiffOp {
 public:
  PolyDiffOp() = default;
  explicit PolyDiffOp(DiffCtx ctx) : ctx_(std::move(ctx)) {}

  static PolyDiffOp mult(const DiffCtx& ctx, const Poly& p);
  static PolyDiffOp mult(const DiffCtx& ctx, const LocalizedPoly& p);
  static PolyDiffOp partial(const DiffCtx& ctx, int var);
  // Directional derivative sum_k w[k] d_k over the derivative variables.
  static PolyDiffOp directional(const DiffCtx& ctx, const Vec& w);

  const DiffCtx& ctx() const { return ctx_; }
  const std::map<Exps, LocalizedPoly>& terms() const { return terms_; }

  void add_term(const Exps& didx, const LocalizedPoly& coeff);
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  PolyDiffOp& operator+=(const PolyDiffOp& o);
  PolyDiffOp& operator-=(const PolyDiffOp& o);
  friend PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp& b) {
    return a += b;
  }
  friend PolyDiffOp operator-(PolyDiffOp a, const PolyDiffOp& b) {
    return a -= b;
  }
  PolyDiffOp scaled(const Scalar& t) const;

  LocalizedPoly apply(const Poly& f) const;
  // Evaluate every coefficient at the given point (requires no localization).
  PolyDiffOp at_point(const Vec& point) const;

  friend bool operator==(const PolyDiffOp& a, const PolyDiffOp& b);
  friend bool operator!=(const PolyDiffOp& a, const PolyDiffOp& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  DiffCtx ctx_;
  std::map<Exps, LocalizedPoly> terms_;
};

PolyDiffOp compose(const PolyDiffOp& a, const PolyDiffOp& b);  // a after b
PolyDiffOp commutator(const PolyDiffOp& a, const PolyDiffOp& b);

}  // namespace jconf
