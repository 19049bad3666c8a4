#include "jconf/polydiffop.hpp"

#include <algorithm>

namespace jconf {

namespace {

int total_degree(const Exps& e) {
  int s = 0;
  for (int k : e) s += k;
  return s;
}

bool exps_divides(const Exps& a, const Exps& b) {  // a | b componentwise
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Exps exps_add(const Exps& a, const Exps& b) {
  Exps r(a);
  for (size_t k = 0; k < a.size(); ++k) r[k] += b[k];
  return r;
}

Exps exps_sub(const Exps& a, const Exps& b) {
  Exps r(a);
  for (size_t k = 0; k < a.size(); ++k) r[k] -= b[k];
  return r;
}

long binom(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

void check_same_vars(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars)
    throw PolyError("polynomials live in different variable spaces");
}

}  // namespace

Poly Poly::constant(int nvars, const Scalar& c) {
  Poly p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int k) {
  Poly p(nvars);
  Exps e(nvars, 0);
  e.at(k) = 1;
  p.add_term(e, Scalar(1));
  return p;
}

Poly Poly::linear(int nvars, const Vec& w) {
  Poly p(nvars);
  for (size_t k = 0; k < w.size(); ++k) {
    Exps e(nvars, 0);
    e.at(k) = 1;
    p.add_term(e, w[k]);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms.empty() ||
         (terms.size() == 1 && total_degree(terms.begin()->first) == 0);
}

Scalar Poly::constant_value() const {
  auto it = terms.find(Exps(nvars, 0));
  return it == terms.end() ? Scalar(0) : it->second;
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms) deg = std::max(deg, total_degree(e));
  return deg;
}

void Poly::add_term(const Exps& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (int(e.size()) != nvars) throw PolyError("exponent vector has wrong size");
  auto [it, fresh] = terms.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_vars(*this, o);
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_vars(*this, o);
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_vars(a, b);
  Poly r(a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) r.add_term(exps_add(ea, eb), ca * cb);
  return r;
}

Poly Poly::scaled(const Scalar& t) const {
  Poly r(nvars);
  if (t.is_zero()) return r;
  for (const auto& [e, c] : terms) r.terms.emplace(e, c * t);
  return r;
}

Poly Poly::diff(int var) const {
  Poly r(nvars);
  for (const auto& [e, c] : terms) {
    if (e[var] == 0) continue;
    Exps d(e);
    --d[var];
    r.add_term(d, c * Scalar(e[var]));
  }
  return r;
}

Scalar Poly::eval(const Vec& point) const {
  if (int(point.size()) != nvars)
    throw PolyError("evaluation point has wrong dimension");
  Scalar acc(0);
  for (const auto& [e, c] : terms) {
    Scalar t = c;
    for (int k = 0; k < nvars; ++k)
      for (int j = 0; j < e[k]; ++j) t *= point[k];
    acc += t;
  }
  return acc;
}

Poly Poly::substituted(int var, const Scalar& value) const {
  Poly r(nvars);
  for (const auto& [e, c] : terms) {
    Scalar t = c;
    for (int j = 0; j < e[var]; ++j) t *= value;
    Exps d(e);
    d[var] = 0;
    r.add_term(d, t);
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k < names.size() ? names[k] : "x" + std::to_string(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    out += "(" + c.str() + ")";
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

std::vector<Exps> monomials_up_to(int nvars, int deg) {
  std::vector<Exps> out;
  std::vector<Exps> level = {Exps(nvars, 0)};
  out.push_back(level[0]);
  for (int d = 1; d <= deg; ++d) {
    std::vector<Exps> next;
    for (const Exps& e : level) {
      // raise only at or after the last raised position to avoid duplicates
      int start = 0;
      for (int k = nvars - 1; k >= 0; --k)
        if (e[k] > 0) {
          start = k;
          break;
        }
      for (int k = start; k < nvars; ++k) {
        Exps f(e);
        ++f[k];
        next.push_back(f);
      }
    }
    for (const Exps& e : next) out.push_back(e);
    level = std::move(next);
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  check_same_vars(f, g);
  if (g.is_zero()) throw PolyError("division by the zero polynomial");
  Poly rem = f, quo(f.nvars);
  const auto& glead = *g.terms.rbegin();  // largest exponent in map order
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms.rbegin();
    if (!exps_divides(glead.first, rlead.first)) return std::nullopt;
    Exps shift = exps_sub(rlead.first, glead.first);
    Scalar c = rlead.second / glead.second;
    quo.add_term(shift, c);
    for (const auto& [e, gc] : g.terms)
      rem.add_term(exps_add(e, shift), -(c * gc));
  }
  return quo;
}

LocalizedPoly loc_normalize(LocalizedPoly a, const Poly& den) {
  if (a.num.is_zero()) return {Poly(a.num.nvars), 0};
  if (den.is_constant()) {
    // fold constant denominators into the numerator
    Scalar d = den.constant_value();
    for (int j = 0; j < a.pow; ++j) a.num = a.num.scaled(d.inv());
    a.pow = 0;
    return a;
  }
  while (a.pow > 0) {
    auto q = divide_exact(a.num, den);
    if (!q) break;
    a.num = std::move(*q);
    --a.pow;
  }
  return a;
}

LocalizedPoly loc_add(const LocalizedPoly& a, const LocalizedPoly& b,
                      const Poly& den) {
  LocalizedPoly r;
  r.pow = std::max(a.pow, b.pow);
  Poly an = a.num, bn = b.num;
  for (int j = a.pow; j < r.pow; ++j) an = an * den;
  for (int j = b.pow; j < r.pow; ++j) bn = bn * den;
  r.num = an + bn;
  return loc_normalize(std::move(r), den);
}

LocalizedPoly loc_sub(const LocalizedPoly& a, const LocalizedPoly& b,
                      const Poly& den) {
  return loc_add(a, loc_scale(Scalar(-1), b), den);
}

LocalizedPoly loc_mul(const LocalizedPoly& a, const LocalizedPoly& b,
                      const Poly& den) {
  return loc_normalize({a.num * b.num, a.pow + b.pow}, den);
}

LocalizedPoly loc_scale(const Scalar& t, const LocalizedPoly& a) {
  return {a.num.scaled(t), a.num.is_zero() || t.is_zero() ? 0 : a.pow};
}

LocalizedPoly loc_diff(const LocalizedPoly& a, int var, const Poly& den) {
  if (a.pow == 0) return {a.num.diff(var), 0};
  // d(num/den^p) = (num' den - p num den') / den^(p+1)
  Poly n = a.num.diff(var) * den - a.num.scaled(Scalar(a.pow)) * den.diff(var);
  return loc_normalize({std::move(n), a.pow + 1}, den);
}

bool loc_eq(const LocalizedPoly& a, const LocalizedPoly& b, const Poly& den) {
  return loc_sub(a, b, den).is_zero();
}

DiffCtx make_diff_ctx(int nvars, int nderiv, std::vector<std::string> names) {
  return make_diff_ctx(nvars, nderiv, Poly::constant(nvars, Scalar(1)),
                       std::move(names));
}

DiffCtx make_diff_ctx(int nvars, int nderiv, Poly denom,
                      std::vector<std::string> names) {
  if (nderiv < 0 || nderiv > nvars)
    throw PolyError("derivative variable count out of range");
  if (denom.nvars != nvars || denom.is_zero())
    throw PolyError("invalid localization denominator");
  DiffCtx ctx;
  ctx.nvars = nvars;
  ctx.nderiv = nderiv;
  ctx.denom = std::move(denom);
  ctx.names = std::move(names);
  return ctx;
}

PolyDiffOp PolyDiffOp::mult(const DiffCtx& ctx, const Poly& p) {
  return mult(ctx, LocalizedPoly{p, 0});
}

PolyDiffOp PolyDiffOp::mult(const DiffCtx& ctx, const LocalizedPoly& p) {
  PolyDiffOp op(ctx);
  op.add_term(Exps(ctx.nderiv, 0), p);
  return op;
}

PolyDiffOp PolyDiffOp::partial(const DiffCtx& ctx, int var) {
  if (var < 0 || var >= ctx.nderiv)
    throw PolyError("not a derivative variable");
  PolyDiffOp op(ctx);
  Exps e(ctx.nderiv, 0);
  e[var] = 1;
  op.add_term(e, {Poly::constant(ctx.nvars, Scalar(1)), 0});
  return op;
}

PolyDiffOp PolyDiffOp::directional(const DiffCtx& ctx, const Vec& w) {
  if (int(w.size()) != ctx.nderiv)
    throw PolyError("direction has wrong dimension");
  PolyDiffOp op(ctx);
  for (int k = 0; k < ctx.nderiv; ++k) {
    Exps e(ctx.nderiv, 0);
    e[k] = 1;
    op.add_term(e, {Poly::constant(ctx.nvars, w[k]), 0});
  }
  return op;
}

void PolyDiffOp::add_term(const Exps& didx, const LocalizedPoly& coeff) {
  if (int(didx.size()) != ctx_.nderiv)
    throw PolyError("derivative multi-index has wrong size");
  LocalizedPoly c = loc_normalize(coeff, ctx_.denom);
  if (c.is_zero()) return;
  auto it = terms_.find(didx);
  if (it == terms_.end()) {
    terms_.emplace(didx, std::move(c));
    return;
  }
  it->second = loc_add(it->second, c, ctx_.denom);
  if (it->second.is_zero()) terms_.erase(it);
}

int PolyDiffOp::order() const {
  int o = -1;
  for (const auto& [e, c] : terms_) o = std::max(o, total_degree(e));
  return o;
}

PolyDiffOp& PolyDiffOp::operator+=(const PolyDiffOp& o) {
  if (!(ctx_ == o.ctx_)) throw PolyError("operator contexts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator-=(const PolyDiffOp& o) {
  if (!(ctx_ == o.ctx_)) throw PolyError("operator contexts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, loc_scale(Scalar(-1), c));
  return *this;
}

PolyDiffOp PolyDiffOp::scaled(const Scalar& t) const {
  PolyDiffOp r(ctx_);
  if (t.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, loc_scale(t, c));
  return r;
}

LocalizedPoly PolyDiffOp::apply(const Poly& f) const {
  if (f.nvars != ctx_.nvars) throw PolyError("function has wrong variables");
  LocalizedPoly acc{Poly(ctx_.nvars), 0};
  for (const auto& [e, c] : terms_) {
    Poly g = f;
    for (int k = 0; k < ctx_.nderiv; ++k)
      for (int j = 0; j < e[k]; ++j) g = g.diff(k);
    if (g.is_zero()) continue;
    acc = loc_add(acc, loc_mul(c, {g, 0}, ctx_.denom), ctx_.denom);
  }
  return acc;
}

PolyDiffOp PolyDiffOp::at_point(const Vec& point) const {
  PolyDiffOp r(ctx_);
  for (const auto& [e, c] : terms_) {
    if (c.pow != 0) throw PolyError("cannot evaluate a localized coefficient");
    r.add_term(e, {Poly::constant(ctx_.nvars, c.num.eval(point)), 0});
  }
  return r;
}

bool operator==(const PolyDiffOp& a, const PolyDiffOp& b) {
  if (!(a.ctx_ == b.ctx_)) return false;
  PolyDiffOp d = a;
  d -= b;
  return d.is_zero();
}

std::string PolyDiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.num.str(ctx_.names);
    if (c.pow > 0)
      out += " / (" + ctx_.denom.str(ctx_.names) + ")^" +
             std::to_string(c.pow);
    out += "]";
    for (size_t k = 0; k < e.size(); ++k)
      for (int j = 0; j < e[k]; ++j)
        out += " d" +
               (k < ctx_.names.size() ? ctx_.names[k] : std::to_string(k));
  }
  return out;
}

PolyDiffOp compose(const PolyDiffOp& a, const PolyDiffOp& b) {
  if (!(a.ctx() == b.ctx())) throw PolyError("operator contexts differ");
  const DiffCtx& ctx = a.ctx();
  PolyDiffOp r(ctx);
  for (const auto& [ea, P] : a.terms()) {
    for (const auto& [eb, Q] : b.terms()) {
      // d^ea (Q d^eb) = sum_{c <= ea} binom(ea,c) (d^c Q) d^(ea-c+eb)
      Exps c(ctx.nderiv, 0);
      while (true) {
        long coeff = 1;
        for (int k = 0; k < ctx.nderiv; ++k) coeff *= binom(ea[k], c[k]);
        LocalizedPoly dq = Q;
        for (int k = 0; k < ctx.nderiv && !dq.is_zero(); ++k)
          for (int j = 0; j < c[k]; ++j) dq = loc_diff(dq, k, ctx.denom);
        if (!dq.is_zero()) {
          Exps idx = exps_add(exps_sub(ea, c), eb);
          r.add_term(idx, loc_mul(loc_scale(Scalar(coeff), P), dq, ctx.denom));
        }
        // odometer over c <= ea
        int k = 0;
        while (k < ctx.nderiv && c[k] == ea[k]) c[k++] = 0;
        if (k == ctx.nderiv) break;
        ++c[k];
      }
    }
  }
  return r;
}

PolyDiffOp commutator(const PolyDiffOp& a, const PolyDiffOp& b) {
  return compose(a, b) - compose(b, a);
}

}  // namespace jconf
